#ifndef NCLAB_ENSEMBLES_HPP
#define NCLAB_ENSEMBLES_HPP

#include <cstdint>
#include <utility>

#include "nclab/fock.hpp"
#include "nclab/gaussian.hpp"
#include "nclab/rng.hpp"

namespace nclab {

// Seeded state ensembles shared by the CLI commands and the test suites.
// Every function derives its own SplitMix64 stream from (seed, index) so
// samples are reproducible regardless of evaluation order.

// Separable two-mode Gaussian product of two random squeezed-thermal states.
TwoModeCovariance random_separable_gaussian(std::uint64_t seed, std::uint64_t index);

// Classical two-mode Gaussian product (thermal states, lambda >= 1); null
// model for the noise-area nonclassicality conditions.
TwoModeCovariance random_classical_gaussian(std::uint64_t seed, std::uint64_t index);

// Entangled Gaussian state for the noise-area observation experiments:
// even indices give TMSV(r) under random local rotations, odd indices a
// pi/4 beam-splitter mix of two collinear-phase squeezed inputs (aligned or
// orthogonal), again followed by random local rotations. This is the family
// on which the minimized DGCZ area reproduces the logarithmic negativity;
// see README "Observation experiments" for the boundary of that statement.
struct ObservationSample {
    TwoModeCovariance state;
    bool is_tmsv;
    double r1, r2;     // input squeezing parameters (r2 unused for TMSV)
    double theta_bs;   // pi/4 for BS samples, 0 for TMSV
    bool orthogonal;   // BS input alignment
};
ObservationSample random_observation_state(std::uint64_t seed, std::uint64_t index);

// Haar-like random single-mode pure state at dimension d.
FockState random_pure_fock(SplitMix64& rng, int d);

// Separable two-mode Fock mixture: K <= 5 product components with uniform
// Dirichlet weights and Haar-random single-mode factors.
TwoModeEnsemble random_separable_fock(std::uint64_t seed, std::uint64_t index, int d);

// Classical two-mode Fock mixture: K <= 5 coherent-product components,
// |alpha| <= 1.5, evaluated at dimension d (null model for the
// nonclassicality conditions).
TwoModeEnsemble random_classical_fock(std::uint64_t seed, std::uint64_t index, int d);

// Haar-random two-mode pure state at dimension d per mode.
TwoModeFockState random_entangled_candidate(std::uint64_t seed, std::uint64_t index, int d);

} // namespace nclab

#endif
