#include "nclab/ensembles.hpp"

#include <cmath>

namespace nclab {

namespace {
constexpr double kPi = 3.141592653589793238462643383280;
} // namespace

TwoModeCovariance random_separable_gaussian(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng(seed, index);
    const SingleModeGaussian s1 = random_single_mode(rng);
    const SingleModeGaussian s2 = random_single_mode(rng);
    Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
    v.block<2, 2>(0, 0) = block_from_single_mode(s1);
    v.block<2, 2>(2, 2) = block_from_single_mode(s2);
    return TwoModeCovariance(v);
}

TwoModeCovariance random_classical_gaussian(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng(seed, index);
    const SingleModeGaussian s1 = SingleModeGaussian::thermal(rng.uniform(0.0, 1.0));
    const SingleModeGaussian s2 = SingleModeGaussian::thermal(rng.uniform(0.0, 1.0));
    Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
    v.block<2, 2>(0, 0) = block_from_single_mode(s1);
    v.block<2, 2>(2, 2) = block_from_single_mode(s2);
    return TwoModeCovariance(v);
}

ObservationSample random_observation_state(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng(seed, index);
    const double phi1 = rng.uniform(0.0, kPi);
    const double phi2 = rng.uniform(0.0, kPi);
    if (index % 2 == 0) {
        const double r = rng.uniform(0.1, 1.2);
        return {local_rotation(two_mode_squeezed_vacuum(r), phi1, phi2), true, r, 0.0, 0.0,
                false};
    }
    const double r1 = rng.uniform(0.1, 1.2);
    const bool orthogonal = rng.next_double() < 0.5;
    // Aligned pairs with r1 == r2 are separable; keep the gap away from zero
    // so every sample is distinctly entangled.
    double r2 = rng.uniform(0.1, 1.2);
    if (!orthogonal)
        while (std::abs(r1 - r2) < 0.08) r2 = rng.uniform(0.1, 1.2);
    const SingleModeGaussian in1 = SingleModeGaussian::squeezed(r1, 0.0);
    const SingleModeGaussian in2 = SingleModeGaussian::squeezed(r2, orthogonal ? kPi / 2.0 : 0.0);
    const TwoModeCovariance mixed = bs_mix(in1, in2, kPi / 4.0);
    return {local_rotation(mixed, phi1, phi2), false, r1, r2, kPi / 4.0, orthogonal};
}

FockState random_pure_fock(SplitMix64& rng, int d) {
    // Support stops two levels below the truncation so that quadratic
    // operator moments (two raises) are computed without clipping.
    const int support = std::max(2, d - 2);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    for (int n = 0; n < support; ++n)
        v(n) = std::complex<double>(rng.next_normal(), rng.next_normal());
    return {v / v.norm(), d};
}

TwoModeEnsemble random_separable_fock(std::uint64_t seed, std::uint64_t index, int d) {
    SplitMix64 rng(seed, index);
    const int k = 1 + static_cast<int>(rng.next_u64() % 5);
    TwoModeEnsemble ens;
    ens.dim = d;
    double wsum = 0.0;
    std::vector<double> w(k);
    for (int i = 0; i < k; ++i) {
        w[i] = -std::log(1.0 - rng.next_double());
        wsum += w[i];
    }
    for (int i = 0; i < k; ++i) {
        const FockState f1 = random_pure_fock(rng, d);
        const FockState f2 = random_pure_fock(rng, d);
        ens.components.push_back({w[i] / wsum, tensor_product(f1, f2)});
    }
    return ens;
}

TwoModeEnsemble random_classical_fock(std::uint64_t seed, std::uint64_t index, int d) {
    SplitMix64 rng(seed, index);
    const int k = 1 + static_cast<int>(rng.next_u64() % 5);
    TwoModeEnsemble ens;
    ens.dim = d;
    double wsum = 0.0;
    std::vector<double> w(k);
    for (int i = 0; i < k; ++i) {
        w[i] = -std::log(1.0 - rng.next_double());
        wsum += w[i];
    }
    for (int i = 0; i < k; ++i) {
        const double m1 = rng.uniform(0.2, 1.5), t1 = rng.uniform(0.0, 2.0 * kPi);
        const double m2 = rng.uniform(0.2, 1.5), t2 = rng.uniform(0.0, 2.0 * kPi);
        const FockState c1 = coherent_state(std::polar(m1, t1), d);
        const FockState c2 = coherent_state(std::polar(m2, t2), d);
        ens.components.push_back({w[i] / wsum, tensor_product(c1, c2)});
    }
    return ens;
}

TwoModeFockState random_entangled_candidate(std::uint64_t seed, std::uint64_t index, int d) {
    SplitMix64 rng(seed, index);
    const int support = std::max(2, d - 2);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * d);
    for (int n1 = 0; n1 < support; ++n1)
        for (int n2 = 0; n2 < support; ++n2)
            v(n1 * d + n2) = std::complex<double>(rng.next_normal(), rng.next_normal());
    return {v / v.norm(), d};
}

} // namespace nclab
