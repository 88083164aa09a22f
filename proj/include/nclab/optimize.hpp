#ifndef NCLAB_OPTIMIZE_HPP
#define NCLAB_OPTIMIZE_HPP

#include <array>
#include <cstdint>
#include <functional>

namespace nclab {

// Axis-aligned search region for up to three angles.
struct SearchBox {
    int dims = 1;
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{0.0, 0.0, 0.0};
    int resolution = 64;       // coarse grid points per dimension, >= 8
    double tolerance = 1e-8;   // golden-section bracket width target (radians)
};

struct OptimizationResult {
    double min_value = 0.0;
    std::array<double, 3> argmin{0.0, 0.0, 0.0};
    long evaluations = 0;
    bool converged = false;
};

// Deterministic global coarse-grid scan followed by round-robin per-axis
// golden-section refinement. Ties on the grid resolve to the lexicographically
// smallest point. The objective must be total and finite on the box.
OptimizationResult grid_refine_minimize(
    const std::function<double(const std::array<double, 3>&)>& objective, const SearchBox& box);

} // namespace nclab

#endif
