#include "nclab/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace nclab {

namespace {

// Golden-section minimization of f over [a, b]; returns the bracket midpoint.
double golden_section(const std::function<double(double)>& f, double a, double b, double tol,
                      long& evals) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    evals += 2;
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    return 0.5 * (a + b);
}

} // namespace

OptimizationResult grid_refine_minimize(
    const std::function<double(const std::array<double, 3>&)>& objective, const SearchBox& box) {
    if (box.dims < 1 || box.dims > 3)
        throw std::invalid_argument("grid_refine_minimize: dims must be 1..3");
    if (box.resolution < 8) throw std::invalid_argument("grid_refine_minimize: resolution < 8");
    if (!(box.tolerance > 0.0)) throw std::invalid_argument("grid_refine_minimize: tolerance <= 0");
    for (int k = 0; k < box.dims; ++k)
        if (!(box.lo[k] < box.hi[k]))
            throw std::invalid_argument("grid_refine_minimize: empty interval");

    OptimizationResult res;
    std::array<double, 3> x{box.lo[0], box.lo[1], box.lo[2]};
    std::array<long, 3> n{1, 1, 1};
    std::array<double, 3> step{0.0, 0.0, 0.0};
    for (int k = 0; k < box.dims; ++k) {
        n[k] = box.resolution;
        step[k] = (box.hi[k] - box.lo[k]) / static_cast<double>(box.resolution);
    }

    // Coarse scan. Iteration order is lexicographic, and only strictly better
    // values replace the incumbent, which implements the tie-breaking rule.
    double best = std::numeric_limits<double>::infinity();
    std::array<double, 3> bestx = x;
    std::array<double, 3> probe{box.lo[0], box.lo[1], box.lo[2]};
    for (long i = 0; i < n[0]; ++i) {
        probe[0] = box.lo[0] + step[0] * static_cast<double>(i);
        for (long j = 0; j < n[1]; ++j) {
            if (box.dims >= 2) probe[1] = box.lo[1] + step[1] * static_cast<double>(j);
            for (long k = 0; k < n[2]; ++k) {
                if (box.dims >= 3) probe[2] = box.lo[2] + step[2] * static_cast<double>(k);
                const double v = objective(probe);
                ++res.evaluations;
                if (v < best) {
                    best = v;
                    bestx = probe;
                }
            }
        }
    }

    // Round-robin golden-section refinement, shrinking the bracket each pass.
    // A pass that no longer improves the incumbent marks convergence.
    std::array<double, 3> width{};
    for (int k = 0; k < box.dims; ++k) width[k] = step[k];
    const int max_passes = 12;
    res.converged = false;
    for (int pass = 0; pass < max_passes; ++pass) {
        const double before = best;
        for (int axis = 0; axis < box.dims; ++axis) {
            const double lo = std::max(box.lo[axis], bestx[axis] - width[axis]);
            const double hi = std::min(box.hi[axis], bestx[axis] + width[axis]);
            if (hi - lo <= box.tolerance) continue;
            std::array<double, 3> y = bestx;
            const double xin = golden_section(
                [&](double t) {
                    y[axis] = t;
                    return objective(y);
                },
                lo, hi, box.tolerance, res.evaluations);
            y[axis] = xin;
            const double v = objective(y);
            ++res.evaluations;
            if (v < best) {
                best = v;
                bestx = y;
            }
        }
        for (int k = 0; k < box.dims; ++k) width[k] = std::max(width[k] * 0.25, box.tolerance);
        if (pass >= 2 && before - best <= 1e-9 * std::max(1.0, std::abs(best))) {
            res.converged = true;
            break;
        }
    }

    res.min_value = best;
    res.argmin = bestx;
    return res;
}

} // namespace nclab
