#pragma once

#include <cstddef>
#include <span>

#include "polyneq/polynomial.hpp"
#include "polyneq/report.hpp"
#include "polyneq/roots.hpp"

namespace polyneq {

/// Estimated max_{|z|=r} |q(z)|, with the grid it converged on.
struct MaxModEstimate {
    double value = 0.0;
    double arg_theta = 0.0; ///< in [0, 2 pi)
    std::size_t grid_size = 0;
    bool refined = false;   ///< rel_gap fell below kMaxModConvergence
    double rel_gap = 0.0;   ///< relative change over the last grid doubling
};

inline constexpr double kMaxModConvergence = 1e-12;
inline constexpr int kMaxModDoublings = 3;

/// Samples |q|^2 on N = max(1024, 128 n) equispaced angles, refines the
/// sampled local maxima by golden-section search to angular width 1e-14 and
/// doubles N until the refined maximum settles (at most kMaxModDoublings).
///
/// Local maxima whose sampled value is provably too low to hold the global
/// maximum are not refined: |q(e^{i theta})|^2 is a trigonometric polynomial of
/// degree n, so by Bernstein's inequality a sample at distance <= pi/N from a
/// peak of height M is at least M (1 - n^2 pi^2 / (2 N^2)).
MaxModEstimate max_modulus(const Polynomial& q, double r);

/// Minimum over the circle |z| = r of a pointwise quantity, restricted to
/// admissible samples.
struct PointwiseMinimum {
    double value = 0.0;
    double theta = 0.0;
    std::size_t grid_size = 0;
    std::size_t admissible = 0;
};

/// No sample on the circle passed the admissibility screen.
class NoAdmissibleSamples : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// min |num| / |den| over samples with |den| >= floor_frac * max|den|, on a
/// grid of max(4096, 256 n) angles, refining the 8 smallest local minima.
PointwiseMinimum pointwise_ratio_min(const Polynomial& num, const Polynomial& den, double r,
                                     double floor_frac = kFloorFrac);

/// min Re(z P'(z) / P(z)) over the same admissible grid.
PointwiseMinimum pointwise_dubinin_min(const Polynomial& p, double r, double floor_frac = kFloorFrac);

enum class RootQuantity {
    DubininReal,     ///< Re(sum w_j z / (z - z_j)); Re(zP'/P) for unit weights
    WeightedModulus, ///< |sum w_j / (z - z_j)| = |P^w(z)| / |P(z)|
};

/// Same sampling and refinement as the coefficient versions above, but the
/// quantity is summed over the zeros, which keeps it accurate next to a zero.
/// Admissibility still compares |P(z)| against floor_frac * max |P| on the grid.
PointwiseMinimum pointwise_root_min(const RootForm& roots, std::span<const double> weights, RootQuantity q,
                                    double r, double floor_frac = kFloorFrac);


/// max_{|z|=R}|p| / max_{|z|=1}|p|, R >= 1.
double growth_factor(const Polynomial& p, double R);

/// max_{|z|=k}|P| >= 2k^n / (1 + k^n) max_{|z|=1}|P| for zeros in |z| <= k, k >= 1.
CheckReport boundary_growth_check(const RootForm& r, double k, const Tolerances& tol = {});

} // namespace polyneq
