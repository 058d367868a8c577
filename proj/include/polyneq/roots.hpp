#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "polyneq/polynomial.hpp"

namespace polyneq {

/// c (z - z_1)(z - z_2)...(z - z_n). Multiplicity is expressed by repetition.
class RootForm {
public:
    RootForm(Complex leading, std::vector<Complex> roots);

    Complex leading() const noexcept { return leading_; }
    std::span<const Complex> roots() const noexcept { return roots_; }
    int degree() const noexcept { return static_cast<int>(roots_.size()); }

    friend bool operator==(const RootForm&, const RootForm&) = default;

private:
    Complex leading_;
    std::vector<Complex> roots_;
};

/// Expands leading * prod (z - z_j); a_n == leading.
Polynomial from_roots(const RootForm& r);

/// max_j |p(z_j)| / (|a_n| max(1, |z_j|)^n).
double normalized_residual(const Polynomial& p, std::span<const Complex> roots);

/// find_roots could not meet the residual tolerance within the iteration cap.
class RootFindError : public std::runtime_error {
public:
    RootFindError(RootForm best, double residual, int iterations);

    const RootForm& best() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    RootForm best_;
    double residual_;
    int iterations_;
};

inline constexpr int kAberthMaxIterations = 500;

/// Aberth-Ehrlich simultaneous iteration. Exact zeros at the origin are split
/// off before iterating; clusters whose Newton inclusion disks overlap are
/// collapsed onto their centroid when that lowers the residual, which recovers
/// multiple roots far beyond the eps^(1/m) accuracy of the raw iterates.
RootForm find_roots(const Polynomial& p, double tol = kResidualTol);

/// max_j |z_j| <= k (1 + tol); vacuously true without roots.
bool zeros_in_disk(const RootForm& r, double k, double tol = kPredicateTol);

} // namespace polyneq
