#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "polyneq/polynomial.hpp"
#include "polyneq/roots.hpp"

namespace polyneq {

/// Nonnegative weights gamma_1..gamma_n, not all zero, each bound to the
/// root at the same index. Carries the sum Lambda and the minimum gamma_m.
class GammaWeights {
public:
    explicit GammaWeights(std::vector<double> weights);
    static GammaWeights ones(int n);

    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    double lambda() const noexcept { return lambda_; }
    double gamma_min() const noexcept { return gamma_min_; }
    bool all_ones() const noexcept;

    friend bool operator==(const GammaWeights& a, const GammaWeights& b) { return a.weights_ == b.weights_; }

private:
    std::vector<double> weights_;
    double lambda_;
    double gamma_min_;
};

/// The pole alpha of a polar derivative.
struct PolarPoint {
    explicit PolarPoint(Complex a) : alpha(a)
    {
        if (!is_finite(a))
            throw ContractError("polar point must be finite");
    }
    Complex alpha;
    double modulus() const noexcept { return std::abs(alpha); }
};

/// P^gamma(z) = sum_j gamma_j c prod_{i != j}(z - z_i), degree slot n-1.
/// Built in product form, so the removable singularities of
/// P(z) sum gamma_j / (z - z_j) at z = z_j never arise.
Polynomial generalized_derivative(const RootForm& r, const GammaWeights& g);

/// D_alpha[P](z) = n P(z) + (alpha - z) P'(z), degree slot n-1 (the z^n
/// terms cancel identically and are dropped).
Polynomial polar_derivative(const Polynomial& p, PolarPoint a);

/// D_alpha^gamma[P](z) = Lambda P(z) + (alpha - z) P^gamma(z). Keeps degree
/// slot n; its top coefficient is c Lambda - c Lambda and should vanish to
/// rounding, which callers may verify.
Polynomial generalized_polar_derivative(const RootForm& r, const GammaWeights& g, PolarPoint a);

/// Signals that P(z) is too close to zero for z P'(z) / P(z) to be used.
class InadmissiblePoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Re(z P'(z) / P(z)). Throws InadmissiblePoint when |P(z)| < floor.
double dubinin_quantity(const Polynomial& p, Complex z, double floor);

/// |D_alpha[P](z) / alpha - P'(z)|, which equals |n P(z) - z P'(z)| / |alpha|.
double limit_ratio_defect(const Polynomial& p, PolarPoint a, Complex z);

} // namespace polyneq
