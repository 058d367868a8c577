#include "polyneq/operators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace polyneq {

GammaWeights::GammaWeights(std::vector<double> weights) : weights_(std::move(weights))
{
    if (weights_.empty())
        throw ContractError("gamma weights must not be empty");
    for (const double w : weights_)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw ContractError("gamma weights must be finite and nonnegative");
    lambda_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    gamma_min_ = *std::min_element(weights_.begin(), weights_.end());
    if (!(lambda_ > 0.0))
        throw ContractError("gamma weights must not all be zero");
}

GammaWeights GammaWeights::ones(int n)
{
    if (n < 1)
        throw ContractError("gamma weights need n >= 1");
    return GammaWeights(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

bool GammaWeights::all_ones() const noexcept
{
    return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
}

namespace {

void require_pairing(const RootForm& r, const GammaWeights& g)
{
    if (r.degree() < 1)
        throw ContractError("generalized derivative needs degree >= 1");
    if (static_cast<int>(g.size()) != r.degree())
        throw ContractError("gamma length " + std::to_string(g.size()) + " does not match degree "
                            + std::to_string(r.degree()));
}

} // namespace

Polynomial generalized_derivative(const RootForm& r, const GammaWeights& g)
{
    require_pairing(r, g);
    const auto roots = r.roots();
    const std::size_t n = roots.size();
    std::vector<Complex> acc(n, Complex{});
    std::vector<Complex> part;
    part.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double w = g.weights()[j];
        if (w == 0.0)
            continue;
        part.assign(1, r.leading());
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j)
                continue;
            part.push_back(part.back());
            for (std::size_t m = part.size() - 2; m > 0; --m)
                part[m] = part[m - 1] - roots[i] * part[m];
            part[0] = -roots[i] * part[0];
        }
        for (std::size_t m = 0; m < n; ++m)
            acc[m] += w * part[m];
    }
    return Polynomial(std::move(acc));
}

Polynomial polar_derivative(const Polynomial& p, PolarPoint a)
{
    const int n = p.degree();
    if (n < 1)
        throw ContractError("polar derivative needs degree >= 1");
    const Polynomial dp = derivative(p);
    const double nd = static_cast<double>(n);
    // coefficient j (< n): n a_j + alpha (j+1) a_{j+1} - j a_j
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        out[uj] = (nd - static_cast<double>(j)) * p[uj] + a.alpha * dp[uj];
    }
    return Polynomial(std::move(out));
}

Polynomial generalized_polar_derivative(const RootForm& r, const GammaWeights& g, PolarPoint a)
{
    const Polynomial pg = generalized_derivative(r, g);
    const Polynomial p = from_roots(r);
    const std::size_t n = static_cast<std::size_t>(r.degree());
    std::vector<Complex> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        out[j] = g.lambda() * p[j];
    for (std::size_t j = 0; j < n; ++j) {
        out[j] += a.alpha * pg[j];
        out[j + 1] -= pg[j];
    }
    // Lambda c z^n - z (Lambda c z^{n-1}) cancels exactly
    out[n] = Complex{};
    return Polynomial(std::move(out));
}

double dubinin_quantity(const Polynomial& p, Complex z, double floor)
{
    const Complex value = eval(p, z);
    if (std::abs(value) < floor)
        throw InadmissiblePoint("P(z) is below the admissibility floor; z P'(z)/P(z) is not used there");
    const Complex slope = eval(derivative(p), z);
    return std::real(z * slope / value);
}

double limit_ratio_defect(const Polynomial& p, PolarPoint a, Complex z)
{
    if (!(a.modulus() >= 1.0))
        throw ContractError("limit_ratio_defect needs |alpha| >= 1");
    // D_a P / a and P' agree to leading order, so the difference is formed in
    // extended precision
    using LC = std::complex<long double>;
    const auto c = p.coeffs();
    const LC x(z.real(), z.imag());
    LC v = LC(c.back().real(), c.back().imag());
    LC dv = 0.0L;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        dv = dv * x + v;
        v = v * x + LC(c[j].real(), c[j].imag());
    }
    const LC alpha(a.alpha.real(), a.alpha.imag());
    const LC d = static_cast<long double>(p.degree()) * v + (alpha - x) * dv;
    return static_cast<double>(std::abs(d / alpha - dv));
}

} // namespace polyneq
