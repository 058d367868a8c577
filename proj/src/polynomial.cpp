#include "polyneq/polynomial.hpp"

#include <algorithm>
#include <string>

namespace polyneq {

namespace {

void require_finite(std::span<const Complex> coeffs)
{
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!is_finite(coeffs[j]))
            throw ContractError("non-finite polynomial coefficient at index " + std::to_string(j));
}

} // namespace

Polynomial::Polynomial() : coeffs_{Complex{}} {}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw ContractError("polynomial needs at least one coefficient");
    require_finite(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs))
{
}

Polynomial Polynomial::constant(Complex c)
{
    return Polynomial(std::vector<Complex>{c});
}

Polynomial Polynomial::monomial(Complex c, int n)
{
    if (n < 0)
        throw ContractError("monomial degree must be nonnegative");
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
    a.back() = c;
    return Polynomial(std::move(a));
}

int Polynomial::effective_degree() const noexcept
{
    for (int j = degree(); j >= 0; --j)
        if (coeffs_[static_cast<std::size_t>(j)] != Complex{})
            return j;
    return -1;
}

Complex Polynomial::operator()(Complex z) const noexcept
{
    return eval(*this, z);
}

Polynomial operator+(const Polynomial& p, const Polynomial& q)
{
    std::vector<Complex> a(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t j = 0; j < p.coeffs_.size(); ++j)
        a[j] += p.coeffs_[j];
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
        a[j] += q.coeffs_[j];
    return Polynomial(std::move(a));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q)
{
    return p + Complex(-1.0) * q;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    std::vector<Complex> a(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            a[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(a));
}

Polynomial operator*(Complex s, const Polynomial& p)
{
    std::vector<Complex> a(p.coeffs_);
    for (auto& c : a)
        c *= s;
    return Polynomial(std::move(a));
}

void require_proper(const Polynomial& p, const char* what)
{
    if (p.degenerate())
        throw ContractError(std::string(what) + ": leading coefficient must be nonzero");
}

Complex eval(const Polynomial& p, Complex z) noexcept
{
    // Written out in real arithmetic: std::complex multiplication goes through
    // the Annex G NaN-recovery path, which dominates the circle scans.
    const auto a = p.coeffs();
    const double zr = z.real();
    const double zi = z.imag();
    double re = a.back().real();
    double im = a.back().imag();
    for (std::size_t j = a.size() - 1; j-- > 0;) {
        const double t = re * zr - im * zi + a[j].real();
        im = re * zi + im * zr + a[j].imag();
        re = t;
    }
    return {re, im};
}

Polynomial derivative(const Polynomial& p)
{
    const int n = p.degree();
    if (n == 0)
        return Polynomial();
    std::vector<Complex> a(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        a[static_cast<std::size_t>(j)] = static_cast<double>(j + 1) * p[static_cast<std::size_t>(j) + 1];
    return Polynomial(std::move(a));
}

Polynomial scale_domain(const Polynomial& p, double k)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw ContractError("scale_domain: k must be positive and finite");
    std::vector<Complex> a(p.coeffs().begin(), p.coeffs().end());
    double kj = 1.0;
    for (auto& c : a) {
        c *= kj;
        kj *= k;
    }
    return Polynomial(std::move(a));
}

Polynomial with_degree_slot(const Polynomial& p, int n)
{
    if (n < 0)
        throw ContractError("degree slot must be nonnegative");
    std::vector<Complex> a(p.coeffs().begin(), p.coeffs().end());
    while (static_cast<int>(a.size()) > n + 1) {
        if (a.back() != Complex{})
            throw ContractError("with_degree_slot: cannot drop a nonzero coefficient");
        a.pop_back();
    }
    a.resize(static_cast<std::size_t>(n) + 1);
    return Polynomial(std::move(a));
}

} // namespace polyneq
