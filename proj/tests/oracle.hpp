// Reference implementations used only by the tests. They trade speed for
// obviousness: long double, direct summation, brute-force grids.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "polyneq/types.hpp"

namespace oracle {

using LComplex = std::complex<long double>;

inline LComplex widen(polyneq::Complex z)
{
    return {z.real(), z.imag()};
}

// sum a_j z^j with explicit powers
inline polyneq::Complex power_sum(std::span<const polyneq::Complex> a, polyneq::Complex z)
{
    LComplex acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        acc += widen(a[j]) * std::pow(widen(z), static_cast<int>(j));
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

// c prod (z - z_j)
inline LComplex product_form(polyneq::Complex c, std::span<const polyneq::Complex> roots, LComplex z)
{
    LComplex acc = widen(c);
    for (const auto r : roots)
        acc *= z - widen(r);
    return acc;
}

// P(z) sum gamma_j / (z - z_j), valid off the zero set
inline LComplex nagy_value(polyneq::Complex c, std::span<const polyneq::Complex> roots,
                           std::span<const double> gamma, LComplex z)
{
    LComplex s = 0;
    for (std::size_t j = 0; j < roots.size(); ++j)
        s += static_cast<long double>(gamma[j]) / (z - widen(roots[j]));
    return product_form(c, roots, z) * s;
}

// Binomial expansion of c (z + b)^n, index 0 = constant term.
inline std::vector<polyneq::Complex> binomial(polyneq::Complex c, polyneq::Complex b, int n)
{
    std::vector<polyneq::Complex> a(n + 1);
    long double choose = 1;
    for (int j = 0; j <= n; ++j) {
        const LComplex term = widen(c) * choose * std::pow(widen(b), n - j);
        a[j] = {static_cast<double>(term.real()), static_cast<double>(term.imag())};
        choose = choose * (n - j) / (j + 1);
    }
    return a;
}

// Dense grid maximum of |f| on |z| = r.
template <class F>
double grid_max(F&& f, double r, int samples = 1 << 17)
{
    long double best = 0;
    for (int i = 0; i < samples; ++i) {
        const long double t = 2.0L * std::numbers::pi_v<long double> * i / samples;
        const LComplex z = {r * std::cos(t), r * std::sin(t)};
        best = std::max(best, std::abs(LComplex(f(z))));
    }
    return static_cast<double>(best);
}

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace oracle
