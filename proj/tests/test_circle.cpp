#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "polyneq/circle.hpp"

using namespace polyneq;

namespace {

Polynomial binom(double k, int n)
{
    return Polynomial(oracle::binomial(1.0, k, n));
}

Polynomial random_poly(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> g;
    std::vector<Complex> a(n + 1);
    for (auto& c : a)
        c = {g(rng), g(rng)};
    return Polynomial(a);
}

Polynomial rotate(const Polynomial& p, double phi)
{
    std::vector<Complex> a(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t j = 0; j < a.size(); ++j)
        a[j] *= std::polar(1.0, phi * static_cast<double>(j));
    return Polynomial(a);
}

} // namespace

TEST_CASE("max_modulus closed forms")
{
    const auto sq = max_modulus(binom(1.0, 2), 1.0);
    CHECK(oracle::rel_err(sq.value, 4.0) < 1e-14);
    CHECK(std::min(sq.arg_theta, 2 * std::numbers::pi - sq.arg_theta) < 1e-6);
    CHECK(sq.refined);

    const auto cube = max_modulus(binom(2.0, 3), 1.0);
    CHECK(oracle::rel_err(cube.value, 27.0) < 1e-14);

    for (int n = 1; n <= 8; ++n)
        for (const double k : {0.5, 1.0, 3.0})
            CHECK(oracle::rel_err(max_modulus(Polynomial::monomial(1.0, n), k).value, std::pow(k, n)) < 1e-14);

    CHECK(max_modulus(Polynomial::constant(-2.5), 1.0).value == 2.5);
    CHECK_THROWS_AS(max_modulus(binom(1.0, 2), 0.0), ContractError);
}

TEST_CASE("max_modulus on binomial families")
{
    for (int n = 1; n <= 12; ++n)
        for (const double k : {0.25, 0.5, 1.0, 1.5, 2.0, 5.0})
            CHECK(oracle::rel_err(max_modulus(binom(k, n), 1.0).value, std::pow(1.0 + k, n)) <= 1e-9);
}

TEST_CASE("max_modulus agrees with a dense grid")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        const auto p = random_poly(rng, 1 + t % 12);
        const double r = 0.5 + 0.05 * t;
        const double got = max_modulus(p, r).value;
        const double grid = oracle::grid_max(
            [&](oracle::LComplex z) { return oracle::LComplex(eval(p, {double(z.real()), double(z.imag())})); }, r);
        // the grid underestimates; refinement at most closes the gap
        CHECK(got >= grid * (1.0 - 1e-13));
        CHECK(got <= grid * (1.0 + 1e-6));
    }
}

TEST_CASE("max_modulus scaling covariance and rotation invariance")
{
    std::mt19937_64 rng(32);
    for (int t = 0; t < 500; ++t) {
        const int n = 1 + t % 10;
        const auto p = random_poly(rng, n);
        const double k = 0.3 + 0.01 * t;
        CHECK(oracle::rel_err(max_modulus(scale_domain(p, k), 1.0).value, max_modulus(p, k).value) <= 1e-11);
        CHECK(oracle::rel_err(max_modulus(rotate(p, 0.123 * t), 1.0).value, max_modulus(p, 1.0).value) <= 1e-11);
    }
}

TEST_CASE("pointwise ratio minimum")
{
    for (int n = 1; n <= 6; ++n) {
        const auto p = binom(1.0, n);
        const auto m = pointwise_ratio_min(derivative(p), p, 1.0);
        CHECK(oracle::rel_err(m.value, n / 2.0) < 1e-12);
        CHECK(std::min(m.theta, 2 * std::numbers::pi - m.theta) < 1e-5);
    }
    const auto p = binom(0.5, 4);
    CHECK(pointwise_ratio_min(p, p, 1.0).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pointwise_ratio_min(Polynomial::constant(0.0), p, 1.0).value == 0.0);
    CHECK_THROWS_AS(pointwise_ratio_min(p, Polynomial::constant(0.0), 1.0), ContractError);
}

TEST_CASE("pointwise dubinin minimum")
{
    for (int n = 1; n <= 6; ++n) {
        CHECK(oracle::rel_err(pointwise_dubinin_min(Polynomial::monomial(1.0, n), 1.0).value, n) < 1e-13);
        const auto p = binom(1.0, n);
        const double got = pointwise_dubinin_min(p, 1.0).value;
        // brute force over a fine grid away from the zero at z = -1
        long double best = 1e300;
        const int N = 1'000'000;
        for (int i = 0; i < N; ++i) {
            const long double t = 2.0L * std::numbers::pi_v<long double> * i / N;
            const oracle::LComplex z = {std::cos(t), std::sin(t)};
            if (std::abs(z + 1.0L) < 1e-3L)
                continue;
            best = std::min(best, (static_cast<long double>(n) * z / (z + 1.0L)).real());
        }
        // coefficient-form evaluation loses digits next to the zero at -1
        CHECK(std::abs(got - static_cast<double>(best)) < 1e-8 * n);
        CHECK(std::abs(got - n / 2.0) < 1e-8 * n);

        const RootForm r(1.0, std::vector<Complex>(n, -1.0));
        const std::vector<double> ones(n, 1.0);
        const auto via_roots = pointwise_root_min(r, ones, RootQuantity::DubininReal, 1.0);
        CHECK(std::abs(via_roots.value - n / 2.0) < 1e-10 * n);
        const auto ratio = pointwise_root_min(r, ones, RootQuantity::WeightedModulus, 1.0);
        CHECK(std::abs(ratio.value - n / 2.0) < 1e-10 * n);
    }
    CHECK(pointwise_dubinin_min(Polynomial{1.0, 1.0}, 1.0).value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("root-form pointwise minima agree with coefficient form")
{
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + t % 8;
        std::vector<Complex> z(n);
        std::vector<double> w(n);
        for (int j = 0; j < n; ++j) {
            z[j] = std::polar(0.9 * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
            w[j] = 0.2 + u(rng);
        }
        const RootForm r(std::polar(1.0, 0.5 * t), z);
        const Polynomial p = from_roots(r);
        const double a = pointwise_root_min(r, w, RootQuantity::WeightedModulus, 1.0).value;
        const double b = pointwise_ratio_min(generalized_derivative(r, GammaWeights(w)), p, 1.0).value;
        CHECK(oracle::rel_err(a, b) < 1e-9);
        const std::vector<double> ones(n, 1.0);
        const double c = pointwise_root_min(r, ones, RootQuantity::DubininReal, 1.0).value;
        const double d = pointwise_dubinin_min(p, 1.0).value;
        CHECK(std::abs(c - d) < 1e-9 * n);
    }
}

TEST_CASE("growth factor")
{
    for (int n = 0; n <= 6; ++n)
        CHECK(oracle::rel_err(growth_factor(Polynomial::monomial(2.0, n), 1.7), std::pow(1.7, n)) < 1e-13);
    CHECK(growth_factor(Polynomial::constant(3.0), 4.0) == 1.0);
    CHECK(oracle::rel_err(growth_factor(binom(1.0, 2), 2.0), 9.0 / 4.0) < 1e-13);
    CHECK_THROWS_AS(growth_factor(Polynomial::constant(0.0), 2.0), ContractError);
}

TEST_CASE("growth factor never exceeds R^n")
{
    std::mt19937_64 rng(33);
    for (int t = 0; t < 2000; ++t) {
        const int n = 1 + t % 10;
        const double R = 1.0 + 0.002 * t;
        CHECK(growth_factor(random_poly(rng, n), R) <= std::pow(R, n) * (1.0 + 1e-12));
    }
}

TEST_CASE("boundary growth check")
{
    for (int n = 1; n <= 5; ++n) {
        const RootForm mono(1.0, std::vector<Complex>(n, 0.0));
        for (const double k : {1.0, 1.5, 3.0}) {
            const auto rep = boundary_growth_check(mono, k);
            REQUIRE(rep.hypothesis_ok);
            CHECK(oracle::rel_err(rep.lhs, std::pow(k, n)) < 1e-13);
            CHECK(oracle::rel_err(rep.rhs, 2 * std::pow(k, n) / (1 + std::pow(k, n))) < 1e-13);
            CHECK(rep.equality_sharp == (k == 1.0));
        }
        const auto eq = boundary_growth_check(RootForm(1.0, std::vector<Complex>(n, -1.0)), 1.0);
        CHECK(oracle::rel_err(eq.lhs, std::pow(2.0, n)) < 1e-13);
        CHECK(eq.equality_sharp);
    }
    const auto rep = boundary_growth_check(RootForm(1.0, {-2.0, -2.0, -2.0}), 2.0);
    CHECK(oracle::rel_err(rep.lhs, 64.0) < 1e-13);
    CHECK(oracle::rel_err(rep.rhs, 48.0) < 1e-13);
    CHECK(rep.slack == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(*rep.pass);

    CHECK_FALSE(boundary_growth_check(RootForm(1.0, {3.0}), 2.0).hypothesis_ok);
    CHECK_FALSE(boundary_growth_check(RootForm(1.0, {0.5}), 0.9).hypothesis_ok);
}
