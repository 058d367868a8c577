#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "polyneq/operators.hpp"

using namespace polyneq;
using namespace std::complex_literals;

namespace {

struct Sample {
    RootForm r;
    GammaWeights g;
    Complex alpha;
};

Sample random_sample(std::mt19937_64& rng, int n)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Complex> z(n);
    for (auto& x : z)
        x = std::polar(2.0 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
    std::vector<double> g(n);
    for (auto& w : g)
        w = 0.1 + 2.0 * u(rng);
    const Complex c = std::polar(0.5 + u(rng), 2.0 * std::numbers::pi * u(rng));
    const Complex a = std::polar(5.0 * u(rng), 2.0 * std::numbers::pi * u(rng));
    return {RootForm(c, z), GammaWeights(g), a};
}

double coeff_rel_diff(const Polynomial& a, const Polynomial& b)
{
    REQUIRE(a.degree() == b.degree());
    double diff = 0.0, scale = 0.0;
    for (int j = 0; j <= a.degree(); ++j) {
        diff = std::max(diff, std::abs(a[j] - b[j]));
        scale = std::max(scale, std::abs(b[j]));
    }
    return diff / std::max(scale, 1e-300);
}

} // namespace

TEST_CASE("gamma weights")
{
    const GammaWeights g({0.5, 2.0, 1.5});
    CHECK(g.lambda() == doctest::Approx(4.0));
    CHECK(g.gamma_min() == 0.5);
    CHECK_FALSE(g.all_ones());
    CHECK(GammaWeights::ones(4).all_ones());
    CHECK(GammaWeights::ones(4).lambda() == 4.0);
    CHECK(GammaWeights({1.0, 0.0}).gamma_min() == 0.0);
    CHECK_THROWS_AS(GammaWeights({0.0, 0.0}), ContractError);
    CHECK_THROWS_AS(GammaWeights({1.0, -2.0}), ContractError);
}

TEST_CASE("generalized derivative examples")
{
    const RootForm r(1.0, {1.0, -1.0});
    CHECK(generalized_derivative(r, GammaWeights({2.0, 3.0})) == Polynomial{-1.0, 5.0});

    const double w = 0.7;
    const Polynomial p = generalized_derivative(RootForm(1.0, {0.0, 0.0, 0.0}), GammaWeights({w, w, w}));
    CHECK(coeff_rel_diff(p, Polynomial{0.0, 0.0, 3.0 * w}) < 1e-15);

    CHECK_THROWS_AS(generalized_derivative(r, GammaWeights({1.0})), ContractError);
}

TEST_CASE("generalized derivative with unit weights is the derivative")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + t % 8;
        const auto s = random_sample(rng, n);
        CHECK(coeff_rel_diff(generalized_derivative(s.r, GammaWeights::ones(n)), derivative(from_roots(s.r)))
              <= 1e-10);
    }
}

TEST_CASE("generalized derivative matches P(z) sum gamma_j/(z - z_j)")
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 500; ++t) {
        const int n = 1 + t % 10;
        const auto s = random_sample(rng, n);
        const Polynomial pg = generalized_derivative(s.r, s.g);
        const Complex x = std::polar(3.0, 0.37 * t);
        const auto want = oracle::nagy_value(s.r.leading(), s.r.roots(), s.g.weights(), oracle::widen(x));
        CHECK(std::abs(oracle::LComplex(eval(pg, x)) - want) <= 1e-11 * std::max(1.0L, std::abs(want)));
    }
}

TEST_CASE("generalized derivative is linear in gamma")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 8;
        const auto a = random_sample(rng, n);
        const auto b = random_sample(rng, n);
        std::vector<double> sum(n);
        for (int j = 0; j < n; ++j)
            sum[j] = a.g.weights()[j] + b.g.weights()[j];
        const Polynomial lhs = generalized_derivative(a.r, GammaWeights(sum));
        const Polynomial rhs = generalized_derivative(a.r, a.g) + generalized_derivative(a.r, b.g);
        CHECK(coeff_rel_diff(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("polar derivative examples")
{
    for (int n = 1; n <= 6; ++n) {
        const Complex a = 1.5 - 2.0i;
        const Polynomial d = polar_derivative(Polynomial::monomial(1.0, n), PolarPoint(a));
        CHECK(d.degree() == n - 1);
        CHECK(coeff_rel_diff(d, Polynomial::monomial(static_cast<double>(n) * a, n - 1)) < 1e-15);

        const double ar = 3.0;
        const Polynomial b = polar_derivative(Polynomial(oracle::binomial(1.0, 1.0, n)), PolarPoint(ar));
        const Polynomial want(oracle::binomial(n * (1.0 + ar), 1.0, n - 1));
        CHECK(coeff_rel_diff(b, want) < 1e-14);
    }
    const Polynomial c = polar_derivative(Polynomial{1.0, 0.0, 1.0}, PolarPoint(0.0));
    CHECK(c.effective_degree() == 0);
    CHECK(c[0] == Complex(2.0));
}

TEST_CASE("generalized polar derivative examples")
{
    const Polynomial d = generalized_polar_derivative(RootForm(1.0, {1.0, -1.0}), GammaWeights({2.0, 3.0}),
                                                      PolarPoint(0.0));
    CHECK(d.effective_degree() == 1);
    CHECK(std::abs(d[0] + 5.0) < 1e-15);
    CHECK(std::abs(d[1] - 1.0) < 1e-15);

    const double w = 1.7;
    const Complex a = 0.3 + 0.9i;
    const Polynomial e = generalized_polar_derivative(RootForm(1.0, {0.0}), GammaWeights({w}), PolarPoint(a));
    CHECK(e.effective_degree() == 0);
    CHECK(std::abs(e[0] - w * a) < 1e-15);
}

TEST_CASE("generalized polar derivative reduces and matches its definition")
{
    std::mt19937_64 rng(24);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + t % 8;
        const auto s = random_sample(rng, n);
        const PolarPoint a(s.alpha);
        const Polynomial ones = generalized_polar_derivative(s.r, GammaWeights::ones(n), a);
        CHECK(ones.effective_degree() <= n - 1);
        CHECK(coeff_rel_diff(with_degree_slot(ones, n - 1), polar_derivative(from_roots(s.r), a)) <= 1e-10);

        const Polynomial dg = generalized_polar_derivative(s.r, s.g, a);
        CHECK(dg.effective_degree() <= n - 1);
        const Complex x = std::polar(1.0, 0.91 * t);
        const auto X = oracle::widen(x);
        const auto want = static_cast<long double>(s.g.lambda()) * oracle::product_form(s.r.leading(), s.r.roots(), X)
            + (oracle::widen(s.alpha) - X) * oracle::nagy_value(s.r.leading(), s.r.roots(), s.g.weights(), X);
        const long double scale = std::abs(s.r.leading()) * std::pow(3.0L, n) * (s.g.lambda() + 8.0);
        CHECK(std::abs(oracle::LComplex(eval(dg, x)) - want) <= 1e-12L * scale);
    }
}

TEST_CASE("dubinin quantity")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(dubinin_quantity(Polynomial::monomial(1.0, n), std::polar(1.0, 0.4 * n), 1e-12)
              == doctest::Approx(n).epsilon(1e-14));
    CHECK(dubinin_quantity(Polynomial{1.0, 2.0, 1.0}, 1.0, 1e-12) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(dubinin_quantity(Polynomial{1.0, 1.0}, -1.0, 1e-12), InadmissiblePoint);
}

TEST_CASE("polar limit defect")
{
    CHECK(limit_ratio_defect(Polynomial{0.0, 0.0, 1.0}, PolarPoint(1e6), 1.0) == 0.0);
    CHECK(limit_ratio_defect(Polynomial{1.0, 0.0, 1.0}, PolarPoint(1000.0), 1.0)
          == doctest::Approx(0.002).epsilon(1e-12));
    CHECK_THROWS_AS(limit_ratio_defect(Polynomial{1.0, 1.0}, PolarPoint(0.5), 1.0), ContractError);
}
