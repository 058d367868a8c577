#include <doctest.h>

#include "polyneq/ensemble.hpp"
#include "polyneq/interchange.hpp"
#include "polyneq/philox.hpp"

using namespace polyneq;
using enum InequalityId;

TEST_CASE("philox known-answer vectors")
{
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::generate(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff})
          == C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0})
          == C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter streams are independent of draw order across trials")
{
    CounterStream a(42, 7, StreamTag::Zeros);
    CounterStream b(42, 7, StreamTag::Zeros);
    CounterStream other(42, 8, StreamTag::Zeros);
    for (int i = 0; i < 10; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(x != other.uniform());
    }
}

TEST_CASE("sample_instance")
{
    EnsembleConfig cfg;
    cfg.degree = 6;
    cfg.k = 2.0;
    cfg.zero_mode = ZeroMode::Boundary;
    for (std::uint64_t t = 0; t < 50; ++t) {
        const Instance inst = sample_instance(cfg, t);
        REQUIRE(inst.roots.degree() == 6);
        for (const auto z : inst.roots.roots())
            CHECK(std::abs(std::abs(z) - 2.0) < 1e-12);
        CHECK(std::abs(std::abs(inst.roots.leading()) - 1.0) < 1e-15);
        CHECK(inst.gamma.all_ones());
        CHECK(inst.gamma.lambda() == 6.0);
    }

    cfg.zero_mode = ZeroMode::Clustered;
    cfg.gamma_mode = GammaMode::Exp1;
    const Instance a = sample_instance(cfg, 99, AlphaConstraint::AtLeastK);
    const Instance b = sample_instance(cfg, 99, AlphaConstraint::AtLeastK);
    CHECK(a.roots == b.roots);
    CHECK(a.gamma == b.gamma);
    REQUIRE(a.alpha.has_value());
    CHECK(a.alpha->alpha == b.alpha->alpha);
    CHECK(a.alpha->modulus() >= 2.0);
    for (const auto z : a.roots.roots())
        CHECK(std::abs(z) <= 2.0);

    cfg.zero_mode = ZeroMode::DiskUniform;
    cfg.gamma_mode = GammaMode::Uniform01;
    for (std::uint64_t t = 0; t < 200; ++t) {
        const Instance inst = sample_instance(cfg, t, AlphaConstraint::AtLeastOne);
        for (const auto z : inst.roots.roots())
            CHECK(std::abs(z) <= 2.0);
        for (const double g : inst.gamma.weights()) {
            CHECK(g > 0.0);
            CHECK(g <= 1.0);
        }
        CHECK(inst.alpha->modulus() > 2.0 * (1 + 1e-6));
    }
}

TEST_CASE("scan examples")
{
    EnsembleConfig cfg;
    cfg.degree = 5;
    const ScanReport turan = scan(TURAN_2, cfg);
    CHECK(turan.checked == 1000);
    CHECK(turan.violations == 0);

    cfg.degree = 4;
    cfg.k = 2.0;
    const ScanReport thm1 = scan(THM1_11, cfg);
    CHECK(thm1.violations == 0);
    REQUIRE(thm1.min_slack.has_value());
    CHECK(*thm1.min_slack > 0.0);

    cfg.k = 0.5;
    CHECK_THROWS_AS(scan(THM1_11, cfg), ContractError);
}

TEST_CASE("hostile config fails every hypothesis")
{
    EnsembleConfig cfg;
    cfg.degree = 4;
    cfg.k = 1.0;
    cfg.trials = 300;
    cfg.zero_mode = ZeroMode::Boundary;
    cfg.zero_radius_factor = 1.5;
    for (const auto id : {TURAN_2, MALIK_5, THM1_11, THM_I, LEMMA3_13}) {
        const ScanReport rep = scan(id, cfg);
        CHECK(rep.checked == 0);
        CHECK(rep.violations == 0);
        CHECK_FALSE(rep.min_slack.has_value());
    }
}

TEST_CASE("scan is independent of the worker count")
{
    EnsembleConfig cfg;
    cfg.degree = 6;
    cfg.k = 0.5;
    cfg.trials = 777;
    cfg.gamma_mode = GammaMode::Uniform01;
    const auto one = to_json(scan(THM_H, cfg, 1)).dump();
    const auto three = to_json(scan(THM_H, cfg, 3)).dump();
    const auto again = to_json(scan(THM_H, cfg, 1)).dump();
    CHECK(one == three);
    CHECK(one == again);
}

TEST_CASE("sharpness probes")
{
    const auto malik = sharpness_probe(MALIK_5, ProbeFamily::BinomK, {4}, {0.5});
    REQUIRE(malik.size() == 1);
    CHECK(std::abs(malik[0].rel_slack) <= 1e-8);

    const auto thm1 = sharpness_probe(THM1_11, ProbeFamily::BinomK, {3}, {1.0, 2.0});
    REQUIRE(thm1.size() == 2);
    CHECK(std::abs(thm1[0].rel_slack) <= 1e-8);
    CHECK(thm1[1].rel_slack == doctest::Approx(2.0).epsilon(1e-8));

    const std::vector<double> alphas{2, 10, 100, 1e6};
    const auto thmi = sharpness_probe(THM_I, ProbeFamily::BinomK, {4}, {1.0}, alphas);
    REQUIRE(thmi.size() == alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        CHECK(thmi[i].rel_slack == doctest::Approx(2.0 / (alphas[i] - 1.0)).epsilon(1e-6));
        if (i > 0)
            CHECK(thmi[i].rel_slack < thmi[i - 1].rel_slack);
    }

    const auto bern = sharpness_probe(BERN_1, ProbeFamily::Monomial, {1, 3, 7}, {1.0});
    for (const auto& r : bern)
        CHECK(std::abs(r.rel_slack) <= 1e-12);
    const auto turan = sharpness_probe(TURAN_2, ProbeFamily::AlphaZnBeta, {2, 5}, {1.0});
    for (const auto& r : turan)
        CHECK(std::abs(r.rel_slack) <= 1e-8);
}

TEST_CASE("falsifier")
{
    EnsembleConfig cfg;
    cfg.degree = 4;
    cfg.k = 1.0;
    cfg.trials = 200;

    const FalsifyResult zero = falsify(THM1_11, cfg, 0);
    const ScanReport base = scan(THM1_11, cfg);
    CHECK(zero.iterations == 0);
    CHECK(to_json(zero.report).dump() == to_json(base).dump());

    const FalsifyResult res = falsify(THM1_11, cfg, 10000);
    CHECK(res.report.violations == 0);
    REQUIRE(res.report.min_slack.has_value());
    CHECK(*res.report.min_slack >= -1e-8);
    CHECK(*res.report.min_rel_slack <= 1e-3);
    CHECK(*res.report.min_slack <= *base.min_slack);
    REQUIRE(res.best_trajectory.size() == res.iterations);
    for (std::size_t i = 1; i < res.best_trajectory.size(); ++i)
        CHECK(res.best_trajectory[i] <= res.best_trajectory[i - 1]);

    const FalsifyResult again = falsify(THM1_11, cfg, 10000);
    CHECK(to_json(again.report).dump() == to_json(res.report).dump());

    cfg.degree = 6;
    const FalsifyResult lemma = falsify(LEMMA1, cfg, 100000);
    CHECK(*lemma.report.min_slack >= -1e-12);
}
