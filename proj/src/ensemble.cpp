#include "polyneq/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "polyneq/philox.hpp"

namespace polyneq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAlphaMargin = 1e-6;
constexpr double kClusterRadius = 0.1;

template <class E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view s)
{
    for (const auto& [e, name] : table)
        if (name == s)
            return e;
    return std::nullopt;
}

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E e)
{
    for (const auto& [v, name] : table)
        if (v == e)
            return name;
    return "?";
}

constexpr std::array<std::pair<GammaMode, std::string_view>, 3> kGammaNames = {{
    {GammaMode::Ones, "ones"}, {GammaMode::Uniform01, "uniform01"}, {GammaMode::Exp1, "exp1"}}};
constexpr std::array<std::pair<AlphaMode, std::string_view>, 3> kAlphaNames = {{
    {AlphaMode::None, "none"}, {AlphaMode::Radial, "radial"}, {AlphaMode::Annulus, "annulus"}}};
constexpr std::array<std::pair<ZeroMode, std::string_view>, 3> kZeroNames = {{
    {ZeroMode::DiskUniform, "disk-uniform"}, {ZeroMode::Boundary, "boundary"}, {ZeroMode::Clustered, "clustered"}}};
constexpr std::array<std::pair<ProbeFamily, std::string_view>, 3> kFamilyNames = {{
    {ProbeFamily::BinomK, "binom_k"}, {ProbeFamily::Monomial, "monomial"}, {ProbeFamily::AlphaZnBeta, "alpha_zn_beta"}}};

Complex disk_point(CounterStream& rng, double radius)
{
    const double rho = radius * std::sqrt(rng.uniform());
    return std::polar(rho, kTwoPi * rng.uniform());
}

std::vector<Complex> sample_zeros(const EnsembleConfig& cfg, std::uint64_t trial)
{
    CounterStream rng(cfg.seed, trial, StreamTag::Zeros);
    const double radius = cfg.k * cfg.zero_radius_factor;
    const auto n = static_cast<std::size_t>(cfg.degree);
    std::vector<Complex> z(n);
    switch (cfg.zero_mode) {
    case ZeroMode::DiskUniform:
        for (auto& v : z)
            v = disk_point(rng, radius);
        break;
    case ZeroMode::Boundary:
        for (auto& v : z)
            v = std::polar(radius, kTwoPi * rng.uniform());
        break;
    case ZeroMode::Clustered: {
        const Complex center = disk_point(rng, radius);
        for (auto& v : z) {
            v = center + disk_point(rng, kClusterRadius * radius);
            if (std::abs(v) > radius)
                v *= radius / std::abs(v);
        }
        break;
    }
    }
    return z;
}

std::vector<double> sample_gamma(const EnsembleConfig& cfg, std::uint64_t trial)
{
    const auto n = static_cast<std::size_t>(cfg.degree);
    if (cfg.gamma_mode == GammaMode::Ones)
        return std::vector<double>(n, 1.0);
    CounterStream rng(cfg.seed, trial, StreamTag::Gamma);
    std::vector<double> g(n);
    for (;;) {
        double total = 0.0;
        for (auto& v : g) {
            const double u = rng.uniform();
            v = cfg.gamma_mode == GammaMode::Uniform01 ? u : -std::log1p(-u);
            total += v;
        }
        if (total > 0.0)
            return g;
    }
}

double annulus_base(AlphaConstraint constraint, double k)
{
    return std::max(k, alpha_floor(constraint, k));
}

std::optional<PolarPoint> sample_alpha(const EnsembleConfig& cfg, std::uint64_t trial, AlphaConstraint constraint)
{
    if (constraint == AlphaConstraint::NotUsed)
        return std::nullopt;
    switch (cfg.alpha_mode) {
    case AlphaMode::None: return std::nullopt;
    case AlphaMode::Radial:
        if (cfg.alpha_grid.empty())
            throw ContractError("radial alpha mode needs a non-empty alpha grid");
        return PolarPoint(Complex(cfg.alpha_grid[trial % cfg.alpha_grid.size()], 0.0));
    case AlphaMode::Annulus: {
        CounterStream rng(cfg.seed, trial, StreamTag::Alpha);
        const double base = annulus_base(constraint, cfg.k);
        const double floor = alpha_floor(constraint, cfg.k);
        for (;;) {
            const double r = base * std::sqrt(1.0 + 15.0 * rng.uniform());
            const double phi = kTwoPi * rng.uniform();
            if (floor > 0.0 && r < floor * (1.0 + kAlphaMargin))
                continue;
            return PolarPoint(std::polar(r, phi));
        }
    }
    }
    return std::nullopt;
}

// Minimal-slack merge key: (slack, trial) lexicographic.
struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::uint64_t sharp = 0;
    std::optional<double> min_slack;
    std::optional<double> min_rel;
    std::optional<CheckReport> worst;
    std::uint64_t worst_trial = 0;

    void add(const CheckReport& rep, std::uint64_t trial)
    {
        if (!rep.hypothesis_ok)
            return;
        ++checked;
        if (rep.violated())
            ++violations;
        if (rep.equality_sharp)
            ++sharp;
        if (!min_rel || rep.rel_slack < *min_rel)
            min_rel = rep.rel_slack;
        if (!min_slack || rep.slack < *min_slack || (rep.slack == *min_slack && trial < worst_trial)) {
            min_slack = rep.slack;
            worst = rep;
            worst_trial = trial;
        }
    }

    void merge(const Partial& o)
    {
        checked += o.checked;
        violations += o.violations;
        sharp += o.sharp;
        if (o.min_rel && (!min_rel || *o.min_rel < *min_rel))
            min_rel = o.min_rel;
        if (o.min_slack
            && (!min_slack || *o.min_slack < *min_slack || (*o.min_slack == *min_slack && o.worst_trial < worst_trial))) {
            min_slack = o.min_slack;
            worst = o.worst;
            worst_trial = o.worst_trial;
        }
    }
};

ScanReport to_report(InequalityId id, const EnsembleConfig& cfg, const Partial& acc)
{
    ScanReport out;
    out.id = id;
    out.config = cfg;
    out.checked = acc.checked;
    out.violations = acc.violations;
    out.equality_sharp_count = acc.sharp;
    out.min_slack = acc.min_slack;
    out.min_rel_slack = acc.min_rel;
    out.worst = acc.worst;
    if (acc.worst)
        out.worst_trial = acc.worst_trial;
    return out;
}

} // namespace

std::string_view to_string(GammaMode m) noexcept { return name_of(kGammaNames, m); }
std::string_view to_string(AlphaMode m) noexcept { return name_of(kAlphaNames, m); }
std::string_view to_string(ZeroMode m) noexcept { return name_of(kZeroNames, m); }
std::string_view to_string(ProbeFamily f) noexcept { return name_of(kFamilyNames, f); }
std::optional<GammaMode> parse_gamma_mode(std::string_view s) noexcept { return lookup(kGammaNames, s); }
std::optional<AlphaMode> parse_alpha_mode(std::string_view s) noexcept { return lookup(kAlphaNames, s); }
std::optional<ZeroMode> parse_zero_mode(std::string_view s) noexcept { return lookup(kZeroNames, s); }
std::optional<ProbeFamily> parse_probe_family(std::string_view s) noexcept { return lookup(kFamilyNames, s); }

Instance sample_instance(const EnsembleConfig& cfg, std::uint64_t trial_index, AlphaConstraint constraint)
{
    if (cfg.degree < 1)
        throw ContractError("ensemble degree must be at least 1");
    if (trial_index >= cfg.trials)
        throw ContractError("trial index out of range");
    CounterStream lead(cfg.seed, trial_index, StreamTag::Leading);
    const Complex c = std::polar(1.0, kTwoPi * lead.uniform());
    return Instance{RootForm(c, sample_zeros(cfg, trial_index)), GammaWeights(sample_gamma(cfg, trial_index)),
                    sample_alpha(cfg, trial_index, constraint)};
}

void validate_config(InequalityId id, const EnsembleConfig& cfg)
{
    const CatalogEntry& e = catalog_entry(id);
    const std::string name(to_string(id));
    if (cfg.degree < 1)
        throw ContractError(name + ": degree must be at least 1");
    if (!(cfg.k > 0.0) || !std::isfinite(cfg.k))
        throw ContractError(name + ": k must be positive");
    if (!k_in_range(e.schema.k_range, cfg.k))
        throw ContractError(name + " requires " + std::string(to_string(e.schema.k_range)) + ", got k = "
                            + std::to_string(cfg.k));
    if (!(cfg.zero_radius_factor > 0.0))
        throw ContractError(name + ": zero radius factor must be positive");
    if (cfg.trials == 0)
        throw ContractError(name + ": trials must be positive");
    if (e.schema.alpha == AlphaConstraint::NotUsed)
        return;
    if (cfg.alpha_mode == AlphaMode::None)
        throw ContractError(name + " needs a polar point; alpha mode none is not applicable");
    if (cfg.alpha_mode == AlphaMode::Radial) {
        if (cfg.alpha_grid.empty())
            throw ContractError(name + ": radial alpha mode needs --alpha-grid values");
        const double floor = alpha_floor(e.schema.alpha, cfg.k);
        for (const double a : cfg.alpha_grid)
            if (!(a >= floor) || !std::isfinite(a))
                throw ContractError(name + ": alpha grid value " + std::to_string(a) + " violates "
                                    + std::string(to_string(e.schema.alpha)));
    }
}

CheckInput make_check_input(InequalityId id, const EnsembleConfig& cfg, std::uint64_t trial_index)
{
    const CatalogEntry& e = catalog_entry(id);
    Instance inst = sample_instance(cfg, trial_index, e.schema.alpha);
    CheckInput in{std::move(inst.roots), std::nullopt, inst.alpha, cfg.k};
    if (e.schema.uses_gamma)
        in.gamma = std::move(inst.gamma);
    return in;
}

unsigned worker_count()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("POLYNEQ_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0)
            return static_cast<unsigned>(std::min<unsigned long>(v, 1024));
    }
    return hw;
}

ScanReport scan(InequalityId id, const EnsembleConfig& cfg, unsigned workers)
{
    validate_config(id, cfg);
    if (workers == 0)
        workers = worker_count();
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));

    auto run_range = [&](std::uint64_t begin, std::uint64_t end, Partial& acc) {
        for (std::uint64_t t = begin; t < end; ++t)
            acc.add(run_check(id, make_check_input(id, cfg, t)), t);
    };

    Partial total;
    if (workers <= 1) {
        run_range(0, cfg.trials, total);
        return to_report(id, cfg, total);
    }

    std::vector<Partial> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(cfg.trials, chunk * w);
        const std::uint64_t end = std::min<std::uint64_t>(cfg.trials, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            try {
                run_range(begin, end, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    for (const auto& p : parts)
        total.merge(p);
    return to_report(id, cfg, total);
}

RootForm family_instance(ProbeFamily family, int n, double k)
{
    if (n < 1)
        throw ContractError("family degree must be at least 1");
    const auto un = static_cast<std::size_t>(n);
    switch (family) {
    case ProbeFamily::BinomK: return RootForm(1.0, std::vector<Complex>(un, Complex(-k, 0.0)));
    case ProbeFamily::Monomial: return RootForm(1.0, std::vector<Complex>(un, Complex{}));
    case ProbeFamily::AlphaZnBeta: {
        // z^n + 1: zeros e^{i pi (2j+1)/n}
        std::vector<Complex> z(un);
        for (std::size_t j = 0; j < un; ++j)
            z[j] = std::polar(1.0, std::numbers::pi * static_cast<double>(2 * j + 1) / static_cast<double>(n));
        return RootForm(1.0, std::move(z));
    }
    }
    throw ContractError("unknown probe family");
}

std::vector<CheckReport> sharpness_probe(InequalityId id, ProbeFamily family, const std::vector<int>& n_values,
                                         const std::vector<double>& k_values, const std::vector<double>& alpha_grid)
{
    const CatalogEntry& e = catalog_entry(id);
    const bool needs_alpha = e.schema.alpha != AlphaConstraint::NotUsed;
    if (needs_alpha && alpha_grid.empty())
        throw ContractError(std::string(to_string(id)) + " needs an alpha grid for the sharpness probe");
    if (id == InequalityId::LEMMA1)
        throw ContractError("LEMMA1 has no polynomial family; use falsify or lemma1_check");
    std::vector<CheckReport> out;
    for (const int n : n_values) {
        for (const double k : k_values) {
            const RootForm r = family_instance(family, n, k);
            CheckInput in{r, GammaWeights::ones(n), std::nullopt, k};
            if (!needs_alpha) {
                out.push_back(run_check(id, in));
                continue;
            }
            for (const double a : alpha_grid) {
                in.alpha = PolarPoint(Complex(a, 0.0));
                out.push_back(run_check(id, in));
            }
        }
    }
    return out;
}

namespace {

enum class Move { Radial, Angular, Gamma, Alpha };

struct SearchState {
    CheckInput input;
    double slack;
};

struct Steps {
    double radial, angular, gamma, alpha;
};

Steps initial_steps(double k, double alpha_base)
{
    return {0.25 * k, 0.5, 0.25, 0.25 * alpha_base};
}

bool collapsed(const Steps& s, const std::vector<Move>& moves, double k, double alpha_base)
{
    constexpr double tiny = 1e-12;
    for (const Move m : moves) {
        switch (m) {
        case Move::Radial: if (s.radial > tiny * k) return false; break;
        case Move::Angular: if (s.angular > tiny) return false; break;
        case Move::Gamma: if (s.gamma > tiny) return false; break;
        case Move::Alpha: if (s.alpha > tiny * alpha_base) return false; break;
        }
    }
    return true;
}

} // namespace

FalsifyResult falsify(InequalityId id, const EnsembleConfig& cfg, std::uint64_t budget, unsigned workers)
{
    FalsifyResult result;
    result.report = scan(id, cfg, workers);
    if (budget == 0 || !result.report.worst)
        return result;

    const CatalogEntry& e = catalog_entry(id);
    std::vector<Move> moves{Move::Radial};
    if (id != InequalityId::LEMMA1)
        moves.push_back(Move::Angular);
    if (e.schema.uses_gamma)
        moves.push_back(Move::Gamma);
    if (e.schema.alpha != AlphaConstraint::NotUsed)
        moves.push_back(Move::Alpha);

    const double k = cfg.k;
    const double radius = k * cfg.zero_radius_factor;
    const double alpha_min = alpha_floor(e.schema.alpha, k);
    const double alpha_base = annulus_base(e.schema.alpha, k);

    const CheckReport& seed_rep = *result.report.worst;
    SearchState current{
        CheckInput{*seed_rep.witness.roots, seed_rep.witness.gamma, seed_rep.witness.alpha, k}, seed_rep.slack};
    SearchState best = current;
    CheckReport best_rep = seed_rep;
    Steps steps = initial_steps(k, alpha_base);

    Partial extra;
    CounterStream rng(cfg.seed, 0, StreamTag::Falsify);
    std::uint64_t restart_trial = cfg.trials;

    for (std::uint64_t it = 0; it < budget; ++it) {
        const Move move = moves[static_cast<std::size_t>(rng.next_u64() % moves.size())];
        const double sign = (rng.next_u64() & 1u) ? 1.0 : -1.0;
        CheckInput cand = current.input;
        std::vector<Complex> z(cand.roots.roots().begin(), cand.roots.roots().end());
        const std::size_t n = z.size();
        bool valid = true;
        switch (move) {
        case Move::Radial: {
            const std::size_t j = static_cast<std::size_t>(rng.next_u64() % n);
            const double rho = std::clamp(std::abs(z[j]) + sign * steps.radial, 0.0, radius);
            const double phi = z[j] == Complex{} ? kTwoPi * rng.uniform() : std::arg(z[j]);
            z[j] = std::polar(rho, phi);
            break;
        }
        case Move::Angular: {
            const std::size_t j = static_cast<std::size_t>(rng.next_u64() % n);
            z[j] *= std::polar(1.0, sign * steps.angular);
            break;
        }
        case Move::Gamma: {
            const std::size_t j = static_cast<std::size_t>(rng.next_u64() % n);
            std::vector<double> g(cand.gamma->weights().begin(), cand.gamma->weights().end());
            g[j] = std::max(0.0, g[j] + sign * steps.gamma);
            const bool nonzero = std::any_of(g.begin(), g.end(), [](double v) { return v > 0.0; });
            if (nonzero)
                cand.gamma = GammaWeights(std::move(g));
            else
                valid = false;
            break;
        }
        case Move::Alpha: {
            Complex a = cand.alpha->alpha + std::polar(steps.alpha, kTwoPi * rng.uniform());
            if (std::abs(a) < alpha_min)
                a = a == Complex{} ? Complex(alpha_min, 0.0) : a * (alpha_min / std::abs(a));
            cand.alpha = PolarPoint(a);
            break;
        }
        }
        cand.roots = RootForm(cand.roots.leading(), std::move(z));

        bool accepted = false;
        if (valid) {
            const CheckReport rep = run_check(id, cand);
            extra.add(rep, cfg.trials + it);
            if (rep.hypothesis_ok && rep.slack < current.slack) {
                current = {std::move(cand), rep.slack};
                accepted = true;
                if (rep.slack < best.slack) {
                    best = current;
                    best_rep = rep;
                }
            }
        }
        // success widens the move, failure narrows it; widening stops at the initial step
        const double factor = accepted ? 2.0 : 0.5;
        const Steps cap = initial_steps(k, alpha_base);
        switch (move) {
        case Move::Radial: steps.radial = std::min(cap.radial, steps.radial * factor); break;
        case Move::Angular: steps.angular = std::min(cap.angular, steps.angular * factor); break;
        case Move::Gamma: steps.gamma = std::min(cap.gamma, steps.gamma * factor); break;
        case Move::Alpha: steps.alpha = std::min(cap.alpha, steps.alpha * factor); break;
        }
        ++result.iterations;
        result.best_trajectory.push_back(best.slack);

        if (collapsed(steps, moves, k, alpha_base)) {
            // fresh start drawn past the scan's trial range
            EnsembleConfig ext = cfg;
            ext.trials = restart_trial + 1;
            const CheckInput fresh = make_check_input(id, ext, restart_trial++);
            const CheckReport rep = run_check(id, fresh);
            if (rep.hypothesis_ok)
                current = {fresh, rep.slack};
            steps = initial_steps(k, alpha_base);
            ++result.restarts;
        }
    }

    ScanReport& out = result.report;
    out.checked += extra.checked;
    out.violations += extra.violations;
    out.equality_sharp_count += extra.sharp;
    if (extra.min_rel && (!out.min_rel_slack || *extra.min_rel < *out.min_rel_slack))
        out.min_rel_slack = extra.min_rel;
    if (best.slack < *out.min_slack) {
        out.min_slack = best.slack;
        out.worst = best_rep;
        out.worst_trial.reset();
    }
    return result;
}

} // namespace polyneq
