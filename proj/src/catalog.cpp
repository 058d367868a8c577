#include "polyneq/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "polyneq/circle.hpp"

namespace polyneq {

namespace {

using enum InequalityId;
constexpr auto kLower = Sense::Lower;
constexpr auto kUpper = Sense::Upper;

constexpr HypothesisSchema schema(KRange k, AlphaConstraint a, CheckForm f, bool gamma, bool zeros = true)
{
    return {k, a, f, gamma, zeros};
}

constexpr auto kNone = KRange::None;
constexpr auto kLe1 = KRange::AtMostOne;
constexpr auto kGe1 = KRange::AtLeastOne;
constexpr auto kEq1 = KRange::EqualsOne;
constexpr auto kNoA = AlphaConstraint::NotUsed;
constexpr auto kAnyA = AlphaConstraint::Any;
constexpr auto kAgeK = AlphaConstraint::AtLeastK;
constexpr auto kAge1 = AlphaConstraint::AtLeastOne;
constexpr auto kMax = CheckForm::MaxModulus;
constexpr auto kPt = CheckForm::Pointwise;
constexpr auto kScalar = CheckForm::Scalar;

// F_k = (k^n|a_n| - |a_0|) / (k^n|a_n| + |a_0|); F_1 is the k = 1 case.
constexpr std::array<CatalogEntry, kInequalityCount> kTable = {{
    {BERN_1, kUpper, schema(kNone, kNoA, kMax, false, false), "Bernstein",
     "max|P'| <= n max|P|"},
    {TURAN_2, kLower, schema(kEq1, kNoA, kMax, false), "Turan",
     "max|P'| >= (n/2) max|P|"},
    {DUBININ_PT_3, kLower, schema(kEq1, kNoA, kPt, false), "Dubinin pointwise",
     "Re(zP'(z)/P(z)) >= (n/2) (1 + F_1/n)"},
    {DUBININ_4, kLower, schema(kEq1, kNoA, kMax, false), "Dubinin",
     "max|P'| >= (1/2) (n + F_1) max|P|"},
    {MALIK_5, kLower, schema(kLe1, kNoA, kMax, false), "Malik",
     "max|P'| >= n/(1+k) max|P|"},
    {RATHER_PT_6, kLower, schema(kLe1, kNoA, kPt, false), "pointwise Malik refinement",
     "Re(zP'(z)/P(z)) >= n/(1+k) (1 + (k/n) F_k)"},
    {RATHER_7, kLower, schema(kLe1, kNoA, kPt, false), "ratio Malik refinement",
     "|P'(z)| >= n/(1+k) (1 + (k/n) F_k) |P(z)|"},
    {AZIZ_POLAR_UPPER, kUpper, schema(kNone, kAge1, kMax, false, false), "Aziz polar upper bound",
     "max|D_a P| <= n|a| max|P|"},
    {AZIZ_RATHER_8, kLower, schema(kLe1, kAgeK, kMax, false), "polar Malik",
     "max|D_a P| >= n (|a|-k)/(1+k) max|P|"},
    {RATHER_POLAR_9, kLower, schema(kLe1, kAgeK, kMax, false), "refined polar Malik",
     "max|D_a P| >= n (|a|-k)/(1+k) (1 + (k/n) F_k) max|P|"},
    {THM_F, kLower, schema(kLe1, kAgeK, kMax, true), "generalized polar, k <= 1",
     "max|D_a^g P| >= L (|a|-k)/(1+k) max|P|"},
    {THM_G_10, kLower, schema(kLe1, kNoA, kPt, true), "generalized derivative pointwise",
     "|P^g(z)| >= k/(1+k) (L/k + g_m F_k) |P(z)|"},
    {THM_H, kLower, schema(kLe1, kAge1, kMax, true), "refined generalized polar, k <= 1",
     "max|D_a^g P| >= (|a|-k)/(1+k) (L + k g_m F_k) max|P|"},
    {THM_I, kLower, schema(kEq1, kAge1, kMax, true), "generalized polar, k = 1",
     "max|D_a^g P| >= (|a|-1)/2 (L + g_m F_1) max|P|"},
    {THM1_11, kLower, schema(kGe1, kNoA, kMax, true), "generalized derivative, k >= 1",
     "max|P^g| >= L/(1+k^n) (1 + (g_m/L) F_k) max|P|"},
    {COR1_12, kLower, schema(kGe1, kNoA, kMax, false), "derivative, k >= 1",
     "max|P'| >= n/(1+k^n) (1 + F_k/n) max|P|"},
    {THM2, kLower, schema(kGe1, kAgeK, kMax, true), "generalized polar, k >= 1",
     "max|D_a^g P| >= (|a|-k)/(1+k^n) (L + g_m F_1) max|P|"},
    {COR2, kLower, schema(kGe1, kAgeK, kMax, false), "polar, k >= 1",
     "max|D_a P| >= n (|a|-k)/(1+k^n) (1 + F_1/n) max|P|"},
    {LEMMA1, kLower, schema(kNone, kNoA, kScalar, false), "product inequality",
     "sum (1-x_j)/(1+x_j) >= (1 - prod x_j)/(1 + prod x_j), x_j = |z_j|/k"},
    {LEMMA2, kUpper, schema(kGe1, kNoA, kMax, false, false), "growth on |z| = R",
     "max_{|z|=R}|P| <= R^n max|P|, R = k"},
    {LEMMA3_13, kLower, schema(kGe1, kNoA, kMax, false), "boundary growth",
     "max_{|z|=k}|P| >= 2k^n/(1+k^n) max|P|"},
    {SCALE_ID_15, kUpper, schema(kGe1, kAnyA, kMax, true), "scaling step",
     "max|D_{a/k}^g G| <= k^(n-1) max|D_a^g P|, G(z) = P(kz)"},
}};

std::string describe(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_k(InequalityId id, KRange range, double k)
{
    if (k_in_range(range, k))
        return;
    throw HypothesisError(std::string(to_string(id)) + ": k-range " + std::string(to_string(range))
                          + " violated by k = " + describe(k));
}

void require_alpha(InequalityId id, AlphaConstraint a, double k, double alpha_mod)
{
    if (a == AlphaConstraint::NotUsed || a == AlphaConstraint::Any)
        return;
    if (alpha_mod >= alpha_floor(a, k))
        return;
    throw HypothesisError(std::string(to_string(id)) + ": alpha-constraint " + std::string(to_string(a))
                          + " violated by |alpha| = " + describe(alpha_mod));
}

} // namespace

std::span<const CatalogEntry> catalog_table()
{
    return kTable;
}

const CatalogEntry& catalog_entry(InequalityId id)
{
    return kTable[static_cast<std::size_t>(id)];
}

std::string_view to_string(KRange r) noexcept
{
    switch (r) {
    case KRange::None: return "none";
    case KRange::AtMostOne: return "k <= 1";
    case KRange::AtLeastOne: return "k >= 1";
    case KRange::EqualsOne: return "k = 1";
    }
    return "?";
}

std::string_view to_string(AlphaConstraint a) noexcept
{
    switch (a) {
    case AlphaConstraint::NotUsed: return "none";
    case AlphaConstraint::Any: return "any alpha";
    case AlphaConstraint::AtLeastK: return "|alpha| >= k";
    case AlphaConstraint::AtLeastOne: return "|alpha| >= 1";
    }
    return "?";
}

bool k_in_range(KRange range, double k) noexcept
{
    if (!(k > 0.0) || !std::isfinite(k))
        return false;
    switch (range) {
    case KRange::None: return true;
    case KRange::AtMostOne: return k <= 1.0;
    case KRange::AtLeastOne: return k >= 1.0;
    case KRange::EqualsOne: return k == 1.0;
    }
    return false;
}

double alpha_floor(AlphaConstraint a, double k) noexcept
{
    switch (a) {
    case AlphaConstraint::AtLeastK: return k;
    case AlphaConstraint::AtLeastOne: return 1.0;
    default: return 0.0;
    }
}

double refinement_fraction(double k, int n, double a0_mod, double an_mod)
{
    const double top = std::pow(k, n) * an_mod;
    return (top - a0_mod) / (top + a0_mod);
}

double bound_value(InequalityId id, const BoundParams& p)
{
    const CatalogEntry& e = catalog_entry(id);
    if (p.n < 1)
        throw ContractError(std::string(to_string(id)) + ": degree must be at least 1");
    require_k(id, e.schema.k_range, p.k);
    require_alpha(id, e.schema.alpha, p.k, p.alpha_mod);

    const double n = static_cast<double>(p.n);
    const double k = p.k;
    const double kn = std::pow(k, p.n);
    const double a = p.alpha_mod;
    const double L = p.lambda;
    const double gm = p.gamma_min;
    const double f1 = refinement_fraction(1.0, p.n, p.a0_mod, p.an_mod);
    const double fk = refinement_fraction(k, p.n, p.a0_mod, p.an_mod);
    const double M = p.maxmod;

    switch (id) {
    case BERN_1: return n * M;
    case TURAN_2: return n / 2.0 * M;
    case DUBININ_PT_3: return n / 2.0 * (1.0 + f1 / n) * M;
    case DUBININ_4: return 0.5 * (n + f1) * M;
    case MALIK_5: return n / (1.0 + k) * M;
    case RATHER_PT_6:
    case RATHER_7: return n / (1.0 + k) * (1.0 + k / n * fk) * M;
    case AZIZ_POLAR_UPPER: return n * a * M;
    case AZIZ_RATHER_8: return n / (1.0 + k) * (a - k) * M;
    case RATHER_POLAR_9: return n * (a - k) / (1.0 + k) * (1.0 + k / n * fk) * M;
    case THM_F: return L / (1.0 + k) * (a - k) * M;
    case THM_G_10: return k / (1.0 + k) * (L / k + gm * fk) * M;
    case THM_H: return (a - k) / (1.0 + k) * (L + k * gm * fk) * M;
    case THM_I: return (a - 1.0) / 2.0 * (L + gm * f1) * M;
    case THM1_11: return L / (1.0 + kn) * (1.0 + gm / L * fk) * M;
    case COR1_12: return n / (1.0 + kn) * (1.0 + fk / n) * M;
    case THM2: return (a - k) / (1.0 + kn) * (L + gm * f1) * M;
    case COR2: return n * (a - k) / (1.0 + kn) * (1.0 + f1 / n) * M;
    case LEMMA1: throw ContractError("LEMMA1 has no coefficient bound; use lemma1_check");
    case LEMMA2: return kn * M;
    case LEMMA3_13: return 2.0 * kn / (1.0 + kn) * M;
    case SCALE_ID_15: return std::pow(k, p.n - 1) * M;
    }
    throw ContractError("unknown inequality id");
}

CheckReport lemma1_check(std::span<const double> x, const Tolerances& tol)
{
    Witness w;
    w.x.assign(x.begin(), x.end());
    if (x.empty())
        return hypothesis_failed(LEMMA1, kLower, "LEMMA1 needs n >= 1", std::move(w));
    for (const double v : x)
        if (!(v >= 0.0 && v <= 1.0))
            return hypothesis_failed(LEMMA1, kLower, "x_j must lie in [0, 1]", std::move(w));
    double sum = 0.0;
    double prod = 1.0;
    for (const double v : x) {
        sum += (1.0 - v) / (1.0 + v);
        prod *= v;
    }
    const double rhs = (1.0 - prod) / (1.0 + prod);
    return make_report(LEMMA1, kLower, sum, rhs, 1.0, std::move(w), tol);
}

CheckReport run_check(InequalityId id, const CheckInput& in, const Tolerances& tol)
{
    const CatalogEntry& e = catalog_entry(id);
    const HypothesisSchema& s = e.schema;
    const RootForm& r = in.roots;
    const int n = r.degree();
    const double k = in.k;

    Witness w;
    w.roots = r;
    w.k = k;
    if (s.uses_gamma) {
        if (!in.gamma)
            throw ContractError(std::string(to_string(id)) + " needs gamma weights");
        if (static_cast<int>(in.gamma->size()) != n)
            throw ContractError(std::string(to_string(id)) + ": gamma length does not match degree");
        w.gamma = in.gamma;
    }
    if (s.alpha != AlphaConstraint::NotUsed) {
        if (!in.alpha)
            throw ContractError(std::string(to_string(id)) + " needs a polar point alpha");
        w.alpha = in.alpha;
    }

    if (n < 1)
        return hypothesis_failed(id, e.sense, "degree must be at least 1", std::move(w));
    if (!k_in_range(s.k_range, k))
        return hypothesis_failed(id, e.sense, "k-range " + std::string(to_string(s.k_range)) + " violated",
                                 std::move(w));
    if (s.alpha == AlphaConstraint::AtLeastK || s.alpha == AlphaConstraint::AtLeastOne) {
        if (!(in.alpha->modulus() >= alpha_floor(s.alpha, k)))
            return hypothesis_failed(id, e.sense,
                                     "alpha-constraint " + std::string(to_string(s.alpha)) + " violated",
                                     std::move(w));
    }
    if (s.zeros_in_disk && !zeros_in_disk(r, k))
        return hypothesis_failed(id, e.sense, "zeros: all zeros must lie in |z| <= k", std::move(w));

    if (id == LEMMA1) {
        std::vector<double> x;
        for (const Complex z : r.roots())
            x.push_back(std::min(1.0, std::abs(z) / k));
        CheckReport rep = lemma1_check(x, tol);
        rep.witness.roots = r;
        rep.witness.k = k;
        return rep;
    }
    if (id == LEMMA3_13)
        return boundary_growth_check(r, k, tol);

    const Polynomial p = from_roots(r);
    BoundParams bp;
    bp.n = n;
    bp.k = k;
    bp.alpha_mod = in.alpha ? in.alpha->modulus() : 0.0;
    bp.a0_mod = std::abs(p[0]);
    bp.an_mod = std::abs(p.leading());
    const GammaWeights gamma = in.gamma && s.uses_gamma ? *in.gamma : GammaWeights::ones(n);
    bp.lambda = gamma.lambda();
    bp.gamma_min = gamma.gamma_min();

    double measured = 0.0;
    if (s.form == CheckForm::Pointwise) {
        const GammaWeights ones = GammaWeights::ones(n);
        PointwiseMinimum pm;
        switch (id) {
        case DUBININ_PT_3:
        case RATHER_PT_6: pm = pointwise_root_min(r, ones.weights(), RootQuantity::DubininReal, 1.0); break;
        case RATHER_7: pm = pointwise_root_min(r, ones.weights(), RootQuantity::WeightedModulus, 1.0); break;
        case THM_G_10: pm = pointwise_root_min(r, gamma.weights(), RootQuantity::WeightedModulus, 1.0); break;
        default: throw ContractError("pointwise form not wired for this id");
        }
        measured = pm.value;
        w.theta = pm.theta;
        bp.maxmod = 1.0;
        const double bound = bound_value(id, bp);
        return make_report(id, e.sense, measured, bound, std::max(std::abs(measured), std::abs(bound)),
                           std::move(w), tol);
    }

    MaxModEstimate meas;
    double maxmod = 0.0;
    switch (id) {
    case BERN_1:
    case TURAN_2:
    case DUBININ_4:
    case MALIK_5:
    case COR1_12: meas = max_modulus(derivative(p), 1.0); break;
    case AZIZ_POLAR_UPPER:
    case AZIZ_RATHER_8:
    case RATHER_POLAR_9:
    case COR2: meas = max_modulus(polar_derivative(p, *in.alpha), 1.0); break;
    case THM_F:
    case THM_H:
    case THM_I:
    case THM2: meas = max_modulus(generalized_polar_derivative(r, gamma, *in.alpha), 1.0); break;
    case THM1_11: meas = max_modulus(generalized_derivative(r, gamma), 1.0); break;
    case LEMMA2: meas = max_modulus(p, k); break;
    case SCALE_ID_15: {
        std::vector<Complex> scaled(r.roots().begin(), r.roots().end());
        for (auto& z : scaled)
            z /= k;
        const RootForm g(r.leading() * std::pow(k, n), std::move(scaled));
        meas = max_modulus(generalized_polar_derivative(g, gamma, PolarPoint(in.alpha->alpha / k)), 1.0);
        maxmod = max_modulus(generalized_polar_derivative(r, gamma, *in.alpha), 1.0).value;
        break;
    }
    default: throw ContractError("max form not wired for this id");
    }
    if (id != SCALE_ID_15)
        maxmod = max_modulus(p, 1.0).value;
    measured = meas.value;
    w.theta = meas.arg_theta;
    bp.maxmod = maxmod;
    const double bound = bound_value(id, bp);
    return make_report(id, e.sense, measured, bound, std::max(std::abs(measured), std::abs(bound)), std::move(w),
                       tol);
}

} // namespace polyneq
