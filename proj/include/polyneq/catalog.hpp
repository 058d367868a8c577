#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyneq/operators.hpp"
#include "polyneq/report.hpp"
#include "polyneq/roots.hpp"

namespace polyneq {

enum class KRange { None, AtMostOne, AtLeastOne, EqualsOne };
enum class AlphaConstraint { NotUsed, Any, AtLeastK, AtLeastOne };
enum class CheckForm { MaxModulus, Pointwise, Scalar };

struct HypothesisSchema {
    KRange k_range = KRange::None;
    AlphaConstraint alpha = AlphaConstraint::NotUsed;
    CheckForm form = CheckForm::MaxModulus;
    bool uses_gamma = false;
    bool zeros_in_disk = true; ///< all zeros in |z| <= k is a side condition
};

struct CatalogEntry {
    InequalityId id;
    Sense sense;
    HypothesisSchema schema;
    std::string_view eq_label;
    std::string_view formula;
};

/// One entry per InequalityId, in declaration order.
std::span<const CatalogEntry> catalog_table();
const CatalogEntry& catalog_entry(InequalityId id);

std::string_view to_string(KRange r) noexcept;
std::string_view to_string(AlphaConstraint a) noexcept;

bool k_in_range(KRange range, double k) noexcept;
/// Smallest |alpha| the constraint admits for disk radius k (0 when unconstrained).
double alpha_floor(AlphaConstraint a, double k) noexcept;

/// Scalar inputs of a bound. For max-form ids the result is the bound on the
/// measured side, i.e. the multiplier times maxmod; pointwise ids take
/// maxmod = 1 and the result is the pointwise bound itself.
struct BoundParams {
    int n = 1;
    double k = 1.0;
    double alpha_mod = 0.0;
    double a0_mod = 0.0;
    double an_mod = 1.0;
    double lambda = 1.0;
    double gamma_min = 1.0;
    double maxmod = 1.0;
};

/// (k^n |a_n| - |a_0|) / (k^n |a_n| + |a_0|).
double refinement_fraction(double k, int n, double a0_mod, double an_mod);

/// Throws HypothesisError naming the violated constraint when p falls outside
/// the id's schema; LEMMA1 has no scalar bound and throws ContractError.
double bound_value(InequalityId id, const BoundParams& p);

struct CheckInput {
    RootForm roots;
    std::optional<GammaWeights> gamma;
    std::optional<PolarPoint> alpha;
    double k = 1.0;
};

/// Checks hypotheses, measures the operator side on |z| = 1 (or the circle
/// the id names) and compares it with bound_value.
CheckReport run_check(InequalityId id, const CheckInput& in, const Tolerances& tol = {});

/// sum (1 - x_j)/(1 + x_j) >= (1 - prod x_j)/(1 + prod x_j) for x_j in [0, 1].
CheckReport lemma1_check(std::span<const double> x, const Tolerances& tol = {});

} // namespace polyneq
