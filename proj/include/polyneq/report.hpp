#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyneq/operators.hpp"
#include "polyneq/roots.hpp"

namespace polyneq {

enum class InequalityId {
    BERN_1,
    TURAN_2,
    DUBININ_PT_3,
    DUBININ_4,
    MALIK_5,
    RATHER_PT_6,
    RATHER_7,
    AZIZ_POLAR_UPPER,
    AZIZ_RATHER_8,
    RATHER_POLAR_9,
    THM_F,
    THM_G_10,
    THM_H,
    THM_I,
    THM1_11,
    COR1_12,
    THM2,
    COR2,
    LEMMA1,
    LEMMA2,
    LEMMA3_13,
    SCALE_ID_15,
};

inline constexpr int kInequalityCount = 22;

std::string_view to_string(InequalityId id) noexcept;
std::optional<InequalityId> parse_inequality_id(std::string_view name) noexcept;
/// All ids in declaration order.
std::vector<InequalityId> all_inequality_ids();

/// Whether the measured side should sit above the bound (Lower) or below it (Upper).
enum class Sense { Lower, Upper };

/// The instance a report was computed on.
struct Witness {
    std::optional<RootForm> roots;
    std::optional<GammaWeights> gamma;
    std::optional<PolarPoint> alpha;
    double k = 1.0;
    std::optional<double> theta; ///< argmax / argmin angle of the measured side
    std::vector<double> x;       ///< LEMMA1 inputs
};

/// One inequality evaluated on one instance.
///
/// lhs is always the side asserted to be the larger one: the measured value
/// for lower bounds, the bound itself for upper bounds. Hence slack >= 0 on
/// every instance where the inequality holds.
struct CheckReport {
    InequalityId id = InequalityId::BERN_1;
    Sense sense = Sense::Lower;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double rel_slack = 0.0;
    bool hypothesis_ok = true;
    std::optional<bool> pass; ///< absent when the hypothesis failed
    bool equality_sharp = false;
    double abs_tol = 0.0;
    std::string hypothesis_message;
    Witness witness;

    bool violated() const noexcept { return hypothesis_ok && pass.has_value() && !*pass; }
};

struct Tolerances {
    double abs_scale = 1e-9; ///< multiplied by the instance's magnitude scale
    double rel = 1e-8;
};

/// Fills slack, rel_slack, pass and equality_sharp from measured/bound.
/// scale is the instance magnitude that abs_tol is proportional to.
CheckReport make_report(InequalityId id, Sense sense, double measured, double bound, double scale,
                        Witness witness, const Tolerances& tol = {});

/// Report for an instance outside the inequality's hypothesis class.
CheckReport hypothesis_failed(InequalityId id, Sense sense, std::string message, Witness witness);

} // namespace polyneq
