#include "polyneq/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace polyneq {

namespace {

constexpr std::array<std::string_view, kInequalityCount> kNames = {
    "BERN_1",       "TURAN_2",   "DUBININ_PT_3",   "DUBININ_4", "MALIK_5",   "RATHER_PT_6",
    "RATHER_7",     "AZIZ_POLAR_UPPER", "AZIZ_RATHER_8", "RATHER_POLAR_9", "THM_F", "THM_G_10",
    "THM_H",        "THM_I",     "THM1_11",        "COR1_12",   "THM2",      "COR2",
    "LEMMA1",       "LEMMA2",    "LEMMA3_13",      "SCALE_ID_15",
};


} // namespace

std::string_view to_string(InequalityId id) noexcept
{
    return kNames[static_cast<std::size_t>(id)];
}

std::optional<InequalityId> parse_inequality_id(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name)
            return static_cast<InequalityId>(i);
    return std::nullopt;
}

std::vector<InequalityId> all_inequality_ids()
{
    std::vector<InequalityId> ids;
    for (int i = 0; i < kInequalityCount; ++i)
        ids.push_back(static_cast<InequalityId>(i));
    return ids;
}

CheckReport make_report(InequalityId id, Sense sense, double measured, double bound, double scale,
                        Witness witness, const Tolerances& tol)
{
    CheckReport rep;
    rep.id = id;
    rep.sense = sense;
    rep.lhs = sense == Sense::Lower ? measured : bound;
    rep.rhs = sense == Sense::Lower ? bound : measured;
    rep.slack = rep.lhs - rep.rhs;
    rep.abs_tol = tol.abs_scale * scale;
    rep.rel_slack = rep.slack / std::max({rep.rhs, rep.abs_tol, std::numeric_limits<double>::min()});
    rep.hypothesis_ok = true;
    rep.pass = rep.slack >= -rep.abs_tol - tol.rel * rep.rhs;
    rep.equality_sharp = std::abs(rep.slack) <= 10.0 * rep.abs_tol;
    rep.witness = std::move(witness);
    return rep;
}

CheckReport hypothesis_failed(InequalityId id, Sense sense, std::string message, Witness witness)
{
    CheckReport rep;
    rep.id = id;
    rep.sense = sense;
    rep.hypothesis_ok = false;
    rep.pass.reset();
    rep.hypothesis_message = std::move(message);
    rep.witness = std::move(witness);
    return rep;
}

} // namespace polyneq
