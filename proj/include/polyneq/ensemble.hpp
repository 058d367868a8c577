#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "polyneq/catalog.hpp"

namespace polyneq {

enum class GammaMode { Ones, Uniform01, Exp1 };
enum class AlphaMode { None, Radial, Annulus };
enum class ZeroMode { DiskUniform, Boundary, Clustered };

std::string_view to_string(GammaMode m) noexcept;
std::string_view to_string(AlphaMode m) noexcept;
std::string_view to_string(ZeroMode m) noexcept;
std::optional<GammaMode> parse_gamma_mode(std::string_view s) noexcept;
std::optional<AlphaMode> parse_alpha_mode(std::string_view s) noexcept;
std::optional<ZeroMode> parse_zero_mode(std::string_view s) noexcept;

struct EnsembleConfig {
    int degree = 4;
    double k = 1.0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    GammaMode gamma_mode = GammaMode::Ones;
    AlphaMode alpha_mode = AlphaMode::Annulus;
    std::vector<double> alpha_grid; ///< |alpha| values for AlphaMode::Radial
    ZeroMode zero_mode = ZeroMode::DiskUniform;
    /// Zeros are drawn in the disk of radius k * zero_radius_factor. Values
    /// above 1 produce hostile instances outside the hypothesis class.
    double zero_radius_factor = 1.0;
};

struct Instance {
    RootForm roots;
    GammaWeights gamma;
    std::optional<PolarPoint> alpha;
};

/// Pure function of (cfg, trial_index): zeros per zero_mode, leading
/// coefficient uniform on the unit circle, gamma per gamma_mode, alpha per
/// alpha_mode restricted to the constraint set by rejection.
///
/// Annulus alphas are area-uniform in [rho, 4 rho] with rho = max(k, floor)
/// and floor the constraint's minimal |alpha|; draws closer than a relative
/// 1e-6 to the floor are rejected.
Instance sample_instance(const EnsembleConfig& cfg, std::uint64_t trial_index,
                         AlphaConstraint constraint = AlphaConstraint::Any);

struct ScanReport {
    InequalityId id = InequalityId::BERN_1;
    EnsembleConfig config;
    std::uint64_t checked = 0;   ///< instances with hypothesis_ok
    std::uint64_t violations = 0;
    std::uint64_t equality_sharp_count = 0;
    std::optional<double> min_slack;
    std::optional<double> min_rel_slack;
    std::optional<CheckReport> worst; ///< minimal-slack report
    std::optional<std::uint64_t> worst_trial;
};

/// Throws ContractError when cfg cannot instantiate id's hypotheses.
void validate_config(InequalityId id, const EnsembleConfig& cfg);

/// CheckInput for trial_index, matching id's schema.
CheckInput make_check_input(InequalityId id, const EnsembleConfig& cfg, std::uint64_t trial_index);

/// Worker count from POLYNEQ_THREADS (unset or 0 selects hardware concurrency).
unsigned worker_count();

/// run_check over all trials. The merge is min-slack with lowest trial index
/// on ties, so the report does not depend on the worker count.
ScanReport scan(InequalityId id, const EnsembleConfig& cfg, unsigned workers = 0);

enum class ProbeFamily { BinomK, Monomial, AlphaZnBeta };
std::string_view to_string(ProbeFamily f) noexcept;
std::optional<ProbeFamily> parse_probe_family(std::string_view s) noexcept;

/// The extremal families: (z + k)^n, z^n, and z^n + 1 (|alpha| = |beta|).
RootForm family_instance(ProbeFamily family, int n, double k);

/// run_check on the family across the grids; alpha_grid is only used (and
/// required) by ids with a polar point.
std::vector<CheckReport> sharpness_probe(InequalityId id, ProbeFamily family, const std::vector<int>& n_values,
                                         const std::vector<double>& k_values,
                                         const std::vector<double>& alpha_grid = {});

struct FalsifyResult {
    ScanReport report;
    std::uint64_t iterations = 0;
    std::uint64_t restarts = 0;
    std::vector<double> best_trajectory; ///< best slack after each iteration
};

/// Derivative-free slack descent seeded at the best scan witness: each
/// iteration perturbs one zero (radius or angle), one gamma weight, or alpha,
/// keeps the move only if the slack strictly drops and halves that move's
/// step otherwise. When every step has collapsed the search restarts from a
/// fresh sample; the best instance over all restarts is reported.
FalsifyResult falsify(InequalityId id, const EnsembleConfig& cfg, std::uint64_t budget, unsigned workers = 0);

} // namespace polyneq
