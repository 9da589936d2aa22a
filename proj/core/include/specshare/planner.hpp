#ifndef SPECSHARE_PLANNER_HPP
#define SPECSHARE_PLANNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "specshare/numerics.hpp"
#include "specshare/scenario.hpp"

namespace specshare {

/// Result of subband purchase selection. n_rate (N) and m_coverage (M) are
/// the smallest cheapest-prefix lengths meeting the rate and coverage QoS;
/// they are empty when the whole market cannot meet the constraint. For a
/// feasible plan l_max = max(N, M) and the selected set is the l_max cheapest
/// bands (cost ties broken by id).
struct PurchasePlan {
    std::vector<std::string> selected_band_ids;
    std::optional<int> n_rate;
    std::optional<int> m_coverage;
    int l_max = 0;
    double achieved_coverage = 0.0;
    double achieved_rate = 0.0;
    double total_cost = 0.0;
    bool feasible = false;
};

/// Per-candidate metrics of the cost-sorted market, exposed for reporting.
struct RankedBand {
    std::string id;
    double cost = 0.0;
    double coverage = 0.0;
    double rate = 0.0;
    double cum_coverage = 0.0;
    double cum_rate = 0.0;
};

std::vector<RankedBand> rank_bands(const SharingScenario& s, const QuadratureSpec& spec = {});

/// Greedy selection: scan cheapest-first prefixes until the aggregate
/// coverage meets 1 - epsilon (M) and the summed per-band rate meets
/// min_rate (N); buy the first max(N, M) bands. Returns an infeasible plan
/// with best-effort partial results when the whole market is not enough.
PurchasePlan greedy_select(const SharingScenario& s, const QosTargets& qos,
                           const QuadratureSpec& spec = {});

/// Exhaustive oracle over all non-empty subsets (markets of at most 16
/// bands): minimum total cost subject to both constraints, ties broken by
/// smaller cardinality then lexicographic ids.
PurchasePlan brute_force_select(const SharingScenario& s, const QosTargets& qos,
                                const QuadratureSpec& spec = {});

} // namespace specshare

#endif
