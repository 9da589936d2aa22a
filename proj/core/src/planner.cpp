#include "specshare/planner.hpp"

#include <algorithm>
#include <cmath>

#include "specshare/coverage.hpp"
#include "specshare/rate.hpp"

namespace specshare {

namespace {

/// Per-band closed-form coverage and rate at the
/// scenario's configured threshold. Purchase flags are ignored: the planner
/// prices out candidates it has not bought yet.
struct BandMetrics {
    const SubBand* band;
    double coverage;
    double rate;
};

std::vector<BandMetrics> sorted_metrics(const SharingScenario& s, const QuadratureSpec& spec) {
    if (s.bands.empty()) throw ConfigError("planner: market has no bands");
    const double t_lin = s.radio.sinr_threshold_lin();
    std::vector<BandMetrics> metrics;
    metrics.reserve(s.bands.size());
    for (const SubBand& band : s.bands) {
        metrics.push_back({&band,
                           detail::coverage_band_value(s, band, t_lin,
                                                       CoverageMethod::closed_form, spec),
                           detail::rate_band_value(s, band, spec)});
    }
    std::sort(metrics.begin(), metrics.end(), [](const BandMetrics& a, const BandMetrics& b) {
        if (a.band->cost != b.band->cost) return a.band->cost < b.band->cost;
        return a.band->id < b.band->id;
    });
    return metrics;
}

} // namespace

std::vector<RankedBand> rank_bands(const SharingScenario& s, const QuadratureSpec& spec) {
    std::vector<RankedBand> out;
    double cum_cov = 0.0;
    double cum_rate = 0.0;
    for (const BandMetrics& m : sorted_metrics(s, spec)) {
        cum_cov += m.coverage;
        cum_rate += m.rate;
        out.push_back({m.band->id, m.band->cost, m.coverage, m.rate, cum_cov, cum_rate});
    }
    return out;
}

PurchasePlan greedy_select(const SharingScenario& s, const QosTargets& qos,
                           const QuadratureSpec& spec) {
    const std::vector<BandMetrics> metrics = sorted_metrics(s, spec);
    const double coverage_target = 1.0 - qos.epsilon;

    PurchasePlan plan;
    double cum_cov = 0.0;
    double cum_rate = 0.0;
    for (std::size_t i = 0; i < metrics.size(); ++i) {
        cum_cov += metrics[i].coverage;
        cum_rate += metrics[i].rate;
        if (!plan.m_coverage && cum_cov >= coverage_target) {
            plan.m_coverage = static_cast<int>(i + 1);
        }
        if (!plan.n_rate && cum_rate >= qos.min_rate_nats) {
            plan.n_rate = static_cast<int>(i + 1);
        }
        if (plan.m_coverage && plan.n_rate) break;
    }

    plan.feasible = plan.m_coverage.has_value() && plan.n_rate.has_value();
    plan.l_max = plan.feasible ? std::max(*plan.m_coverage, *plan.n_rate)
                               : static_cast<int>(metrics.size());

    plan.achieved_coverage = 0.0;
    plan.achieved_rate = 0.0;
    plan.total_cost = 0.0;
    for (int i = 0; i < plan.l_max; ++i) {
        plan.selected_band_ids.push_back(metrics[i].band->id);
        plan.achieved_coverage += metrics[i].coverage;
        plan.achieved_rate += metrics[i].rate;
        plan.total_cost += metrics[i].band->cost;
    }
    return plan;
}

PurchasePlan brute_force_select(const SharingScenario& s, const QosTargets& qos,
                                const QuadratureSpec& spec) {
    if (s.bands.size() > 16) {
        throw std::domain_error("brute_force_select: limited to markets of at most 16 bands");
    }
    const std::vector<BandMetrics> metrics = sorted_metrics(s, spec);
    const int n = static_cast<int>(metrics.size());
    const double coverage_target = 1.0 - qos.epsilon;

    auto ids_of = [&metrics](std::uint32_t mask) {
        std::vector<std::string> ids;
        for (int i = 0; i < static_cast<int>(metrics.size()); ++i) {
            if (mask & (1u << i)) ids.push_back(metrics[i].band->id);
        }
        std::sort(ids.begin(), ids.end());
        return ids;
    };

    std::uint32_t best_mask = 0;
    double best_cost = 0.0;
    int best_card = 0;
    bool found = false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        double cov = 0.0, rate = 0.0, cost = 0.0;
        int card = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                cov += metrics[i].coverage;
                rate += metrics[i].rate;
                cost += metrics[i].band->cost;
                ++card;
            }
        }
        if (cov < coverage_target || rate < qos.min_rate_nats) continue;
        bool better = !found;
        if (found) {
            if (cost != best_cost) {
                better = cost < best_cost;
            } else if (card != best_card) {
                better = card < best_card;
            } else {
                better = ids_of(mask) < ids_of(best_mask);
            }
        }
        if (better) {
            found = true;
            best_mask = mask;
            best_cost = cost;
            best_card = card;
        }
    }

    PurchasePlan plan;
    if (!found) {
        // Mirror greedy's best-effort shape so callers can report either.
        return greedy_select(s, qos, spec);
    }
    plan.feasible = true;
    plan.l_max = best_card;
    plan.total_cost = best_cost;
    for (int i = 0; i < n; ++i) {
        if (best_mask & (1u << i)) {
            plan.selected_band_ids.push_back(metrics[i].band->id);
            plan.achieved_coverage += metrics[i].coverage;
            plan.achieved_rate += metrics[i].rate;
        }
    }
    // Prefix counts are a greedy notion; the oracle reports only cardinality.
    plan.n_rate.reset();
    plan.m_coverage.reset();
    return plan;
}

} // namespace specshare
