// specshare: analyze / simulate / plan / sweep workflows over scenario files.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specshare/coverage.hpp"
#include "specshare/montecarlo.hpp"
#include "specshare/planner.hpp"
#include "specshare/rate.hpp"
#include "specshare/scenario.hpp"

#include "csv.hpp"
#include "svg.hpp"

namespace {

using namespace specshare;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitInfeasible = 4;
constexpr std::int64_t kCiTrialsFloor = 1000;

struct CommonOpts {
    std::string scenario_path;
    std::string csv_path;
    std::string svg_path;
    bool bits = false;
};

double rate_out(double nats, bool bits) { return bits ? nats / kNatsPerBit : nats; }
const char* rate_unit(bool bits) { return bits ? "bits" : "nats"; }

int env_workers() {
    if (const char* env = std::getenv("SPECSHARE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 0;  // hardware concurrency
}

CoverageMethod parse_method(const std::string& name) {
    if (name == "exact") return CoverageMethod::exact_integral;
    if (name == "approx") return CoverageMethod::closed_form;
    if (name == "il") return CoverageMethod::interference_limited;
    throw ConfigError("unknown --method '" + name + "' (expected exact|approx|il)");
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int run_analyze(const CommonOpts& opts, const std::string& method_name) {
    const ScenarioFile file = load_scenario(opts.scenario_path);
    const SharingScenario& s = file.scenario;
    const CoverageMethod method = parse_method(method_name);
    const double t_lin = s.radio.sinr_threshold_lin();

    const CoverageReport cov = method == CoverageMethod::interference_limited
                                   ? coverage_interference_limited(s)
                                   : coverage_total(s, t_lin, method);
    const RateReport rates = rate_total(s);

    std::printf("scenario: %s\n", opts.scenario_path.c_str());
    std::printf("method: %s   threshold: %g dB   rate unit: %s\n",
                std::string(to_string(cov.method)).c_str(), s.radio.sinr_threshold_db,
                rate_unit(opts.bits));
    std::printf("%-12s %14s %14s\n", "band", "coverage", "rate");
    for (std::size_t i = 0; i < cov.per_band.size(); ++i) {
        std::printf("%-12s %14.6f %14.6f\n", cov.per_band[i].first.c_str(),
                    cov.per_band[i].second, rate_out(rates.per_band[i].second, opts.bits));
    }
    std::printf("%-12s %14.6f %14.6f\n", "aggregate", cov.aggregate,
                rate_out(rates.total, opts.bits));
    std::printf("note: aggregate band coverage is a band sum and may exceed 1\n");

    if (!opts.csv_path.empty()) {
        cli::CsvWriter csv(opts.csv_path, "band_id,method,threshold_db,coverage,rate_" +
                                              std::string(rate_unit(opts.bits)));
        for (std::size_t i = 0; i < cov.per_band.size(); ++i) {
            csv.row(cov.per_band[i].first + "," + std::string(to_string(cov.method)) + "," +
                    cli::fmt(s.radio.sinr_threshold_db) + "," + cli::fmt(cov.per_band[i].second) +
                    "," + cli::fmt(rate_out(rates.per_band[i].second, opts.bits)));
        }
        csv.row("aggregate," + std::string(to_string(cov.method)) + "," +
                cli::fmt(s.radio.sinr_threshold_db) + "," + cli::fmt(cov.aggregate) + "," +
                cli::fmt(rate_out(rates.total, opts.bits)));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int run_simulate(const CommonOpts& opts, std::optional<std::int64_t> trials,
                 std::optional<std::uint64_t> seed) {
    const ScenarioFile file = load_scenario(opts.scenario_path);
    const SharingScenario& s = file.scenario;
    McConfig mc = file.mc;
    if (trials) mc.trials = *trials;
    if (seed) mc.seed = *seed;
    mc.max_workers = env_workers();
    if (mc.trials < 1) throw ConfigError("--trials: must be >= 1");

    const bool report_ci = mc.trials >= kCiTrialsFloor;
    if (!report_ci) {
        std::fprintf(stderr,
                     "warning: %lld trials is below the %lld floor for confidence "
                     "intervals; CI columns suppressed\n",
                     static_cast<long long>(mc.trials), static_cast<long long>(kCiTrialsFloor));
    }

    const double t_lin = s.radio.sinr_threshold_lin();
    const double thresholds[1] = {t_lin};

    std::printf("scenario: %s\n", opts.scenario_path.c_str());
    std::printf("trials: %lld   seed: %llu   threshold: %g dB   rate unit: %s\n",
                static_cast<long long>(mc.trials), static_cast<unsigned long long>(mc.seed),
                s.radio.sinr_threshold_db, rate_unit(opts.bits));
    std::printf("%-10s %-9s %12s %12s %12s %12s\n", "band", "metric", "mean", "std_error",
                "ci_low", "ci_high");

    std::optional<cli::CsvWriter> csv;
    if (!opts.csv_path.empty()) {
        csv.emplace(opts.csv_path, "band_id,metric,mean,std_error,ci_low,ci_high,trials,seed");
    }

    auto emit = [&](const std::string& band_id, const char* metric, McEstimate est,
                    bool convert_bits) {
        if (convert_bits && opts.bits) {
            est.mean /= kNatsPerBit;
            est.std_error /= kNatsPerBit;
            est.ci_low /= kNatsPerBit;
            est.ci_high /= kNatsPerBit;
        }
        if (report_ci) {
            std::printf("%-10s %-9s %12.6f %12.6f %12.6f %12.6f\n", band_id.c_str(), metric,
                        est.mean, est.std_error, est.ci_low, est.ci_high);
        } else {
            std::printf("%-10s %-9s %12.6f %12.6f %12s %12s\n", band_id.c_str(), metric,
                        est.mean, est.std_error, "-", "-");
        }
        if (csv) {
            const std::string ci_low = report_ci ? cli::fmt(est.ci_low) : "";
            const std::string ci_high = report_ci ? cli::fmt(est.ci_high) : "";
            csv->row(band_id + "," + metric + "," + cli::fmt(est.mean) + "," +
                     cli::fmt(est.std_error) + "," + ci_low + "," + ci_high + "," +
                     std::to_string(mc.trials) + "," + std::to_string(mc.seed));
        }
    };

    const auto purchased = s.purchased_bands();
    if (purchased.empty()) throw ConfigError("scenario has no purchased bands");
    for (const SubBand* band : purchased) {
        const BandSimulation sim = simulate_band(s, band->id, thresholds, mc);
        emit(band->id, "coverage", sim.coverage.front(), false);
        emit(band->id, "rate", sim.rate, true);
        if (sim.resample_rate > 0.001) {
            std::fprintf(stderr, "note: band %s redrew %.2f%% of trials for an empty buyer field\n",
                         band->id.c_str(), 100.0 * sim.resample_rate);
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// plan
// ---------------------------------------------------------------------------

int run_plan(const CommonOpts& opts) {
    const ScenarioFile file = load_scenario(opts.scenario_path);
    const SharingScenario& s = file.scenario;

    const std::vector<RankedBand> ranked = rank_bands(s);
    const PurchasePlan plan = greedy_select(s, file.qos);

    std::printf("scenario: %s\n", opts.scenario_path.c_str());
    std::printf("qos: coverage >= %g, rate >= %g %s\n", 1.0 - file.qos.epsilon,
                rate_out(file.qos.min_rate_nats, opts.bits), rate_unit(opts.bits));
    std::printf("%-5s %-10s %10s %10s %10s %12s %10s\n", "rank", "band", "cost", "coverage",
                "rate", "cum_cover", "cum_rate");
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        std::printf("%-5zu %-10s %10.4f %10.6f %10.6f %12.6f %10.6f\n", i + 1,
                    ranked[i].id.c_str(), ranked[i].cost, ranked[i].coverage,
                    rate_out(ranked[i].rate, opts.bits), ranked[i].cum_coverage,
                    rate_out(ranked[i].cum_rate, opts.bits));
    }

    auto count_str = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("unmet");
    };
    std::printf("plan: %s\n", plan.feasible ? "feasible" : "INFEASIBLE (best partial plan)");
    std::printf("  N (rate prefix) = %s, M (coverage prefix) = %s, L_max = %d\n",
                count_str(plan.n_rate).c_str(), count_str(plan.m_coverage).c_str(), plan.l_max);
    std::printf("  selected:");
    for (const std::string& id : plan.selected_band_ids) std::printf(" %s", id.c_str());
    std::printf("\n  total cost = %g, achieved coverage = %.6f, achieved rate = %.6f %s\n",
                plan.total_cost, plan.achieved_coverage,
                rate_out(plan.achieved_rate, opts.bits), rate_unit(opts.bits));

    if (!opts.csv_path.empty()) {
        cli::CsvWriter csv(opts.csv_path,
                           "rank,band_id,cost,coverage,rate,cum_coverage,cum_rate,selected");
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            const bool selected = i < plan.selected_band_ids.size();
            csv.row(std::to_string(i + 1) + "," + ranked[i].id + "," + cli::fmt(ranked[i].cost) +
                    "," + cli::fmt(ranked[i].coverage) + "," +
                    cli::fmt(rate_out(ranked[i].rate, opts.bits)) + "," +
                    cli::fmt(ranked[i].cum_coverage) + "," +
                    cli::fmt(rate_out(ranked[i].cum_rate, opts.bits)) + "," +
                    (selected ? "1" : "0"));
        }
        csv.comment("plan feasible=" + std::string(plan.feasible ? "true" : "false") +
                    " n_rate=" + count_str(plan.n_rate) + " m_coverage=" +
                    count_str(plan.m_coverage) + " l_max=" + std::to_string(plan.l_max) +
                    " total_cost=" + cli::fmt(plan.total_cost));
    }
    return plan.feasible ? kExitOk : kExitInfeasible;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepSpec {
    std::string variable;
    std::vector<double> values;
};

SweepSpec parse_sweep(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("--sweep expects VAR=v1,v2,... (got '" + arg + "')");
    }
    SweepSpec spec;
    spec.variable = arg.substr(0, eq);
    if (spec.variable != "sinr_threshold_db" && spec.variable != "buyer_count" &&
        spec.variable != "tenant_count" && spec.variable != "band_count") {
        throw ConfigError("--sweep variable must be one of sinr_threshold_db, buyer_count, "
                          "tenant_count, band_count");
    }
    std::string rest = arg.substr(eq + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw ConfigError("--sweep: empty value in list");
        try {
            std::size_t used = 0;
            spec.values.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ConfigError("--sweep: '" + tok + "' is not a number");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (spec.values.empty()) throw ConfigError("--sweep: value list is empty");
    const bool increasing = spec.values.size() < 2 || spec.values[1] > spec.values[0];
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
        const bool ok = increasing ? spec.values[i] > spec.values[i - 1]
                                   : spec.values[i] < spec.values[i - 1];
        if (!ok) throw ConfigError("--sweep: values must be strictly monotone");
    }
    return spec;
}

ScenarioFile apply_sweep_value(const ScenarioFile& base, const std::string& var, double value) {
    ScenarioFile f = base;
    SharingScenario& s = f.scenario;
    const double area = 3.14159265358979323846 * s.region_radius_m * s.region_radius_m;
    if (var == "sinr_threshold_db") {
        s.radio.sinr_threshold_db = value;
    } else if (var == "buyer_count") {
        if (!(value > 0.0)) throw ConfigError("--sweep buyer_count: values must be > 0");
        s.buyer_count = value;
        s.buyer_intensity = value / area;
    } else if (var == "tenant_count") {
        if (value < 0.0) throw ConfigError("--sweep tenant_count: values must be >= 0");
        for (SubBand& band : s.bands) {
            band.tenant_count = value;
            band.tenant_intensity = value / area;
        }
    } else {  // band_count: cycle the configured bands up to the requested count
        const int n = static_cast<int>(value);
        if (n < 1 || static_cast<double>(n) != value) {
            throw ConfigError("--sweep band_count: values must be positive integers");
        }
        std::vector<SubBand> bands;
        const std::size_t base_count = base.scenario.bands.size();
        for (int i = 0; i < n; ++i) {
            SubBand band = base.scenario.bands[static_cast<std::size_t>(i) % base_count];
            if (static_cast<std::size_t>(i) >= base_count) {
                band.id += "#" + std::to_string(i / base_count + 1);
            }
            band.purchased = true;
            bands.push_back(std::move(band));
        }
        s.bands = std::move(bands);
    }
    return f;
}

int run_sweep(const CommonOpts& opts, const std::string& sweep_arg,
              const std::string& method_name, const std::string& outputs_arg, bool with_mc,
              std::optional<std::int64_t> trials, std::optional<std::uint64_t> seed) {
    const ScenarioFile base = load_scenario(opts.scenario_path);
    const SweepSpec sweep = parse_sweep(sweep_arg);
    const CoverageMethod method = parse_method(method_name);

    const bool want_coverage = outputs_arg.find("coverage") != std::string::npos;
    const bool want_rate = outputs_arg.find("rate") != std::string::npos;
    if (!want_coverage && !want_rate) {
        throw ConfigError("--outputs must include coverage and/or rate");
    }

    std::optional<cli::CsvWriter> csv;
    if (!opts.csv_path.empty()) {
        csv.emplace(opts.csv_path, "sweep_var,value,band_count,coverage_analytical,"
                                   "coverage_mc,rate_analytical,rate_mc");
    }

    std::printf("scenario: %s\n", opts.scenario_path.c_str());
    std::printf("sweep: %s over %zu values   method: %s   rate unit: %s%s\n",
                sweep.variable.c_str(), sweep.values.size(), method_name.c_str(),
                rate_unit(opts.bits), with_mc ? "   (with Monte Carlo)" : "");
    std::printf("%-18s %10s %6s %14s %14s %14s %14s\n", "sweep_var", "value", "bands",
                "coverage", "coverage_mc", "rate", "rate_mc");

    cli::Series cov_series{"aggregate coverage", {}};
    cli::Series cov_mc_series{"coverage (MC)", {}};
    cli::Series rate_series{"total rate", {}};
    cli::Series rate_mc_series{"rate (MC)", {}};

    for (double value : sweep.values) {
        const ScenarioFile file = apply_sweep_value(base, sweep.variable, value);
        const SharingScenario& s = file.scenario;
        const double t_lin = s.radio.sinr_threshold_lin();
        const int band_count = static_cast<int>(s.purchased_bands().size());

        double cov_val = 0.0, rate_val = 0.0;
        if (want_coverage) {
            cov_val = (method == CoverageMethod::interference_limited
                           ? coverage_interference_limited(s)
                           : coverage_total(s, t_lin, method))
                          .aggregate;
        }
        if (want_rate) rate_val = rate_out(rate_total(s).total, opts.bits);

        double cov_mc = 0.0, rate_mc = 0.0;
        if (with_mc) {
            McConfig mc = file.mc;
            if (trials) mc.trials = *trials;
            if (seed) mc.seed = *seed;
            mc.max_workers = env_workers();
            const double thresholds[1] = {t_lin};
            for (const SubBand* band : s.purchased_bands()) {
                const BandSimulation sim = simulate_band(s, band->id, thresholds, mc);
                cov_mc += sim.coverage.front().mean;
                rate_mc += sim.rate.mean;
            }
            rate_mc = rate_out(rate_mc, opts.bits);
        }

        auto opt_fmt = [](bool enabled, double v) { return enabled ? cli::fmt(v) : std::string(); };
        std::printf("%-18s %10g %6d %14s %14s %14s %14s\n", sweep.variable.c_str(), value,
                    band_count, opt_fmt(want_coverage, cov_val).c_str(),
                    opt_fmt(with_mc && want_coverage, cov_mc).c_str(),
                    opt_fmt(want_rate, rate_val).c_str(),
                    opt_fmt(with_mc && want_rate, rate_mc).c_str());
        if (csv) {
            csv->row(sweep.variable + "," + cli::fmt(value) + "," + std::to_string(band_count) +
                     "," + opt_fmt(want_coverage, cov_val) + "," +
                     opt_fmt(with_mc && want_coverage, cov_mc) + "," +
                     opt_fmt(want_rate, rate_val) + "," + opt_fmt(with_mc && want_rate, rate_mc));
        }

        if (want_coverage) cov_series.points.emplace_back(value, cov_val);
        if (with_mc && want_coverage) cov_mc_series.points.emplace_back(value, cov_mc);
        if (want_rate) rate_series.points.emplace_back(value, rate_val);
        if (with_mc && want_rate) rate_mc_series.points.emplace_back(value, rate_mc);
    }

    if (!opts.svg_path.empty()) {
        std::vector<cli::Chart> charts;
        if (want_coverage) {
            cli::Chart chart{"Aggregate band coverage vs " + sweep.variable, sweep.variable,
                             "coverage", {cov_series}};
            if (with_mc) chart.series.push_back(cov_mc_series);
            charts.push_back(std::move(chart));
        }
        if (want_rate) {
            cli::Chart chart{"Total rate (" + std::string(rate_unit(opts.bits)) + ") vs " +
                                 sweep.variable,
                             sweep.variable, "rate", {rate_series}};
            if (with_mc) chart.series.push_back(rate_mc_series);
            charts.push_back(std::move(chart));
        }
        cli::write_charts(opts.svg_path, charts);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SINR coverage, average rate and subband purchase planning for "
                 "spectrum-sharing small-cell deployments"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string analyze_method = "exact";
    std::string sweep_method = "approx";
    std::string sweep_arg;
    std::string outputs_arg = "coverage,rate";
    bool with_mc = false;
    std::optional<std::int64_t> trials;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scenario", opts.scenario_path, "scenario JSON file")->required();
        cmd->add_option("--csv", opts.csv_path, "write results as CSV");
        cmd->add_flag("--bits", opts.bits, "report rates in bits instead of nats");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "analytical coverage and rate report");
    add_common(analyze);
    analyze->add_option("--method", analyze_method, "coverage method: exact|approx|il");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimates with CIs");
    add_common(simulate);
    simulate->add_option("--trials", trials, "override configured trial count");
    simulate->add_option("--seed", seed, "override configured seed");

    CLI::App* plan = app.add_subcommand("plan", "greedy subband purchase plan");
    add_common(plan);

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep with CSV/SVG output");
    add_common(sweep);
    sweep->add_option("--sweep", sweep_arg, "VAR=v1,v2,... over sinr_threshold_db, "
                                            "buyer_count, tenant_count or band_count")
        ->required();
    sweep->add_option("--method", sweep_method, "coverage method: exact|approx|il");
    sweep->add_option("--outputs", outputs_arg, "subset of coverage,rate")
        ->default_val("coverage,rate");
    sweep->add_flag("--mc", with_mc, "add Monte Carlo columns");
    sweep->add_option("--trials", trials, "Monte Carlo trials per sweep point");
    sweep->add_option("--seed", seed, "Monte Carlo seed");
    sweep->add_option("--svg", opts.svg_path, "write line charts as SVG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (analyze->parsed()) return run_analyze(opts, analyze_method);
        if (simulate->parsed()) return run_simulate(opts, trials, seed);
        if (plan->parsed()) return run_plan(opts);
        if (sweep->parsed()) {
            return run_sweep(opts, sweep_arg, sweep_method, outputs_arg, with_mc, trials, seed);
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const QuadratureError& e) {
        std::fprintf(stderr, "numerical error: %s (best estimate %g, error bound %g)\n",
                     e.what(), e.estimate(), e.error_bound());
        return kExitNumeric;
    } catch (const NonConvergenceError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
    return kExitOk;
}
