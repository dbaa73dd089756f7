#pragma once

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bamsim/cli/csv.hpp"
#include "bamsim/cli/scenario_io.hpp"
#include "bamsim/sim/engine.hpp"
#include "bamsim/sim/summary.hpp"

namespace bamsim {

struct RunConfig {
    std::string scenario;  ///< file path or preset name
    std::vector<Model> models;
    std::optional<std::uint64_t> seed_override;
    int repetitions = 1;
    std::filesystem::path out_dir = "bamsim_out";
};

inline std::vector<Model> parse_model_list(const std::string& text) {
    if (text == "all") return {Model::Mam, Model::Rdm, Model::AllocTc};
    std::vector<Model> models;
    std::string name;
    std::istringstream stream(text);
    while (std::getline(stream, name, ',')) {
        if (name == "mam") {
            models.push_back(Model::Mam);
        } else if (name == "rdm") {
            models.push_back(Model::Rdm);
        } else if (name == "alloctc") {
            models.push_back(Model::AllocTc);
        } else {
            throw ConfigError("unknown model '" + name + "' (expected mam, rdm, alloctc or all)");
        }
    }
    if (models.empty()) throw ConfigError("no model selected");
    return models;
}

namespace detail {

inline ScenarioSpec scenario_for_rep(const RunConfig& cfg, int rep) {
    ScenarioSpec spec = resolve_scenario(cfg.scenario);
    if (cfg.seed_override) spec.seed = *cfg.seed_override;
    spec.seed += static_cast<std::uint64_t>(rep);
    return spec;
}

inline std::filesystem::path rep_dir(const RunConfig& cfg, int rep) {
    if (cfg.repetitions == 1) return cfg.out_dir;
    return cfg.out_dir / ("rep" + std::to_string(rep + 1));
}

inline void require_valid_for_models(const ScenarioSpec& spec, const std::vector<Model>& models) {
    for (const Model model : models) {
        const auto errors = validate_config(spec.class_config, model);
        if (!errors.empty()) {
            throw ConfigError("scenario is not valid under " + std::string(model_name(model)) + ": " +
                              errors.front());
        }
    }
}

}  // namespace detail

/// `run`: replay the scenario once per repetition and selected model.
/// Each repetition directory gets the shared trace plus per-model
/// timeseries/events/summary files, all byte-deterministic.
inline int cmd_run(const RunConfig& cfg, std::ostream& log = std::cout) {
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        const ScenarioSpec spec = detail::scenario_for_rep(cfg, rep);
        detail::require_valid_for_models(spec, cfg.models);
        const std::filesystem::path dir = detail::rep_dir(cfg, rep);
        std::filesystem::create_directories(dir);

        const WorkloadTrace trace = generate_trace(spec);
        write_trace_csv(dir / "trace.csv", trace);
        for (const Model model : cfg.models) {
            const MetricsRecord metrics = run(trace, model, spec.class_config);
            const std::string name = model_name(model);
            write_timeseries_csv(dir / ("timeseries_" + name + ".csv"), metrics);
            write_events_csv(dir / ("events_" + name + ".csv"), metrics);
            write_summary_csv(dir / ("summary_" + name + ".csv"), summarize(metrics));
            const ClassCounters totals = metrics.totals();
            log << name << " seed=" << spec.seed << ": granted " << totals.granted << ", blocked " << totals.blocked
                << ", preempted " << totals.preempted << ", granted traffic " << totals.granted_traffic.str()
                << " Mbps\n";
        }
    }
    return 0;
}

namespace detail {

inline void print_compare_table(std::ostream& out, const std::vector<std::string>& names,
                                const std::vector<Summary>& summaries) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-10s %-6s %9s %9s %9s %10s %14s %10s %10s", "model", "class", "granted",
                  "blocked", "preempt", "requested", "granted_mbps", "peak", "avg");
    out << line << "\n";
    for (std::size_t m = 0; m < summaries.size(); ++m) {
        for (std::size_t i = 0; i <= summaries[m].per_class.size(); ++i) {
            const bool total = i == summaries[m].per_class.size();
            const ClassSummary& s = total ? summaries[m].total : summaries[m].per_class[i];
            const std::string cls = total ? "total" : "tc" + std::to_string(i);
            std::snprintf(line, sizeof(line), "%-10s %-6s %9llu %9llu %9llu %10llu %14s %10s %10s", names[m].c_str(),
                          cls.c_str(), static_cast<unsigned long long>(s.granted),
                          static_cast<unsigned long long>(s.blocked), static_cast<unsigned long long>(s.preempted),
                          static_cast<unsigned long long>(s.requested), s.granted_traffic.str().c_str(),
                          s.peak_load.str().c_str(), format_avg(s.avg_load_mbps).c_str());
            out << line << "\n";
        }
    }
}

}  // namespace detail

/// `compare`: replay one shared trace per repetition under every selected
/// model (at least two) and emit the side-by-side table with per-class
/// deltas against the first model.
inline int cmd_compare(const RunConfig& cfg, std::ostream& log = std::cout) {
    if (cfg.models.size() < 2) throw ConfigError("compare needs at least two models");
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        const ScenarioSpec spec = detail::scenario_for_rep(cfg, rep);
        detail::require_valid_for_models(spec, cfg.models);
        const std::filesystem::path dir = detail::rep_dir(cfg, rep);
        std::filesystem::create_directories(dir);

        const WorkloadTrace trace = generate_trace(spec);
        write_trace_csv(dir / "trace.csv", trace);
        std::vector<std::string> names;
        std::vector<Summary> summaries;
        for (const Model model : cfg.models) {
            names.push_back(model_name(model));
            summaries.push_back(summarize(run(trace, model, spec.class_config)));
        }
        write_compare_csv(dir / "compare.csv", names, summaries);
        log << "scenario " << (spec.name.empty() ? cfg.scenario : spec.name) << " seed=" << spec.seed << "\n";
        detail::print_compare_table(log, names, summaries);
    }
    return 0;
}

/// `gen-trace`: write the scenario's trace without running any model.
inline int cmd_gen_trace(const RunConfig& cfg, std::ostream& log = std::cout) {
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        const ScenarioSpec spec = detail::scenario_for_rep(cfg, rep);
        const std::filesystem::path dir = detail::rep_dir(cfg, rep);
        std::filesystem::create_directories(dir);
        const WorkloadTrace trace = generate_trace(spec);
        write_trace_csv(dir / "trace.csv", trace);
        char fingerprint[32];
        std::snprintf(fingerprint, sizeof(fingerprint), "%016llx",
                      static_cast<unsigned long long>(trace_fingerprint(trace)));
        log << (dir / "trace.csv").string() << ": " << trace.requests.size() << " requests, seed " << spec.seed
            << ", fingerprint " << fingerprint << "\n";
    }
    return 0;
}

/// `validate`: load the scenario, report which models its constraint set is
/// valid under. Fails when the file is malformed or no model accepts it.
inline int cmd_validate(const RunConfig& cfg, std::ostream& log = std::cout) {
    const ScenarioSpec spec = resolve_scenario(cfg.scenario);
    bool any = false;
    for (const Model model : {Model::Mam, Model::Rdm, Model::AllocTc}) {
        const auto errors = validate_config(spec.class_config, model);
        if (errors.empty()) {
            log << "valid under " << model_name(model) << "\n";
            any = true;
        } else {
            log << "invalid under " << model_name(model) << ": " << errors.front() << "\n";
        }
    }
    log << spec.generators.size() << " generators, " << spec.total_lsps << " requests, seed " << spec.seed << "\n";
    return any ? 0 : 1;
}

}  // namespace bamsim
