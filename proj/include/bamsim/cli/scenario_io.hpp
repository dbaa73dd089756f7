#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"

#include "bamsim/workload/trace.hpp"

namespace bamsim {

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& parent, const std::string& key,
                                           const std::string& path) {
    const auto it = parent.find(key);
    if (it == parent.end()) throw ParseError(path + "." + key + ": missing");
    return *it;
}

inline double require_number(const nlohmann::json& parent, const std::string& key, const std::string& path) {
    const nlohmann::json& value = require_field(parent, key, path);
    if (!value.is_number()) throw ParseError(path + "." + key + ": expected a number");
    return value.get<double>();
}

inline std::int64_t require_integer(const nlohmann::json& parent, const std::string& key, const std::string& path) {
    const nlohmann::json& value = require_field(parent, key, path);
    if (!value.is_number_integer()) throw ParseError(path + "." + key + ": expected an integer");
    return value.get<std::int64_t>();
}

}  // namespace detail

/// Parses the scenario document: sections `link`, `classes[]`, `generators[]`
/// and `simulation`. Violations are reported with their field path. The seed
/// is mandatory so every run is reproducible from the file alone.
inline ScenarioSpec parse_scenario(const nlohmann::json& doc) {
    ScenarioSpec spec;
    if (!doc.is_object()) throw ParseError("scenario: expected a JSON object");
    if (doc.contains("name")) spec.name = doc["name"].get<std::string>();

    const nlohmann::json& link = detail::require_field(doc, "link", "scenario");
    spec.class_config.link_capacity = mbps(detail::require_number(link, "capacity_mbps", "link"));
    spec.class_config.mam_overprovision = link.value("mam_overprovision", false);

    const nlohmann::json& classes = detail::require_field(doc, "classes", "scenario");
    if (!classes.is_array() || classes.empty()) throw ParseError("scenario.classes: expected a nonempty array");
    spec.class_config.class_count = static_cast<int>(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::string path = "classes[" + std::to_string(i) + "]";
        const std::int64_t index = detail::require_integer(classes[i], "index", path);
        if (index != static_cast<std::int64_t>(i)) {
            throw ParseError(path + ".index: classes must be listed densely from 0, got " + std::to_string(index));
        }
        spec.class_config.bc.push_back(mbps(detail::require_number(classes[i], "bc_mbps", path)));
    }

    const nlohmann::json& generators = detail::require_field(doc, "generators", "scenario");
    if (!generators.is_array() || generators.empty()) throw ParseError("scenario.generators: expected a nonempty array");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const std::string path = "generators[" + std::to_string(i) + "]";
        const nlohmann::json& g = generators[i];
        GeneratorSpec gen;
        gen.class_index = static_cast<int>(detail::require_integer(g, "class", path));
        gen.mean_interarrival_s = detail::require_number(g, "mean_interarrival_s", path);
        gen.start_delay_s = g.contains("start_delay_s") ? detail::require_number(g, "start_delay_s", path) : 0.0;
        gen.bandwidth_min = mbps(detail::require_number(g, "bandwidth_min_mbps", path));
        gen.bandwidth_max = mbps(detail::require_number(g, "bandwidth_max_mbps", path));
        gen.mean_holding_s = detail::require_number(g, "mean_holding_s", path);
        gen.count_share = static_cast<int>(g.value("count_share", 0));
        spec.generators.push_back(gen);
    }

    const nlohmann::json& simulation = detail::require_field(doc, "simulation", "scenario");
    spec.total_lsps = static_cast<int>(detail::require_integer(simulation, "total_lsps", "simulation"));
    const nlohmann::json& seed = detail::require_field(simulation, "seed", "simulation");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
        throw ParseError("simulation.seed: expected an unsigned integer");
    }
    spec.seed = seed.get<std::uint64_t>();

    const auto errors = validate_scenario(spec);
    if (!errors.empty()) throw ParseError(errors.front());
    {
        // model-independent sanity on the constraint set
        std::vector<std::string> basic;
        const ClassConfig& cfg = spec.class_config;
        if (cfg.class_count > kMaxTrafficClasses) basic.push_back("classes: at most 8 traffic classes supported");
        if (cfg.link_capacity <= Bandwidth{}) basic.push_back("link.capacity_mbps: must be positive");
        for (int i = 0; i < cfg.class_count; ++i) {
            if (cfg.bc[i] <= Bandwidth{}) basic.push_back("classes[" + std::to_string(i) + "].bc_mbps: must be positive");
        }
        if (!basic.empty()) throw ParseError(basic.front());
    }
    return spec;
}

inline nlohmann::json scenario_to_json(const ScenarioSpec& spec) {
    nlohmann::json doc;
    if (!spec.name.empty()) doc["name"] = spec.name;
    doc["link"] = {{"capacity_mbps", spec.class_config.link_capacity.to_double()},
                   {"mam_overprovision", spec.class_config.mam_overprovision}};
    doc["classes"] = nlohmann::json::array();
    for (int i = 0; i < spec.class_config.class_count; ++i) {
        doc["classes"].push_back({{"index", i}, {"bc_mbps", spec.class_config.bc[i].to_double()}});
    }
    doc["generators"] = nlohmann::json::array();
    for (const GeneratorSpec& g : spec.generators) {
        nlohmann::json entry = {{"class", g.class_index},
                                {"mean_interarrival_s", g.mean_interarrival_s},
                                {"start_delay_s", g.start_delay_s},
                                {"bandwidth_min_mbps", g.bandwidth_min.to_double()},
                                {"bandwidth_max_mbps", g.bandwidth_max.to_double()},
                                {"mean_holding_s", g.mean_holding_s}};
        if (g.count_share > 0) entry["count_share"] = g.count_share;
        doc["generators"].push_back(entry);
    }
    doc["simulation"] = {{"total_lsps", spec.total_lsps}, {"seed", spec.seed}};
    return doc;
}

inline ScenarioSpec load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file '" + path.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("scenario '" + path.string() + "': " + e.what());
    }
    return parse_scenario(doc);
}

inline void save_scenario(const std::filesystem::path& path, const ScenarioSpec& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write scenario file '" + path.string() + "'");
    out << scenario_to_json(spec).dump(2) << "\n";
}

/// Single-link STM-4 scenario: 622 Mbps, three classes with nested
/// constraints 622 / 435.4 / 248.8 Mbps, uniform 5-20 Mbps requests held for
/// an exponential mean of 150 s, 1000 requests. The top class arrives from
/// t=0 with 2 s mean gaps; the middle and bottom classes join at 300 s and
/// 500 s, so high-priority traffic faces the link alone first.
inline ScenarioSpec scenario01() {
    ScenarioSpec spec;
    spec.name = "scenario01";
    spec.class_config.class_count = 3;
    spec.class_config.bc = {mbps(622.0), mbps(435.4), mbps(248.8)};
    spec.class_config.link_capacity = mbps(622.0);
    spec.class_config.mam_overprovision = true;  // the nested constraints oversubscribe per-class caps
    const Bandwidth lo = mbps(5.0);
    const Bandwidth hi = mbps(20.0);
    spec.generators = {
        GeneratorSpec{0, 8.0, 500.0, lo, hi, 150.0, 0},
        GeneratorSpec{1, 4.0, 300.0, lo, hi, 150.0, 0},
        GeneratorSpec{2, 2.0, 0.0, lo, hi, 150.0, 0},
    };
    spec.total_lsps = 1000;
    spec.seed = 1;
    return spec;
}

/// Mirror of scenario01 with the top and bottom classes swapped: best-effort
/// traffic dominates from t=0 and the high-priority class joins last. This
/// exercises the classic low-to-high sharing path where nested-constraint
/// models already do well.
inline ScenarioSpec scenario02() {
    ScenarioSpec spec = scenario01();
    spec.name = "scenario02";
    spec.generators[0] = GeneratorSpec{0, 2.0, 0.0, mbps(5.0), mbps(20.0), 150.0, 0};
    spec.generators[2] = GeneratorSpec{2, 8.0, 500.0, mbps(5.0), mbps(20.0), 150.0, 0};
    return spec;
}

inline std::optional<ScenarioSpec> preset_scenario(const std::string& name) {
    if (name == "scenario01") return scenario01();
    if (name == "scenario02") return scenario02();
    return std::nullopt;
}

/// Treats `ref` as a file path when one exists, otherwise as a preset name.
inline ScenarioSpec resolve_scenario(const std::string& ref) {
    if (std::filesystem::exists(ref)) return load_scenario(ref);
    if (auto preset = preset_scenario(ref)) return *preset;
    throw ParseError("scenario '" + ref + "' is neither a file nor a known preset (scenario01, scenario02)");
}

}  // namespace bamsim
