#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bamsim/core/types.hpp"
#include "bamsim/workload/rng.hpp"

namespace bamsim {

/// Raised on malformed trace or scenario input; carries the offending line
/// when the source is line-oriented.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_number(line) {}
    std::size_t line_number;
};

/// One per-class arrival process: exponential gaps, uniform bandwidth,
/// exponential holding, optionally delayed start.
struct GeneratorSpec {
    int class_index = 0;
    double mean_interarrival_s = 1.0;
    double start_delay_s = 0.0;
    Bandwidth bandwidth_min;
    Bandwidth bandwidth_max;
    double mean_holding_s = 1.0;
    int count_share = 0;  ///< informational; the realized mix emerges from the rates

    bool operator==(const GeneratorSpec&) const = default;
};

struct ScenarioSpec {
    std::string name;
    ClassConfig class_config;
    std::vector<GeneratorSpec> generators;
    int total_lsps = 0;
    std::uint64_t seed = 0;

    bool operator==(const ScenarioSpec&) const = default;
};

inline std::vector<std::string> validate_scenario(const ScenarioSpec& spec) {
    std::vector<std::string> errors;
    if (spec.total_lsps <= 0) errors.push_back("simulation.total_lsps must be positive");
    if (spec.generators.empty()) errors.push_back("generators must be nonempty");
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const GeneratorSpec& g = spec.generators[i];
        const std::string path = "generators[" + std::to_string(i) + "]";
        if (g.class_index < 0 || g.class_index >= spec.class_config.class_count) {
            errors.push_back(path + ".class out of range");
        }
        if (g.mean_interarrival_s <= 0) errors.push_back(path + ".mean_interarrival_s must be positive");
        if (g.mean_holding_s <= 0) errors.push_back(path + ".mean_holding_s must be positive");
        if (g.start_delay_s < 0) errors.push_back(path + ".start_delay_s must be nonnegative");
        if (g.bandwidth_min <= Bandwidth{}) errors.push_back(path + ".bandwidth_min_mbps must be positive");
        if (g.bandwidth_min > g.bandwidth_max) {
            errors.push_back(path + ": bandwidth_min_mbps exceeds bandwidth_max_mbps");
        }
    }
    return errors;
}

/// Deterministic, replayable request sequence: sorted by arrival time, ids
/// dense from 0 in arrival order.
struct WorkloadTrace {
    std::uint64_t seed = 0;
    std::vector<LspRequest> requests;

    bool operator==(const WorkloadTrace&) const = default;
};

/// Generates the scenario's trace. Each generator draws from its own
/// SplitMix64 stream seeded with (scenario seed XOR class index), three draws
/// per request in gap/bandwidth/holding order, so adding or removing one
/// class never disturbs the others. The merged sequence is cut after
/// total_lsps requests.
inline WorkloadTrace generate_trace(const ScenarioSpec& spec) {
    {
        const auto errors = validate_scenario(spec);
        if (!errors.empty()) throw ConfigError("invalid scenario: " + errors.front());
    }

    struct Source {
        const GeneratorSpec* gen;
        SplitMix64 rng;
        double clock_s;        // un-quantized arrival accumulator
        LspRequest pending;    // next request, arrival/bandwidth/holding filled
        std::size_t ordinal;   // position in the generator list, tie-breaking only

        void advance() {
            clock_s += sample_exponential(rng, gen->mean_interarrival_s);
            pending.class_index = gen->class_index;
            pending.arrival = seconds(clock_s);
            pending.bandwidth = sample_uniform(rng, gen->bandwidth_min, gen->bandwidth_max);
            const double holding = sample_exponential(rng, gen->mean_holding_s);
            pending.holding = std::max(Seconds::from_ticks(1), seconds(holding));
        }
    };

    std::vector<Source> sources;
    sources.reserve(spec.generators.size());
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const GeneratorSpec& g = spec.generators[i];
        Source src{&g, SplitMix64(spec.seed ^ static_cast<std::uint64_t>(g.class_index)), g.start_delay_s, {}, i};
        src.advance();
        sources.push_back(src);
    }

    WorkloadTrace trace;
    trace.seed = spec.seed;
    trace.requests.reserve(spec.total_lsps);
    for (int n = 0; n < spec.total_lsps; ++n) {
        Source* next = &sources.front();
        for (Source& src : sources) {
            const auto key = [](const Source& s) {
                return std::make_tuple(s.pending.arrival.ticks(), s.gen->class_index, s.ordinal);
            };
            if (key(src) < key(*next)) next = &src;
        }
        next->pending.id = static_cast<LspId>(n);
        trace.requests.push_back(next->pending);
        next->advance();
    }
    return trace;
}

inline void write_trace(std::ostream& out, const WorkloadTrace& trace) {
    out << "# bamsim-trace v1 seed=" << trace.seed << "\n";
    for (const LspRequest& req : trace.requests) {
        out << req.id << ',' << req.arrival.str() << ',' << req.class_index << ',' << req.bandwidth.str() << ','
            << req.holding.str() << "\n";
    }
}

inline std::string trace_to_string(const WorkloadTrace& trace) {
    std::ostringstream out;
    write_trace(out, trace);
    return out.str();
}

/// Content fingerprint (FNV-1a over the serialized form): identical traces,
/// including their seed, hash identically across write/read round trips.
inline std::uint64_t trace_fingerprint(const WorkloadTrace& trace) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (const char c : trace_to_string(trace)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line, char separator) {
    std::vector<std::string> fields;
    std::string field;
    for (const char c : line) {
        if (c == separator) {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

inline std::uint64_t parse_u64(const std::string& text, const char* what, std::size_t line) {
    if (text.empty()) throw ParseError(std::string(what) + " is empty", line);
    std::uint64_t value = 0;
    for (const char c : text) {
        if (c < '0' || c > '9') throw ParseError(std::string(what) + " is not a nonnegative integer: '" + text + "'", line);
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

}  // namespace detail

/// Reads a trace written by write_trace, enforcing the format invariants:
/// arrivals nondecreasing, ids dense from 0, positive bandwidth and holding.
inline WorkloadTrace read_trace(std::istream& in) {
    std::string line;
    std::size_t line_number = 1;
    if (!std::getline(in, line)) throw ParseError("empty trace file", 0);
    const std::string header_prefix = "# bamsim-trace v1 seed=";
    if (line.rfind(header_prefix, 0) != 0) {
        throw ParseError("missing '# bamsim-trace v1 seed=<u64>' header", line_number);
    }
    WorkloadTrace trace;
    trace.seed = detail::parse_u64(line.substr(header_prefix.size()), "seed", line_number);

    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const auto fields = detail::split_fields(line, ',');
        if (fields.size() != 5) {
            throw ParseError("expected 5 fields 'id,arrival_s,class,bandwidth_mbps,holding_s', got " +
                                 std::to_string(fields.size()),
                             line_number);
        }
        LspRequest req;
        req.id = detail::parse_u64(fields[0], "id", line_number);
        const auto arrival = Seconds::parse(fields[1]);
        if (!arrival) throw ParseError("bad arrival_s '" + fields[1] + "'", line_number);
        req.arrival = *arrival;
        req.class_index = static_cast<int>(detail::parse_u64(fields[2], "class", line_number));
        const auto bandwidth = Bandwidth::parse(fields[3]);
        if (!bandwidth) throw ParseError("bad bandwidth_mbps '" + fields[3] + "'", line_number);
        req.bandwidth = *bandwidth;
        const auto holding = Seconds::parse(fields[4]);
        if (!holding) throw ParseError("bad holding_s '" + fields[4] + "'", line_number);
        req.holding = *holding;

        if (req.id != trace.requests.size()) {
            throw ParseError("ids must be dense from 0; expected " + std::to_string(trace.requests.size()) +
                                 ", got " + std::to_string(req.id),
                             line_number);
        }
        if (!trace.requests.empty() && req.arrival < trace.requests.back().arrival) {
            throw ParseError("arrival times must be nondecreasing", line_number);
        }
        if (req.bandwidth <= Bandwidth{}) throw ParseError("bandwidth must be positive", line_number);
        if (req.holding <= Seconds{}) throw ParseError("holding must be positive", line_number);
        trace.requests.push_back(req);
    }
    if (trace.requests.empty()) throw ParseError("trace has no requests", line_number);
    return trace;
}

}  // namespace bamsim
