#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bamsim/sim/engine.hpp"
#include "bamsim/sim/summary.hpp"
#include "bamsim/workload/trace.hpp"

namespace bamsim {

// All CSV output is plain LF-terminated text with '.' decimals; every value
// is formatted from fixed-point ticks so repeated runs are byte-identical.

namespace detail {

inline std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

inline std::string format_avg(double mbps) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3f", mbps);
    return buffer;
}

inline std::string join_victims(const std::vector<LspId>& victims) {
    std::string joined;
    for (std::size_t i = 0; i < victims.size(); ++i) {
        if (i > 0) joined += ';';
        joined += std::to_string(victims[i]);
    }
    return joined;
}

}  // namespace detail

inline void write_trace_csv(const std::filesystem::path& path, const WorkloadTrace& trace) {
    auto out = detail::open_csv(path);
    write_trace(out, trace);
}

inline WorkloadTrace read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open trace file '" + path.string() + "'");
    return read_trace(in);
}

inline void write_timeseries_csv(const std::filesystem::path& path, const MetricsRecord& metrics) {
    auto out = detail::open_csv(path);
    const int class_count = static_cast<int>(metrics.per_class.size());
    out << "time_s,total_load";
    for (int i = 0; i < class_count; ++i) out << ",load_tc" << i;
    out << "\n";
    for (const LoadSample& sample : metrics.samples) {
        out << sample.time.str() << ',' << sample.total_load.str();
        for (int i = 0; i < class_count; ++i) out << ',' << sample.per_class[i].str();
        out << "\n";
    }
}

inline void write_events_csv(const std::filesystem::path& path, const MetricsRecord& metrics) {
    auto out = detail::open_csv(path);
    out << "time_s,event,lsp_id,class,bandwidth,outcome,victims\n";
    for (const EventRecord& event : metrics.events) {
        out << event.time.str() << ',' << (event.kind == EventKind::Arrival ? "arrival" : "departure") << ','
            << event.lsp_id << ',' << event.class_index << ',' << event.bandwidth.str() << ','
            << event_outcome_name(event.outcome) << ',' << detail::join_victims(event.victims) << "\n";
    }
}

inline void write_summary_row(std::ostream& out, const std::string& label, const ClassSummary& s) {
    out << label << ',' << s.requested << ',' << s.granted << ',' << s.blocked << ',' << s.preempted << ','
        << s.granted_traffic.str() << ',' << s.peak_load.str() << ',' << detail::format_avg(s.avg_load_mbps) << "\n";
}

inline void write_summary_csv(const std::filesystem::path& path, const Summary& summary) {
    auto out = detail::open_csv(path);
    out << "class,requested,granted,blocked,preempted,granted_traffic_mbps,peak_load_mbps,avg_load_mbps\n";
    for (std::size_t i = 0; i < summary.per_class.size(); ++i) {
        write_summary_row(out, "tc" + std::to_string(i), summary.per_class[i]);
    }
    write_summary_row(out, "total", summary.total);
}

/// Comparison table: absolute rows per model, then per-class delta rows for
/// each non-baseline model against the first one listed.
inline void write_compare_csv(const std::filesystem::path& path, const std::vector<std::string>& model_names,
                              const std::vector<Summary>& summaries) {
    auto out = detail::open_csv(path);
    out << "model,class,requested,granted,blocked,preempted,granted_traffic_mbps,peak_load_mbps,avg_load_mbps\n";
    const auto row_label = [](const Summary& s, std::size_t i) {
        return i < s.per_class.size() ? "tc" + std::to_string(i) : std::string("total");
    };
    for (std::size_t m = 0; m < summaries.size(); ++m) {
        for (std::size_t i = 0; i <= summaries[m].per_class.size(); ++i) {
            const ClassSummary& s = i < summaries[m].per_class.size() ? summaries[m].per_class[i] : summaries[m].total;
            out << model_names[m] << ',';
            write_summary_row(out, row_label(summaries[m], i), s);
        }
    }
    for (std::size_t m = 1; m < summaries.size(); ++m) {
        const std::string label = model_names[m] + "-" + model_names[0];
        for (std::size_t i = 0; i <= summaries[m].per_class.size(); ++i) {
            const ClassSummary& a = i < summaries[m].per_class.size() ? summaries[m].per_class[i] : summaries[m].total;
            const ClassSummary& b = i < summaries[0].per_class.size() ? summaries[0].per_class[i] : summaries[0].total;
            out << label << ',' << row_label(summaries[m], i) << ','
                << (static_cast<std::int64_t>(a.requested) - static_cast<std::int64_t>(b.requested)) << ','
                << (static_cast<std::int64_t>(a.granted) - static_cast<std::int64_t>(b.granted)) << ','
                << (static_cast<std::int64_t>(a.blocked) - static_cast<std::int64_t>(b.blocked)) << ','
                << (static_cast<std::int64_t>(a.preempted) - static_cast<std::int64_t>(b.preempted)) << ','
                << (a.granted_traffic - b.granted_traffic).str() << ',' << (a.peak_load - b.peak_load).str() << ','
                << detail::format_avg(a.avg_load_mbps - b.avg_load_mbps) << "\n";
        }
    }
}

}  // namespace bamsim
