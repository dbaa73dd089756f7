#pragma once

#include <cstdint>
#include <vector>

#include "bamsim/sim/engine.hpp"

namespace bamsim {

struct ClassSummary {
    std::uint64_t requested = 0;
    std::uint64_t granted = 0;
    std::uint64_t blocked = 0;
    std::uint64_t preempted = 0;
    Bandwidth granted_traffic;
    Bandwidth peak_load;
    double avg_load_mbps = 0.0;  ///< step integral over [first event, last event]
};

struct Summary {
    std::vector<ClassSummary> per_class;
    ClassSummary total;
};

/// Tabulates a run: per-class and total grants, blocks, preemptions, granted
/// traffic, peak load and time-average load. The average treats the sampled
/// series as a step function (each sample holds until the next event) over
/// the span between the first and last event; an empty or single-sample run
/// averages to zero.
inline Summary summarize(const MetricsRecord& metrics) {
    Summary summary;
    const int class_count = static_cast<int>(metrics.per_class.size());
    summary.per_class.resize(class_count);

    for (int i = 0; i < class_count; ++i) {
        const ClassCounters& c = metrics.per_class[i];
        ClassSummary& s = summary.per_class[i];
        s.requested = c.requested;
        s.granted = c.granted;
        s.blocked = c.blocked;
        s.preempted = c.preempted;
        s.granted_traffic = c.granted_traffic;
    }
    {
        const ClassCounters t = metrics.totals();
        summary.total.requested = t.requested;
        summary.total.granted = t.granted;
        summary.total.blocked = t.blocked;
        summary.total.preempted = t.preempted;
        summary.total.granted_traffic = t.granted_traffic;
    }

    // integral ticks are (0.1 Mbps) * ms; spans and loads stay well inside int64
    std::vector<std::int64_t> class_integral(class_count);
    std::int64_t total_integral = 0;
    for (std::size_t i = 0; i < metrics.samples.size(); ++i) {
        const LoadSample& sample = metrics.samples[i];
        summary.total.peak_load = std::max(summary.total.peak_load, sample.total_load);
        for (int cls = 0; cls < class_count; ++cls) {
            summary.per_class[cls].peak_load = std::max(summary.per_class[cls].peak_load, sample.per_class[cls]);
        }
        if (i + 1 < metrics.samples.size()) {
            const std::int64_t dt = (metrics.samples[i + 1].time - sample.time).ticks();
            total_integral += sample.total_load.ticks() * dt;
            for (int cls = 0; cls < class_count; ++cls) {
                class_integral[cls] += sample.per_class[cls].ticks() * dt;
            }
        }
    }
    if (metrics.samples.size() >= 2) {
        const std::int64_t span = (metrics.samples.back().time - metrics.samples.front().time).ticks();
        if (span > 0) {
            summary.total.avg_load_mbps = static_cast<double>(total_integral) / (10.0 * static_cast<double>(span));
            for (int cls = 0; cls < class_count; ++cls) {
                summary.per_class[cls].avg_load_mbps =
                    static_cast<double>(class_integral[cls]) / (10.0 * static_cast<double>(span));
            }
        }
    }
    return summary;
}

}  // namespace bamsim
