#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "bamsim/core/admission.hpp"
#include "bamsim/core/invariants.hpp"
#include "bamsim/core/link_state.hpp"
#include "bamsim/workload/trace.hpp"

namespace bamsim {

enum class EventKind { Departure = 0, Arrival = 1 };  // departures first at equal time

enum class EventOutcome { Admitted, AdmittedWithPreemption, Blocked, Departed };

inline const char* event_outcome_name(EventOutcome outcome) {
    switch (outcome) {
        case EventOutcome::Admitted: return "admitted";
        case EventOutcome::AdmittedWithPreemption: return "admitted_with_preemption";
        case EventOutcome::Blocked: return "blocked";
        case EventOutcome::Departed: return "departed";
    }
    return "?";
}

/// One processed simulation event, as emitted to the events CSV.
struct EventRecord {
    Seconds time;
    EventKind kind = EventKind::Arrival;
    LspId lsp_id = 0;
    int class_index = 0;
    Bandwidth bandwidth;
    EventOutcome outcome = EventOutcome::Blocked;
    std::vector<LspId> victims;

    bool operator==(const EventRecord&) const = default;
};

struct LoadSample {
    Seconds time;
    Bandwidth total_load;
    std::vector<Bandwidth> per_class;

    bool operator==(const LoadSample&) const = default;
};

struct ClassCounters {
    std::uint64_t requested = 0;
    std::uint64_t granted = 0;
    std::uint64_t blocked = 0;
    std::uint64_t preempted = 0;
    Bandwidth granted_traffic;  ///< sum of bandwidths of granted LSPs

    bool operator==(const ClassCounters&) const = default;
};

/// Everything one run measures: an event-time load series, the event log,
/// and per-class terminal counters.
struct MetricsRecord {
    std::vector<LoadSample> samples;
    std::vector<EventRecord> events;
    std::vector<ClassCounters> per_class;

    [[nodiscard]] ClassCounters totals() const {
        ClassCounters t;
        for (const ClassCounters& c : per_class) {
            t.requested += c.requested;
            t.granted += c.granted;
            t.blocked += c.blocked;
            t.preempted += c.preempted;
            t.granted_traffic += c.granted_traffic;
        }
        return t;
    }

    bool operator==(const MetricsRecord&) const = default;
};

/// Raised when a post-event state fails verify_invariants; the simulation
/// aborts rather than keep running on a corrupt state.
struct SimulationError : std::runtime_error {
    SimulationError(std::size_t event_index, std::vector<Violation> violations)
        : std::runtime_error("invariant violation after event " + std::to_string(event_index) + ": " +
                             (violations.empty() ? std::string("?") : violations.front().detail)),
          event_index(event_index),
          violations(std::move(violations)) {}
    std::size_t event_index;
    std::vector<Violation> violations;
};

/// Called after each processed event with the post-event state; `decision`
/// is null for departures. Used by the replay-equivalence tests.
using EventObserver = std::function<void(const EventRecord&, const Decision*, const LinkState&)>;

/// Replays a trace against one model on one link.
///
/// Events are processed in (time, kind, sequence) order with departures
/// ahead of arrivals at equal times, so bandwidth freed exactly at an
/// arrival instant is usable by it. An arrival runs the model's admission;
/// a granted request schedules its departure at arrival + holding, and any
/// victims' departures are cancelled: preempted LSPs are counted against
/// their class and discarded. After every event the state is sampled and
/// re-verified against the model's invariants.
inline MetricsRecord run(const WorkloadTrace& trace, Model model, const ClassConfig& cfg,
                         const EventObserver& observer = {}) {
    {
        const auto config_errors = validate_config(cfg, model);
        if (!config_errors.empty()) throw ConfigError("invalid configuration: " + config_errors.front());
        Seconds previous;
        LspId expected_id = 0;
        for (const LspRequest& req : trace.requests) {
            if (req.class_index < 0 || req.class_index >= cfg.class_count) {
                throw ConfigError("trace request " + std::to_string(req.id) + " has class " +
                                  std::to_string(req.class_index) + " outside the configuration");
            }
            if (req.id != expected_id++) throw ConfigError("trace ids are not dense from 0");
            if (req.arrival < previous) throw ConfigError("trace arrivals are not sorted");
            previous = req.arrival;
        }
    }

    struct QueuedEvent {
        Seconds time;
        EventKind kind;
        std::uint64_t sequence;
        LspId lsp_id;            // departures
        const LspRequest* req;   // arrivals

        bool operator>(const QueuedEvent& other) const {
            if (time != other.time) return time > other.time;
            if (kind != other.kind) return kind > other.kind;
            return sequence > other.sequence;
        }
    };

    std::priority_queue<QueuedEvent, std::vector<QueuedEvent>, std::greater<>> queue;
    std::uint64_t sequence = 0;
    for (const LspRequest& req : trace.requests) {
        queue.push(QueuedEvent{req.arrival, EventKind::Arrival, sequence++, req.id, &req});
    }

    MetricsRecord metrics;
    metrics.per_class.resize(cfg.class_count);
    LinkState state(cfg.class_count);
    std::size_t event_index = 0;

    const auto finish_event = [&](const EventRecord& record, const Decision* decision) {
        LoadSample sample{record.time, state.total_load, state.load};
        metrics.samples.push_back(std::move(sample));
        metrics.events.push_back(record);
        auto violations = verify_invariants(state, cfg, model);
        if (!violations.empty()) throw SimulationError(event_index, std::move(violations));
        if (observer) observer(metrics.events.back(), decision, state);
        ++event_index;
    };

    while (!queue.empty()) {
        const QueuedEvent event = queue.top();
        queue.pop();

        if (event.kind == EventKind::Departure) {
            if (!state.contains(event.lsp_id)) continue;  // cancelled by preemption
            const Lsp& lsp = state.admitted.at(event.lsp_id);
            EventRecord record{event.time,        EventKind::Departure,       event.lsp_id,
                               lsp.class_index(), lsp.bandwidth(),            EventOutcome::Departed,
                               {}};
            state = release(state, event.lsp_id, cfg, model);
            finish_event(record, nullptr);
            continue;
        }

        const LspRequest& req = *event.req;
        metrics.per_class[req.class_index].requested += 1;
        const Decision decision = admit(state, req, cfg, model);

        EventRecord record{event.time, EventKind::Arrival, req.id, req.class_index, req.bandwidth, {}, {}};
        if (decision.admitted_any()) {
            for (const LspId victim : decision.victims) {
                metrics.per_class[state.admitted.at(victim).class_index()].preempted += 1;
            }
            state = admit_apply(state, req, decision, cfg, model);
            metrics.per_class[req.class_index].granted += 1;
            metrics.per_class[req.class_index].granted_traffic += req.bandwidth;
            queue.push(QueuedEvent{req.arrival + req.holding, EventKind::Departure, sequence++, req.id, nullptr});
            record.outcome = decision.victims.empty() ? EventOutcome::Admitted : EventOutcome::AdmittedWithPreemption;
            record.victims = decision.victims;
        } else {
            metrics.per_class[req.class_index].blocked += 1;
            record.outcome = EventOutcome::Blocked;
        }
        finish_event(record, &decision);
    }
    return metrics;
}

}  // namespace bamsim
