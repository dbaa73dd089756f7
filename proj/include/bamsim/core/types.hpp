#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bamsim/core/fixed_point.hpp"

namespace bamsim {

using LspId = std::uint64_t;

/// Bandwidth allocation model selector. Higher class index means higher
/// priority; class 0 carries best-effort traffic.
enum class Model { Mam, Rdm, AllocTc };

inline const char* model_name(Model model) {
    switch (model) {
        case Model::Mam: return "mam";
        case Model::Rdm: return "rdm";
        case Model::AllocTc: return "alloctc";
    }
    return "?";
}

/// Raised when a configuration or request violates a precondition (bad class
/// index, invalid constraint set).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is applied against state it was not produced for
/// (stale victim id, unknown LSP, duplicate id).
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr int kMaxTrafficClasses = 8;

/// Per-link constraint set: one bandwidth constraint per traffic class plus
/// the reservable link capacity.
struct ClassConfig {
    int class_count = 0;
    std::vector<Bandwidth> bc;  ///< bc[i] caps class i (MAM) or classes >= i cumulatively (RDM/AllocTC)
    Bandwidth link_capacity;
    bool mam_overprovision = false;  ///< permit sum(bc) > capacity under MAM

    bool operator==(const ClassConfig&) const = default;
};

/// Model-specific validity check. Returns one message per violated rule;
/// empty means the configuration is usable with `model`.
inline std::vector<std::string> validate_config(const ClassConfig& cfg, Model model) {
    std::vector<std::string> errors;
    if (cfg.class_count < 1 || cfg.class_count > kMaxTrafficClasses) {
        errors.push_back("class_count must be in [1, 8], got " + std::to_string(cfg.class_count));
        return errors;
    }
    if (static_cast<int>(cfg.bc.size()) != cfg.class_count) {
        errors.push_back("bc list has " + std::to_string(cfg.bc.size()) + " entries for " +
                         std::to_string(cfg.class_count) + " classes");
        return errors;
    }
    if (cfg.link_capacity <= Bandwidth{}) {
        errors.push_back("link capacity must be positive, got " + cfg.link_capacity.str() + " Mbps");
    }
    for (int i = 0; i < cfg.class_count; ++i) {
        if (cfg.bc[i] <= Bandwidth{}) {
            errors.push_back("bc[" + std::to_string(i) + "] must be positive, got " + cfg.bc[i].str() + " Mbps");
        }
    }
    if (!errors.empty()) return errors;

    if (model == Model::Mam) {
        if (!cfg.mam_overprovision) {
            Bandwidth sum;
            for (const Bandwidth b : cfg.bc) sum += b;
            if (sum > cfg.link_capacity) {
                errors.push_back("MAM without overprovisioning requires sum(bc) <= capacity; sum is " + sum.str() +
                                 " Mbps against " + cfg.link_capacity.str() + " Mbps");
            }
        }
    } else {
        if (cfg.bc[0] != cfg.link_capacity) {
            errors.push_back("nested constraints require bc[0] == link capacity; got " + cfg.bc[0].str() +
                             " Mbps vs " + cfg.link_capacity.str() + " Mbps");
        }
        for (int i = 0; i + 1 < cfg.class_count; ++i) {
            if (cfg.bc[i] < cfg.bc[i + 1]) {
                errors.push_back("nested constraints require bc[" + std::to_string(i) + "] >= bc[" +
                                 std::to_string(i + 1) + "]; got " + cfg.bc[i].str() + " Mbps < " +
                                 cfg.bc[i + 1].str() + " Mbps");
            }
        }
    }
    return errors;
}

/// One LSP setup request.
struct LspRequest {
    LspId id = 0;
    int class_index = 0;
    Bandwidth bandwidth;
    Seconds arrival;
    Seconds holding;

    bool operator==(const LspRequest&) const = default;
};

/// An admitted LSP with its canonical native/loan split.
/// native + loan == request.bandwidth; loan is nonzero only under AllocTC
/// and only for classes above 0.
struct Lsp {
    LspRequest request;
    Bandwidth native;
    Bandwidth loan;
    Seconds setup_time;

    [[nodiscard]] int class_index() const { return request.class_index; }
    [[nodiscard]] Bandwidth bandwidth() const { return request.bandwidth; }

    bool operator==(const Lsp&) const = default;
};

enum class Outcome { Admitted, AdmittedWithPreemption, Blocked };

enum class BlockReason {
    None,
    ClassCap,                 ///< MAM: per-class constraint binds
    LinkCap,                  ///< MAM: link capacity binds
    SelfDoll,                 ///< RDM: the class's own cumulative constraint binds
    InsufficientPreemptable,  ///< RDM: lower-priority load cannot restore the constraints
    Saturated,                ///< AllocTC: headroom plus every legal victim still falls short
};

inline const char* block_reason_name(BlockReason reason) {
    switch (reason) {
        case BlockReason::None: return "none";
        case BlockReason::ClassCap: return "class_cap";
        case BlockReason::LinkCap: return "link_cap";
        case BlockReason::SelfDoll: return "self_doll";
        case BlockReason::InsufficientPreemptable: return "insufficient_preemptable";
        case BlockReason::Saturated: return "saturated";
    }
    return "?";
}

/// Outcome of an admission attempt. `victims` is nonempty exactly when the
/// outcome is AdmittedWithPreemption and lists the LSPs that must be torn
/// down, in preemption order.
struct Decision {
    Outcome outcome = Outcome::Blocked;
    Bandwidth native;
    Bandwidth loan;
    std::vector<LspId> victims;
    BlockReason reason = BlockReason::None;

    static Decision admitted(Bandwidth native, Bandwidth loan) {
        Decision d;
        d.outcome = Outcome::Admitted;
        d.native = native;
        d.loan = loan;
        return d;
    }
    static Decision with_preemption(Bandwidth native, Bandwidth loan, std::vector<LspId> victims) {
        Decision d;
        d.outcome = Outcome::AdmittedWithPreemption;
        d.native = native;
        d.loan = loan;
        d.victims = std::move(victims);
        return d;
    }
    static Decision blocked(BlockReason reason) {
        Decision d;
        d.outcome = Outcome::Blocked;
        d.reason = reason;
        return d;
    }

    [[nodiscard]] bool admitted_any() const { return outcome != Outcome::Blocked; }

    bool operator==(const Decision&) const = default;
};

}  // namespace bamsim
