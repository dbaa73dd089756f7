#pragma once

#include <algorithm>
#include <vector>

#include "bamsim/core/link_state.hpp"
#include "bamsim/core/loans.hpp"
#include "bamsim/core/types.hpp"

namespace bamsim {

namespace detail {

inline void check_request(const LinkState& state, const LspRequest& req, const ClassConfig& cfg) {
    if (req.class_index < 0 || req.class_index >= cfg.class_count) {
        throw ConfigError("request class " + std::to_string(req.class_index) + " out of range for " +
                          std::to_string(cfg.class_count) + " classes");
    }
    if (state.class_count() != cfg.class_count) {
        throw ConsistencyError("link state sized for a different class count than the configuration");
    }
    if (req.bandwidth <= Bandwidth{}) {
        throw ConfigError("request bandwidth must be positive");
    }
}

/// Preemption-candidate order shared by every victim scan: lowest class
/// first, then youngest setup first, ties broken by id descending.
inline bool victim_order(const Lsp* a, const Lsp* b) {
    if (a->class_index() != b->class_index()) return a->class_index() < b->class_index();
    if (a->setup_time != b->setup_time) return a->setup_time > b->setup_time;
    return a->request.id > b->request.id;
}

/// Canonical split the new LSP would receive if `req` joined `state` with the
/// given victims removed. Pure; does not modify the state.
inline std::pair<Bandwidth, Bandwidth> split_after_admission(const LinkState& state, const LspRequest& req,
                                                             const ClassConfig& cfg,
                                                             const std::vector<LspId>& victims) {
    std::map<LspId, Lsp> post = state.admitted;
    for (const LspId v : victims) post.erase(v);
    post.emplace(req.id, Lsp{req, Bandwidth{}, Bandwidth{}, req.arrival});
    const LoanAccounting acc = compute_loans(post, cfg);
    const Bandwidth native = acc.native_by_lsp.at(req.id);
    return {native, req.bandwidth - native};
}

}  // namespace detail

/// Maximum Allocation Model admission: the request is granted iff its class
/// stays within its own constraint and the link stays within capacity.
/// Classes are fully isolated, so MAM never preempts.
inline Decision mam_admit(const LinkState& state, const LspRequest& req, const ClassConfig& cfg) {
    detail::check_request(state, req, cfg);
    if (state.load[req.class_index] + req.bandwidth > cfg.bc[req.class_index]) {
        return Decision::blocked(BlockReason::ClassCap);
    }
    if (state.total_load + req.bandwidth > cfg.link_capacity) {
        return Decision::blocked(BlockReason::LinkCap);
    }
    return Decision::admitted(req.bandwidth, Bandwidth{});
}

/// Russian Doll Model admission.
///
/// A class-c request must satisfy every nested constraint it participates in:
/// cumulative_load(k) + b <= bc[k] for all k <= c. The innermost of those
/// (k == c) covers only classes >= c, so no lower-priority victim can restore
/// it, so if it fails the request is blocked outright. Any outer constraint can
/// be restored by tearing down lower-priority LSPs (classes below c); victims
/// are taken lowest class first, youngest first, skipping candidates whose
/// class no longer contributes to a violated constraint. RDM carries no
/// loans.
inline Decision rdm_admit(const LinkState& state, const LspRequest& req, const ClassConfig& cfg) {
    detail::check_request(state, req, cfg);
    const int cls = req.class_index;
    const Bandwidth b = req.bandwidth;

    if (cumulative_load(state, cls) + b > cfg.bc[cls]) {
        return Decision::blocked(BlockReason::SelfDoll);
    }

    // removed[k] = bandwidth already claimed from victims of class >= k
    std::vector<Bandwidth> removed(cfg.class_count);
    const auto lowest_violated = [&]() {
        for (int k = 0; k < cls; ++k) {
            if (cumulative_load(state, k) - removed[k] + b > cfg.bc[k]) return k;
        }
        return cls;  // none violated
    };

    int violated = lowest_violated();
    if (violated == cls) {
        return Decision::admitted(b, Bandwidth{});
    }

    std::vector<const Lsp*> candidates;
    for (const auto& [id, lsp] : state.admitted) {
        if (lsp.class_index() < cls) candidates.push_back(&lsp);
    }
    std::sort(candidates.begin(), candidates.end(), detail::victim_order);

    std::vector<LspId> victims;
    for (const Lsp* candidate : candidates) {
        if (candidate->class_index() < violated) continue;  // cannot reduce any violated sum
        victims.push_back(candidate->request.id);
        for (int k = 0; k <= candidate->class_index(); ++k) removed[k] += candidate->bandwidth();
        violated = lowest_violated();
        if (violated == cls) {
            return Decision::with_preemption(b, Bandwidth{}, std::move(victims));
        }
    }
    return Decision::blocked(BlockReason::InsufficientPreemptable);
}

/// AllocTC-Sharing admission.
///
/// Stage 1, opportunistic setup: any request fits as long as the link has
/// raw headroom (total_load + b <= capacity). The canonical accounting then
/// decides how much of it is native and how much rides as a loan on
/// lower-class headroom.
///
/// Stage 2, reclamation, in a fixed order, until the freed bandwidth covers
/// the shortfall:
///   (a) loan reclamation: loan-carrying LSPs of every class but the
///       requester's, lowest-priority borrower first, youngest first.
///       Borrowed bandwidth is preemptable by definition, so these victims
///       may fund the new LSP regardless of its own split.
///   (b) RDM-style preemption: fully-native LSPs of classes strictly below
///       the requester, lowest class first, youngest first. Tearing down a
///       native reservation is only justified by the requester's own nested
///       entitlement, so this stage engages only when the request would be
///       fully native in the post-reclamation canonical accounting. Without
///       that guard a class already over its constraint could evict lower
///       natives merely to grow its loans, which inverts the sharing model.
/// A victim frees its whole bandwidth; the freed amount may overshoot.
///
/// Stage 3, block: the request is rejected when headroom plus every victim
/// stage 2 legally allows still falls short.
inline Decision alloctc_admit(const LinkState& state, const LspRequest& req, const ClassConfig& cfg) {
    detail::check_request(state, req, cfg);
    const int cls = req.class_index;
    const Bandwidth b = req.bandwidth;
    const Bandwidth headroom = cfg.link_capacity - state.total_load;

    if (b <= headroom) {
        const auto [native, loan] = detail::split_after_admission(state, req, cfg, {});
        return Decision::admitted(native, loan);
    }

    std::vector<const Lsp*> loan_holders;
    std::vector<const Lsp*> native_lower;
    for (const auto& [id, lsp] : state.admitted) {
        if (lsp.loan > Bandwidth{} && lsp.class_index() != cls) {
            loan_holders.push_back(&lsp);
        } else if (lsp.loan.is_zero() && lsp.class_index() < cls) {
            native_lower.push_back(&lsp);
        }
    }
    std::sort(loan_holders.begin(), loan_holders.end(), detail::victim_order);
    std::sort(native_lower.begin(), native_lower.end(), detail::victim_order);

    const Bandwidth needed = b - headroom;
    Bandwidth freed;
    std::vector<LspId> victims;
    for (const Lsp* candidate : loan_holders) {
        if (freed >= needed) break;
        victims.push_back(candidate->request.id);
        freed += candidate->bandwidth();
    }
    if (freed < needed) {
        // every loan is gone; native evictions require full native entitlement
        const auto [native, loan] = detail::split_after_admission(state, req, cfg, victims);
        if (loan > Bandwidth{}) return Decision::blocked(BlockReason::Saturated);
        for (const Lsp* candidate : native_lower) {
            if (freed >= needed) break;
            victims.push_back(candidate->request.id);
            freed += candidate->bandwidth();
        }
        if (freed < needed) return Decision::blocked(BlockReason::Saturated);
    }
    const auto [native, loan] = detail::split_after_admission(state, req, cfg, victims);
    return Decision::with_preemption(native, loan, std::move(victims));
}

/// Model dispatch for one admission attempt.
inline Decision admit(const LinkState& state, const LspRequest& req, const ClassConfig& cfg, Model model) {
    switch (model) {
        case Model::Mam: return mam_admit(state, req, cfg);
        case Model::Rdm: return rdm_admit(state, req, cfg);
        case Model::AllocTc: return alloctc_admit(state, req, cfg);
    }
    throw ConfigError("unknown model");
}

/// Applies an admitting decision: victims out, the new LSP in, every derived
/// vector rebuilt. The decision must have been produced for exactly this
/// (state, req) pair; a victim that is no longer present or an id collision
/// raises ConsistencyError.
inline LinkState admit_apply(const LinkState& state, const LspRequest& req, const Decision& decision,
                             const ClassConfig& cfg, Model model) {
    if (!decision.admitted_any()) {
        throw ConsistencyError("admit_apply called with a blocked decision");
    }
    std::map<LspId, Lsp> admitted = state.admitted;
    for (const LspId victim : decision.victims) {
        if (admitted.erase(victim) == 0) {
            throw ConsistencyError("stale decision: victim " + std::to_string(victim) + " not admitted");
        }
    }
    if (admitted.count(req.id) != 0) {
        throw ConsistencyError("duplicate LSP id " + std::to_string(req.id));
    }
    admitted.emplace(req.id, Lsp{req, decision.native, decision.loan, req.arrival});
    return rebuild_state(std::move(admitted), cfg, model);
}

/// Removes one LSP (normal teardown at end of life) and re-canonicalizes:
/// under AllocTC, loans of surviving LSPs may convert back to native.
inline LinkState release(const LinkState& state, LspId id, const ClassConfig& cfg, Model model) {
    std::map<LspId, Lsp> admitted = state.admitted;
    if (admitted.erase(id) == 0) {
        throw ConsistencyError("release of unknown LSP id " + std::to_string(id));
    }
    return rebuild_state(std::move(admitted), cfg, model);
}

}  // namespace bamsim
