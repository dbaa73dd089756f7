#pragma once

#include <string>
#include <vector>

#include "bamsim/core/link_state.hpp"
#include "bamsim/core/loans.hpp"
#include "bamsim/core/types.hpp"

namespace bamsim {

/// One violated constraint, with the offending quantities spelled out.
struct Violation {
    std::string constraint;  ///< stable identifier, e.g. "rdm.cumulative_cap"
    int class_index = -1;    ///< offending class/constraint index, -1 when not class-specific
    std::string detail;
};

/// Checks every invariant the given model imposes on a link state. Returns
/// an empty list iff the state is valid; each entry names the violated
/// constraint. States produced by the admit/apply/release operations always
/// verify clean; the simulator asserts this after every event.
inline std::vector<Violation> verify_invariants(const LinkState& state, const ClassConfig& cfg, Model model) {
    std::vector<Violation> out;
    const int class_count = cfg.class_count;

    if (state.class_count() != class_count) {
        out.push_back({"state.shape", -1,
                       "state has " + std::to_string(state.class_count()) + " classes, configuration has " +
                           std::to_string(class_count)});
        return out;
    }

    // Per-LSP accounting and recomputed aggregates.
    std::vector<Bandwidth> load(class_count), native(class_count), loan(class_count);
    Bandwidth total;
    for (const auto& [id, lsp] : state.admitted) {
        const int cls = lsp.class_index();
        if (cls < 0 || cls >= class_count) {
            out.push_back({"lsp.class_range", cls, "LSP " + std::to_string(id) + " has class out of range"});
            return out;
        }
        if (lsp.native < Bandwidth{} || lsp.loan < Bandwidth{}) {
            out.push_back({"lsp.negative_split", cls, "LSP " + std::to_string(id) + " has a negative split"});
        }
        if (lsp.native + lsp.loan != lsp.bandwidth()) {
            out.push_back({"lsp.split_sum", cls,
                           "LSP " + std::to_string(id) + ": native " + lsp.native.str() + " + loan " +
                               lsp.loan.str() + " != bandwidth " + lsp.bandwidth().str()});
        }
        load[cls] += lsp.bandwidth();
        native[cls] += lsp.native;
        loan[cls] += lsp.loan;
        total += lsp.bandwidth();
    }
    for (int i = 0; i < class_count; ++i) {
        if (load[i] != state.load[i] || native[i] != state.native_load[i] || loan[i] != state.loan_load[i]) {
            out.push_back({"state.derived_consistency", i,
                           "stored per-class vectors disagree with sums over the admitted set for class " +
                               std::to_string(i)});
        }
    }
    if (total != state.total_load) {
        out.push_back({"state.derived_consistency", -1,
                       "stored total_load " + state.total_load.str() + " != admitted sum " + total.str()});
    }

    if (state.total_load > cfg.link_capacity) {
        out.push_back({"link.capacity", -1,
                       "total load " + state.total_load.str() + " Mbps exceeds capacity " +
                           cfg.link_capacity.str() + " Mbps"});
    }

    const auto require_zero_loans = [&](const char* constraint) {
        for (const auto& [id, lsp] : state.admitted) {
            if (!lsp.loan.is_zero()) {
                out.push_back({constraint, lsp.class_index(),
                               "LSP " + std::to_string(id) + " carries a loan of " + lsp.loan.str() + " Mbps"});
            }
        }
    };

    switch (model) {
        case Model::Mam: {
            for (int i = 0; i < class_count; ++i) {
                if (state.load[i] > cfg.bc[i]) {
                    out.push_back({"mam.class_cap", i,
                                   "class " + std::to_string(i) + " load " + state.load[i].str() +
                                       " Mbps exceeds bc " + cfg.bc[i].str() + " Mbps"});
                }
            }
            require_zero_loans("mam.loan_free");
            break;
        }
        case Model::Rdm: {
            for (int k = 0; k < class_count; ++k) {
                const Bandwidth cum = cumulative_load(state, k);
                if (cum > cfg.bc[k]) {
                    out.push_back({"rdm.cumulative_cap", k,
                                   "k=" + std::to_string(k) + ": cumulative load " + cum.str() +
                                       " Mbps exceeds bc " + cfg.bc[k].str() + " Mbps"});
                }
            }
            require_zero_loans("rdm.loan_free");
            break;
        }
        case Model::AllocTc: {
            for (int k = 0; k < class_count; ++k) {
                const Bandwidth cum = cumulative_load(state, k, LoadKind::Native);
                if (cum > cfg.bc[k]) {
                    out.push_back({"alloctc.native_cap", k,
                                   "k=" + std::to_string(k) + ": cumulative native load " + cum.str() +
                                       " Mbps exceeds bc " + cfg.bc[k].str() + " Mbps"});
                }
            }
            for (const auto& [id, lsp] : state.admitted) {
                if (lsp.class_index() == 0 && !lsp.loan.is_zero()) {
                    out.push_back({"alloctc.class0_loan", 0,
                                   "class-0 LSP " + std::to_string(id) + " carries a loan of " + lsp.loan.str() +
                                       " Mbps"});
                }
            }
            // Stored splits must match the canonical recomputation exactly.
            const LoanAccounting acc = compute_loans(state.admitted, cfg);
            for (const auto& [id, lsp] : state.admitted) {
                const Bandwidth canonical = acc.native_by_lsp.at(id);
                if (lsp.native != canonical) {
                    out.push_back({"alloctc.noncanonical", lsp.class_index(),
                                   "LSP " + std::to_string(id) + " stores native " + lsp.native.str() +
                                       " Mbps, canonical accounting gives " + canonical.str() + " Mbps"});
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace bamsim
