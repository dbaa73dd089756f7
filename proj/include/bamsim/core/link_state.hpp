#pragma once

#include <map>
#include <vector>

#include "bamsim/core/loans.hpp"
#include "bamsim/core/types.hpp"

namespace bamsim {

/// Full admission state of one link: the admitted LSP set plus per-class
/// load vectors derived from it. The derived fields are a pure function of
/// `admitted`; rebuild_state() is the one place that computes them.
struct LinkState {
    std::map<LspId, Lsp> admitted;
    std::vector<Bandwidth> load;         ///< native + loan per class
    std::vector<Bandwidth> native_load;
    std::vector<Bandwidth> loan_load;
    Bandwidth total_load;

    LinkState() = default;
    explicit LinkState(int class_count)
        : load(class_count), native_load(class_count), loan_load(class_count) {}

    [[nodiscard]] int class_count() const { return static_cast<int>(load.size()); }
    [[nodiscard]] bool contains(LspId id) const { return admitted.find(id) != admitted.end(); }

    bool operator==(const LinkState&) const = default;
};

enum class LoadKind { All, Native };

/// Cumulative load of classes k and above (the nested-doll sum).
inline Bandwidth cumulative_load(const LinkState& state, int k, LoadKind kind = LoadKind::All) {
    if (k < 0 || k >= state.class_count()) throw ConfigError("cumulative_load: class index out of range");
    Bandwidth sum;
    const auto& source = kind == LoadKind::All ? state.load : state.native_load;
    for (int i = k; i < state.class_count(); ++i) sum += source[i];
    return sum;
}

/// Builds a consistent LinkState from an admitted multiset. Under RDM and
/// AllocTC the per-LSP splits are re-canonicalized via compute_loans; under
/// MAM every LSP is fully native.
inline LinkState rebuild_state(std::map<LspId, Lsp> admitted, const ClassConfig& cfg, Model model) {
    LinkState state(cfg.class_count);
    if (model == Model::Mam) {
        for (auto& [id, lsp] : admitted) {
            lsp.native = lsp.bandwidth();
            lsp.loan = Bandwidth{};
        }
    } else {
        const LoanAccounting acc = compute_loans(admitted, cfg);
        for (auto& [id, lsp] : admitted) {
            lsp.native = acc.native_by_lsp.at(id);
            lsp.loan = lsp.bandwidth() - lsp.native;
        }
    }
    for (const auto& [id, lsp] : admitted) {
        const int cls = lsp.class_index();
        if (cls < 0 || cls >= cfg.class_count) throw ConfigError("rebuild_state: class index out of range");
        state.native_load[cls] += lsp.native;
        state.loan_load[cls] += lsp.loan;
        state.load[cls] += lsp.bandwidth();
        state.total_load += lsp.bandwidth();
    }
    state.admitted = std::move(admitted);
    return state;
}

}  // namespace bamsim
