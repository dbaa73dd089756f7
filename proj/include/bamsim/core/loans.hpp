#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "bamsim/core/types.hpp"

namespace bamsim {

/// Canonical native/loan accounting for an admitted multiset.
struct LoanAccounting {
    std::vector<Bandwidth> native_by_class;
    std::vector<Bandwidth> loan_by_class;
    std::map<LspId, Bandwidth> native_by_lsp;  ///< loan = bandwidth - native
};

/// Recomputes the native/loan split from scratch as a pure function of the
/// admitted multiset.
///
/// Classes are processed from highest priority down to 0; within a class in
/// setup_time order (ties by id ascending). Each LSP receives native
/// bandwidth up to the largest amount that keeps the cumulative native load
/// of classes >= k within bc[k] for every k up to its own class; whatever is
/// left rides as a loan on lower-class headroom. On any state where the total
/// load fits the link, class 0 always ends up fully native.
inline LoanAccounting compute_loans(const std::map<LspId, Lsp>& admitted, const ClassConfig& cfg) {
    const int class_count = cfg.class_count;
    LoanAccounting acc;
    acc.native_by_class.resize(class_count);
    acc.loan_by_class.resize(class_count);

    std::vector<const Lsp*> order;
    order.reserve(admitted.size());
    for (const auto& [id, lsp] : admitted) order.push_back(&lsp);
    std::sort(order.begin(), order.end(), [](const Lsp* a, const Lsp* b) {
        if (a->class_index() != b->class_index()) return a->class_index() > b->class_index();
        if (a->setup_time != b->setup_time) return a->setup_time < b->setup_time;
        return a->request.id < b->request.id;
    });

    // suffix_native[k] = sum of assigned native over classes >= k
    std::vector<Bandwidth> suffix_native(class_count);
    for (const Lsp* lsp : order) {
        const int cls = lsp->class_index();
        Bandwidth headroom = cfg.bc[0] - suffix_native[0];
        for (int k = 1; k <= cls; ++k) {
            headroom = std::min(headroom, cfg.bc[k] - suffix_native[k]);
        }
        Bandwidth native = std::clamp(headroom, Bandwidth{}, lsp->bandwidth());
        acc.native_by_lsp.emplace(lsp->request.id, native);
        acc.native_by_class[cls] += native;
        acc.loan_by_class[cls] += lsp->bandwidth() - native;
        for (int k = 0; k <= cls; ++k) suffix_native[k] += native;
    }
    return acc;
}

}  // namespace bamsim
