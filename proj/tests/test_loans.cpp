#include "doctest.h"

#include "helpers.hpp"

using namespace bamsim;
using namespace bamsim::test;

namespace {

Lsp make_lsp(LspId id, int cls, double bw, double setup) {
    LspRequest req = make_request(id, cls, bw, setup);
    return Lsp{req, Bandwidth{}, Bandwidth{}, req.arrival};
}

}  // namespace

TEST_CASE("single oversized top-class LSP is split at its own constraint") {
    const ClassConfig cfg = stm4_config();
    std::map<LspId, Lsp> admitted;
    admitted.emplace(0, make_lsp(0, 2, 300.0, 0.0));
    const LoanAccounting acc = compute_loans(admitted, cfg);
    CHECK(acc.native_by_lsp.at(0) == mbps(248.8));
    CHECK(acc.native_by_class[2] == mbps(248.8));
    CHECK(acc.loan_by_class[2] == mbps(51.2));
}

TEST_CASE("empty set yields all-zero accounting") {
    const ClassConfig cfg = stm4_config();
    const LoanAccounting acc = compute_loans({}, cfg);
    for (int i = 0; i < 3; ++i) {
        CHECK(acc.native_by_class[i].is_zero());
        CHECK(acc.loan_by_class[i].is_zero());
    }
}

TEST_CASE("nested constraints all holding means zero loans") {
    const ClassConfig cfg = stm4_config();
    std::map<LspId, Lsp> admitted;
    admitted.emplace(0, make_lsp(0, 1, 200.0, 0.0));
    admitted.emplace(1, make_lsp(1, 2, 200.0, 1.0));
    const LoanAccounting acc = compute_loans(admitted, cfg);
    CHECK(acc.native_by_lsp.at(0) == mbps(200.0));
    CHECK(acc.native_by_lsp.at(1) == mbps(200.0));
    CHECK(acc.loan_by_class[1].is_zero());
    CHECK(acc.loan_by_class[2].is_zero());
}

TEST_CASE("within a class the oldest LSPs take the native share") {
    // Four 87.2 Mbps top-class LSPs against bc=248.8: natives 87.2/87.2/74.4/0.
    const ClassConfig cfg = stm4_config();
    std::map<LspId, Lsp> admitted;
    for (int i = 0; i < 4; ++i) admitted.emplace(i, make_lsp(i, 2, 87.2, static_cast<double>(i)));
    const LoanAccounting acc = compute_loans(admitted, cfg);
    CHECK(acc.native_by_lsp.at(0) == mbps(87.2));
    CHECK(acc.native_by_lsp.at(1) == mbps(87.2));
    CHECK(acc.native_by_lsp.at(2) == mbps(74.4));
    CHECK(acc.native_by_lsp.at(3) == mbps(0.0));
    CHECK(acc.loan_by_class[2] == mbps(100.0));
}

TEST_CASE("a middle class borrows when higher natives consume its doll") {
    const ClassConfig cfg = stm4_config();
    std::map<LspId, Lsp> admitted;
    admitted.emplace(0, make_lsp(0, 2, 200.0, 0.0));
    admitted.emplace(1, make_lsp(1, 1, 300.0, 1.0));
    const LoanAccounting acc = compute_loans(admitted, cfg);
    CHECK(acc.native_by_lsp.at(0) == mbps(200.0));
    CHECK(acc.native_by_lsp.at(1) == mbps(235.4));  // 435.4 - 200
    CHECK(acc.loan_by_class[1] == mbps(64.6));
}

TEST_CASE("setup ties fall back to ascending id") {
    const ClassConfig cfg = stm4_config();
    std::map<LspId, Lsp> admitted;
    admitted.emplace(7, make_lsp(7, 2, 200.0, 5.0));
    admitted.emplace(3, make_lsp(3, 2, 200.0, 5.0));
    const LoanAccounting acc = compute_loans(admitted, cfg);
    CHECK(acc.native_by_lsp.at(3) == mbps(200.0));
    CHECK(acc.native_by_lsp.at(7) == mbps(48.8));
}

TEST_CASE("class 0 is always fully native on feasible states") {
    const ClassConfig cfg = toy_config();
    SplitMix64 rng(31337);
    for (int round = 0; round < 500; ++round) {
        std::map<LspId, Lsp> admitted;
        Bandwidth total;
        LspId id = 0;
        while (true) {
            const Bandwidth b = Bandwidth::from_ticks(1 + static_cast<std::int64_t>(rng.next_below(30)));
            if (total + b > cfg.link_capacity) break;
            total += b;
            const int cls = static_cast<int>(rng.next_below(3));
            admitted.emplace(id, make_lsp(id, cls, b.to_double(), static_cast<double>(rng.next_below(100))));
            ++id;
        }
        const LoanAccounting acc = compute_loans(admitted, cfg);
        for (const auto& [lsp_id, lsp] : admitted) {
            if (lsp.class_index() == 0) CHECK(acc.native_by_lsp.at(lsp_id) == lsp.bandwidth());
        }
        CHECK(acc.loan_by_class[0].is_zero());
        // nested native caps hold by construction
        Bandwidth suffix;
        for (int k = 2; k >= 0; --k) {
            suffix += acc.native_by_class[k];
            CHECK(suffix <= cfg.bc[k]);
        }
    }
}

TEST_CASE("releasing a higher class returns loans to a lower borrower") {
    const ClassConfig cfg = stm4_config();
    LinkState state = make_state({{0, 2, 200.0, 0.0}, {1, 1, 300.0, 1.0}}, cfg, Model::AllocTc);
    CHECK(state.admitted.at(1).loan == mbps(64.6));
    const LinkState after = release(state, 0, cfg, Model::AllocTc);
    CHECK(after.admitted.at(1).loan.is_zero());
    CHECK(after.admitted.at(1).native == mbps(300.0));
}

TEST_CASE("releasing a lower class cannot change a higher class's split") {
    // The top class's split is pinned by its own innermost constraint, which
    // no lower-class release relaxes.
    const ClassConfig cfg = stm4_config();
    LinkState state = make_state({{0, 2, 300.0, 0.0}, {1, 1, 100.0, 1.0}}, cfg, Model::AllocTc);
    CHECK(state.admitted.at(0).loan == mbps(51.2));
    const LinkState after = release(state, 1, cfg, Model::AllocTc);
    CHECK(after.admitted.at(0).loan == mbps(51.2));
    CHECK(after.admitted.at(0).native == mbps(248.8));
}
