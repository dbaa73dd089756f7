#include "doctest.h"

#include "helpers.hpp"

using namespace bamsim;
using namespace bamsim::test;

TEST_CASE("cumulative load sums classes k and above") {
    const ClassConfig cfg = stm4_config();
    const LinkState empty(3);
    CHECK(cumulative_load(empty, 0).is_zero());

    const LinkState state = make_state({{0, 0, 100.0, 0.0}, {1, 1, 50.0, 1.0}, {2, 2, 200.0, 2.0}}, cfg, Model::Rdm);
    CHECK(cumulative_load(state, 1) == mbps(250.0));
    CHECK(cumulative_load(state, 0) == mbps(350.0));
    CHECK(cumulative_load(state, 2) == mbps(200.0));
    CHECK(cumulative_load(state, 0, LoadKind::Native) == mbps(350.0));
    CHECK_THROWS_AS(cumulative_load(state, 3), ConfigError);
    CHECK_THROWS_AS(cumulative_load(state, -1), ConfigError);
}

TEST_CASE("native and loan cumulative sums diverge once loans exist") {
    const ClassConfig cfg = stm4_config();
    const LinkState state = make_state({{0, 2, 300.0, 0.0}}, cfg, Model::AllocTc);
    CHECK(cumulative_load(state, 2) == mbps(300.0));
    CHECK(cumulative_load(state, 2, LoadKind::Native) == mbps(248.8));
}

TEST_CASE("applying a preemption decision swaps victims for the new LSP") {
    const ClassConfig cfg = stm4_config();
    std::vector<std::tuple<LspId, int, double, double>> lsps;
    for (int i = 0; i < 10; ++i) lsps.emplace_back(i, 0, 60.0, static_cast<double>(i));
    const LinkState state = make_state(lsps, cfg, Model::Rdm);
    const LspRequest req = make_request(100, 2, 100.0, 20.0);
    const Decision d = rdm_admit(state, req, cfg);
    REQUIRE(d.outcome == Outcome::AdmittedWithPreemption);
    REQUIRE(d.victims.size() == 2);
    const LinkState after = admit_apply(state, req, d, cfg, Model::Rdm);
    CHECK(after.admitted.size() == state.admitted.size() - 2 + 1);
    CHECK(after.contains(100));
}

TEST_CASE("stale decisions and unknown releases raise consistency errors") {
    const ClassConfig cfg = stm4_config();
    LinkState state = make_state({{0, 0, 60.0, 0.0}, {1, 0, 60.0, 1.0}}, cfg, Model::Rdm);

    Decision stale = Decision::with_preemption(mbps(10.0), Bandwidth{}, {77});  // 77 was never admitted
    CHECK_THROWS_AS(admit_apply(state, make_request(5, 2, 10.0), stale, cfg, Model::Rdm), ConsistencyError);

    Decision blocked = Decision::blocked(BlockReason::SelfDoll);
    CHECK_THROWS_AS(admit_apply(state, make_request(5, 2, 10.0), blocked, cfg, Model::Rdm), ConsistencyError);

    Decision plain = Decision::admitted(mbps(10.0), Bandwidth{});
    CHECK_THROWS_AS(admit_apply(state, make_request(0, 2, 10.0), plain, cfg, Model::Rdm), ConsistencyError);  // id reuse

    CHECK_THROWS_AS(release(state, 99, cfg, Model::Rdm), ConsistencyError);
}

TEST_CASE("config validation catches the degenerate shapes") {
    ClassConfig cfg;
    cfg.class_count = 0;
    CHECK(!validate_config(cfg, Model::Rdm).empty());

    cfg = stm4_config();
    cfg.bc[2] = Bandwidth{};
    CHECK(!validate_config(cfg, Model::Rdm).empty());

    cfg = stm4_config();
    cfg.class_count = 9;
    cfg.bc.resize(9, mbps(1.0));
    CHECK(!validate_config(cfg, Model::Rdm).empty());

    cfg = stm4_config();
    cfg.bc[0] = mbps(600.0);  // nested models need bc0 == capacity
    CHECK(!validate_config(cfg, Model::Rdm).empty());
    CHECK(!validate_config(cfg, Model::AllocTc).empty());
}
