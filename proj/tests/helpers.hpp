#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "bamsim/bamsim.hpp"

namespace bamsim::test {

// STM-4 link with the nested 100/70/40 percent constraint set.
inline ClassConfig stm4_config() {
    ClassConfig cfg;
    cfg.class_count = 3;
    cfg.bc = {mbps(622.0), mbps(435.4), mbps(248.8)};
    cfg.link_capacity = mbps(622.0);
    cfg.mam_overprovision = true;
    return cfg;
}

// Same percentages scaled onto a 10 Mbps link; small enough to enumerate.
inline ClassConfig toy_config() {
    ClassConfig cfg;
    cfg.class_count = 3;
    cfg.bc = {mbps(10.0), mbps(7.0), mbps(4.0)};
    cfg.link_capacity = mbps(10.0);
    cfg.mam_overprovision = true;
    return cfg;
}

inline LspRequest make_request(LspId id, int cls, double bw_mbps, double arrival_s = 0.0, double holding_s = 100.0) {
    LspRequest req;
    req.id = id;
    req.class_index = cls;
    req.bandwidth = mbps(bw_mbps);
    req.arrival = seconds(arrival_s);
    req.holding = seconds(holding_s);
    return req;
}

// (id, class, bandwidth_mbps, setup_s) tuples -> canonical state.
inline LinkState make_state(const std::vector<std::tuple<LspId, int, double, double>>& lsps, const ClassConfig& cfg,
                            Model model) {
    std::map<LspId, Lsp> admitted;
    for (const auto& [id, cls, bw, setup] : lsps) {
        LspRequest req = make_request(id, cls, bw, setup);
        admitted.emplace(id, Lsp{req, req.bandwidth, Bandwidth{}, req.arrival});
    }
    return rebuild_state(std::move(admitted), cfg, model);
}

}  // namespace bamsim::test
