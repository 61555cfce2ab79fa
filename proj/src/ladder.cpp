#include "ctree/ladder.hpp"

#include "ctree/errors.hpp"

namespace ctree {

CLadder generate_ladder(const NodeInfo& hub, unsigned pumps) {
    if (!hub.is_hub()) {
        throw DomainError("generate_ladder: " + to_string(hub.value) + " is not a hub");
    }
    CLadder ladder;
    ladder.hub = hub;
    ladder.length = pumps;
    ladder.rungs.reserve(pumps + 1);
    Nat node = hub.value;
    for (unsigned i = 0; i <= pumps; ++i) {
        ladder.rungs.push_back({node, 3 * node + 1});
        node = 4 * node + 1;
    }
    return ladder;
}

std::vector<KindStep> pump_kind_sequence(const CLadder& ladder) {
    std::vector<KindStep> out;
    out.reserve(ladder.rungs.size());
    for (const auto& rung : ladder.rungs) {
        const NodeInfo info = classify(rung.node);
        out.push_back({info.kind, info.character});
    }
    return out;
}

EvenThread even_thread(const NodeInfo& zero, unsigned depth) {
    if (zero.kind != NodeKind::Zero) {
        throw DomainError("even_thread: " + to_string(zero.value) + " is not a 0-node");
    }
    EvenThread thread{zero, {}};
    thread.preimages.reserve(depth);
    Nat v = zero.value;
    for (unsigned j = 0; j < depth; ++j) {
        v *= 2;
        thread.preimages.push_back(v);
    }
    return thread;
}

NodeInfo ladder_hub(const NodeInfo& node) {
    NodeInfo cur = node;
    while (cur.is_pump()) {
        cur = classify(pump_down(cur.value));
    }
    return cur;
}

}  // namespace ctree
