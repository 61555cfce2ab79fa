#pragma once

#include <optional>
#include <vector>

#include "ctree/node.hpp"

namespace ctree {

struct Rung {
    Nat node;
    Nat image;  // raw 3*node + 1, the even top of the rung
};

/// A hub and the chain hub, 4*hub+1, 4*(4*hub+1)+1, ... with the raw
/// Collatz image of each rung. Consecutive images differ by a factor of 4.
struct CLadder {
    NodeInfo hub;
    std::vector<Rung> rungs;
    unsigned length = 0;  // pumps applied; rungs.size() == length + 1
};

/// Even preimages 2z, 4z, ... of a 0-node z.
struct EvenThread {
    NodeInfo zero_node;
    std::vector<Nat> preimages;
};

struct KindStep {
    NodeKind kind;
    std::optional<int> character;
};

CLadder generate_ladder(const NodeInfo& hub, unsigned pumps);

/// Kind (and 0-node character) of every rung, in ladder order.
std::vector<KindStep> pump_kind_sequence(const CLadder& ladder);

EvenThread even_thread(const NodeInfo& zero, unsigned depth);

/// Walks 4k+1 pumps back down until a hub is reached.
NodeInfo ladder_hub(const NodeInfo& node);

}  // namespace ctree
