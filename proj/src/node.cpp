#include "ctree/node.hpp"

#include <cassert>

#include "ctree/errors.hpp"

namespace ctree {

NodeInfo classify(const Nat& x) {
    if (sgn(x) <= 0 || !is_odd(x)) {
        throw DomainError("classify: nodes are odd positive integers, got " + to_string(x));
    }
    NodeInfo info;
    info.value = x;
    switch (residue(x, 6)) {
        case 3: {
            info.kind = NodeKind::Zero;
            // x = 3(6n+t)  <=>  t = (x/3) mod 6
            Nat third = x / 3;
            info.character = static_cast<int>(residue(third, 6));
            break;
        }
        case 5: info.kind = NodeKind::One; break;
        case 1: info.kind = NodeKind::Two; break;
        default: assert(false && "odd residue mod 6");
    }
    info.role = residue(x, 8) == 5 ? NodeRole::Pump : NodeRole::Hub;
    return info;
}

NodeInfo first_odd_preimage(const NodeInfo& y) {
    Nat pre;
    switch (y.kind) {
        case NodeKind::One: pre = (2 * y.value - 1) / 3; break;
        case NodeKind::Two: pre = (4 * y.value - 1) / 3; break;
        case NodeKind::Zero:
            throw DomainError("first_odd_preimage: 0-node " + to_string(y.value) +
                              " has only even preimages");
    }
    return classify(pre);
}

int preimage_kind(const NodeInfo& y) {
    Nat numer;
    switch (y.kind) {
        case NodeKind::One: numer = y.value + 4; break;
        case NodeKind::Two: numer = 2 * y.value + 4; break;
        case NodeKind::Zero:
            throw DomainError("preimage_kind: 0-node " + to_string(y.value) + " has no odd preimage");
    }
    const int s = static_cast<int>(residue(numer / 3, 3));
#ifndef NDEBUG
    if (s != code(first_odd_preimage(y).kind)) {
        throw ConsistencyError("preimage_kind: closed form disagrees with direct preimage of " +
                               to_string(y.value));
    }
#endif
    return s;
}

Nat pump_up(const Nat& k) {
    if (sgn(k) <= 0 || !is_odd(k)) {
        throw DomainError("pump_up: k must be odd and positive, got " + to_string(k));
    }
    return 4 * k + 1;
}

Nat pump_down(const Nat& x) {
    if (sgn(x) <= 0 || residue(x, 4) != 1) {
        throw DomainError("pump_down: " + to_string(x) + " is not of the form 4k+1");
    }
    return (x - 1) / 4;
}

std::string annotate(const NodeInfo& n) {
    std::string s = to_string(n.value) + ":" + symbol(n.kind);
    if (n.character) {
        s += "^{(" + std::to_string(*n.character) + ")}";
    }
    return s;
}

std::string kind_name(NodeKind k) {
    return std::string(1, symbol(k)) + "-node";
}

}  // namespace ctree
