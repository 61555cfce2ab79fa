#pragma once

#include <optional>
#include <string>

#include "ctree/arith.hpp"

namespace ctree {

// Numeric codes match the symbol alphabet: a 0-node reads as '0', etc.
enum class NodeKind : int { Zero = 0, One = 1, Two = 2 };

enum class NodeRole { Hub, Pump };

inline int code(NodeKind k) { return static_cast<int>(k); }
inline char symbol(NodeKind k) { return static_cast<char>('0' + code(k)); }

/// An odd integer together with its ternary kind and its hub/pump role.
///
/// kind:      x = 6m+3 -> Zero, 6m+5 -> One, 6m+1 -> Two.
/// character: t in {1,3,5} with x = 3(6n+t); present only for 0-nodes.
/// role:      x = 8p+5 (i.e. 4k+1 with k odd) -> Pump, anything else Hub.
struct NodeInfo {
    Nat value;
    NodeKind kind = NodeKind::Zero;
    std::optional<int> character;
    NodeRole role = NodeRole::Hub;

    bool is_pump() const { return role == NodeRole::Pump; }
    bool is_hub() const { return role == NodeRole::Hub; }

    bool operator==(const NodeInfo&) const = default;
};

NodeInfo classify(const Nat& x);

/// (2y-1)/3 for 1-nodes, (4y-1)/3 for 2-nodes. 0-nodes have no odd preimage.
NodeInfo first_odd_preimage(const NodeInfo& y);

/// Kind code of the first odd preimage from the closed forms
/// (y+4)/3 mod 3 (1-nodes) and (2y+4)/3 mod 3 (2-nodes).
int preimage_kind(const NodeInfo& y);

/// 4k+1. k must be odd.
Nat pump_up(const Nat& k);

/// (x-1)/4. x must be 1 mod 4.
Nat pump_down(const Nat& x);

/// Table annotation: "53:1", "3:0^{(1)}".
std::string annotate(const NodeInfo& n);

std::string kind_name(NodeKind k);

}  // namespace ctree
