#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ctree/node.hpp"

namespace ctree {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;
inline constexpr unsigned kDefaultBackwardDepth = 10'000;

/// Odd-node chain from a 0-node through 1-/2-node hubs to the first pump.
///
/// Stored chronologically: nodes.front() is the 0-node and symbols[0] == 0.
/// divisors[i] is the power of two dividing 3*nodes[i]+1 to reach
/// nodes[i+1]; it is 2 exactly when nodes[i+1] is a 1-node and 4 when it is
/// a 2-node. A single node that is both a 0-node and a pump (21, 213, ...)
/// is an itinerary of length one.
struct PrimitiveItinerary {
    std::vector<NodeInfo> nodes;
    std::vector<unsigned> divisors;
    std::vector<NodeKind> symbols;

    std::size_t length() const { return nodes.size(); }
    const NodeInfo& start() const { return nodes.front(); }
    const NodeInfo& end() const { return nodes.back(); }
    // False only for backward traces that were started from a hub.
    bool ends_at_pump() const { return nodes.back().is_pump(); }
};

/// The backward trace from 1 never reaches a 0-node: 1 is its own first
/// odd preimage (the "222..." sequence of the 1 -> 4 -> 2 -> 1 cycle).
struct TrivialCycle {};

using BackwardTrace = std::variant<PrimitiveItinerary, TrivialCycle>;

/// Symbol string in table orientation: endpoint first, 0-node last.
struct SequenceRendering {
    std::string text;
    Nat start_value;
    int start_character = 0;

    /// "21120^{9(3)}"
    std::string str() const;
};

PrimitiveItinerary primitive_forward(const NodeInfo& zero,
                                     std::uint64_t budget = kDefaultStepBudget);

BackwardTrace primitive_backward(const NodeInfo& end,
                                 unsigned max_depth = kDefaultBackwardDepth);

SequenceRendering render(const PrimitiveItinerary& it);

/// Chronological symbol string, e.g. "02112".
std::string chronological(const PrimitiveItinerary& it);

}  // namespace ctree
