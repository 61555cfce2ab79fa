#include "ctree/itinerary.hpp"

#include <algorithm>

#include "ctree/errors.hpp"

namespace ctree {

namespace {

PrimitiveItinerary from_chain(std::vector<NodeInfo> chain) {
    PrimitiveItinerary it;
    it.nodes = std::move(chain);
    it.symbols.reserve(it.nodes.size());
    for (const auto& n : it.nodes) {
        it.symbols.push_back(n.kind);
    }
    for (std::size_t i = 1; i < it.nodes.size(); ++i) {
        it.divisors.push_back(it.nodes[i].kind == NodeKind::One ? 2u : 4u);
    }
    return it;
}

}  // namespace

std::string SequenceRendering::str() const {
    return text + "^{" + to_string(start_value) + "(" + std::to_string(start_character) + ")}";
}

PrimitiveItinerary primitive_forward(const NodeInfo& zero, std::uint64_t budget) {
    if (zero.kind != NodeKind::Zero) {
        throw DomainError("primitive_forward: " + to_string(zero.value) + " is not a 0-node");
    }
    std::vector<NodeInfo> chain{zero};
    std::uint64_t steps = 0;
    while (!chain.back().is_pump()) {
        if (++steps > budget) {
            throw ResourceError("primitive_forward: step budget of " + std::to_string(budget) +
                                " exhausted from " + to_string(zero.value));
        }
        const OddStep step = odd_to_odd(chain.back().value);
        if (step.divisions != 1 && step.divisions != 2) {
            throw ConsistencyError("primitive_forward: hub " + to_string(chain.back().value) +
                                   " divided by 2^" + std::to_string(step.divisions));
        }
        chain.push_back(classify(step.next));
    }
    return from_chain(std::move(chain));
}

BackwardTrace primitive_backward(const NodeInfo& end, unsigned max_depth) {
    if (end.value == 1) {
        return TrivialCycle{};
    }
    std::vector<NodeInfo> chain{end};
    while (chain.back().kind != NodeKind::Zero) {
        if (chain.size() > max_depth) {
            throw ResourceError("primitive_backward: depth limit " + std::to_string(max_depth) +
                                " reached from " + to_string(end.value));
        }
        chain.push_back(first_odd_preimage(chain.back()));
    }
    std::reverse(chain.begin(), chain.end());
    return from_chain(std::move(chain));
}

SequenceRendering render(const PrimitiveItinerary& it) {
    SequenceRendering r;
    r.text.reserve(it.symbols.size());
    for (auto k = it.symbols.rbegin(); k != it.symbols.rend(); ++k) {
        r.text.push_back(symbol(*k));
    }
    r.start_value = it.start().value;
    r.start_character = it.start().character.value_or(0);
    return r;
}

std::string chronological(const PrimitiveItinerary& it) {
    std::string s;
    for (auto k : it.symbols) {
        s.push_back(symbol(k));
    }
    return s;
}

}  // namespace ctree
