#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctree/itinerary.hpp"

namespace ctree {

/// Affine congruence map from a 0-node index m to an endpoint index p.
///
/// A prefix is written endpoint-first, ending in the 0-node: "1220" means
/// 0-node -> 2-node -> 2-node -> 1-node. Starting at x = 6m+3, the steps
/// (3x+1)/2 per '1' and (3x+1)/4 per '2' (applied right to left) land on
/// 6p+5 (leading '1') or 6p+1 (leading '2'), where
///
///     p = (3^L m + C) / 2^K,   valid iff m = m0 (mod 2^K),
///
/// so p = p0 + 3^L k along m = m0 + 2^K k. C is kept as an exact signed
/// numerator over 2^K; it is never reduced.
struct PrefixEquation {
    std::string prefix;
    unsigned L = 0;  // binary symbols
    unsigned K = 0;  // total halvings
    Nat slope_num;   // 3^L
    Nat denom;       // 2^K
    Nat intercept;   // C, may be negative
    Nat m0;
    Nat p0;
    NodeKind terminal_kind = NodeKind::Zero;  // Zero only for the bare "0" family

    Nat m_at(const Nat& k) const { return m0 + denom * k; }
    Nat p_at(const Nat& k) const { return p0 + slope_num * k; }
    Nat endpoint_at(const Nat& k) const;
    unsigned long endpoint_offset() const;  // 5, 1, or 3 for the bare "0"

    /// "p = (27 m - 7) / 32 ; m ≡ 5 (mod 32) ; p = 4 + 27 k"
    std::string str() const;

    bool operator==(const PrefixEquation&) const = default;
};

struct ProgressionRow {
    std::uint64_t k = 0;
    Nat m;
    Nat zero_node;  // 6m+3
    Nat p;
    Nat endpoint;
    bool is_pump = false;
};

/// Validates [12]*0 and returns it unchanged; throws ParseError otherwise.
const std::string& validate_prefix(const std::string& prefix);

PrefixEquation compile_prefix(const std::string& prefix);

/// Applies the prefix's step maps to x, right to left. nullopt as soon as a
/// division is not exact.
std::optional<Nat> apply_steps(const std::string& prefix, const Nat& x);

/// Rows k = 0..rows-1, each re-verified by forward application of the step
/// maps; a mismatch raises ConsistencyError.
std::vector<ProgressionRow> enumerate(const PrefixEquation& eq, std::uint64_t rows);

/// Child equation by the scale/shift rule: scale 3/2 for '1' and 3/4 for
/// '2', then add a shift chosen by (parent's leading symbol -> new symbol):
///   1->1 +1/2,  1->2 +1/2,  2->1 -1/2,  2->2 0.
/// From the bare "0" the two initial conditions are produced directly
/// (shift 0 for '1', +1/4 for '2'). The result is checked against
/// compile_prefix of the extended string; disagreement is a
/// ConsistencyError.
PrefixEquation extend(const PrefixEquation& parent, char symbol);

struct PrefixTreeNode {
    PrefixEquation equation;
    unsigned depth = 0;
    std::optional<std::size_t> parent;
    std::array<std::optional<std::size_t>, 2> children;  // [0] via '1', [1] via '2'
};

/// Complete binary tree of prefix equations. nodes[0] is the bare "0" root;
/// nodes are stored level by level with '1' before '2'.
struct PrefixTree {
    std::vector<PrefixTreeNode> nodes;
    unsigned depth = 0;

    std::size_t edge_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }
    const PrefixTreeNode* find(const std::string& prefix) const;
};

PrefixTree build_tree(unsigned depth);

/// The k residue (mod 4) whose endpoint is a pump. Exactly one exists.
unsigned pump_phase(const PrefixEquation& eq);

struct CoverageFailure {
    Nat value;
    std::string detail;
};

struct CoverageReport {
    Nat bound;
    std::uint64_t candidates = 0;
    std::uint64_t covered = 0;
    bool trivial_cycle_excluded = false;  // value 1 was below the bound
    unsigned max_backward_depth = 0;
    std::vector<CoverageFailure> failures;
};

/// Every 1-/2-node v < bound (v != 1) is traced back to a 0-node and the
/// forward itinerary from that 0-node is required to pass through v.
CoverageReport coverage_check(const Nat& bound, unsigned max_depth = kDefaultBackwardDepth);

}  // namespace ctree
