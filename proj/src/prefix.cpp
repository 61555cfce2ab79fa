#include "ctree/prefix.hpp"

#include <algorithm>

#include "ctree/errors.hpp"

namespace ctree {

namespace {

unsigned halvings(char c) { return c == '1' ? 1u : 2u; }

// Solves 3^L m + C = 0 (mod 2^K) for the least m >= 0 and fills m0 and p0.
void solve_residue(PrefixEquation& eq) {
    if (eq.K == 0) {
        eq.m0 = 0;
    } else {
        Nat inv;
        mpz_invert(inv.get_mpz_t(), eq.slope_num.get_mpz_t(), eq.denom.get_mpz_t());
        Nat m = -eq.intercept * inv;
        mpz_fdiv_r(eq.m0.get_mpz_t(), m.get_mpz_t(), eq.denom.get_mpz_t());
    }
    const Nat numer = eq.slope_num * eq.m0 + eq.intercept;
    if (!mpz_divisible_p(numer.get_mpz_t(), eq.denom.get_mpz_t())) {
        throw ConsistencyError("prefix " + eq.prefix + ": congruence solution is not exact");
    }
    eq.p0 = numer / eq.denom;
}

NodeKind leading_kind(const std::string& prefix) {
    if (prefix.size() == 1) {
        return NodeKind::Zero;
    }
    return prefix.front() == '1' ? NodeKind::One : NodeKind::Two;
}

std::string signed_term(const Nat& c) {
    if (sgn(c) < 0) {
        return " - " + to_string(-c);
    }
    return " + " + to_string(c);
}

}  // namespace

const std::string& validate_prefix(const std::string& prefix) {
    if (prefix.empty() || prefix.back() != '0') {
        throw ParseError("prefix '" + prefix + "' must end in the 0-node symbol '0'");
    }
    const bool body_ok = std::all_of(prefix.begin(), prefix.end() - 1,
                                     [](char c) { return c == '1' || c == '2'; });
    if (!body_ok) {
        throw ParseError("prefix '" + prefix + "' may only use '1' and '2' before the final '0'");
    }
    return prefix;
}

unsigned long PrefixEquation::endpoint_offset() const {
    switch (terminal_kind) {
        case NodeKind::One: return 5;
        case NodeKind::Two: return 1;
        case NodeKind::Zero: return 3;
    }
    return 3;
}

Nat PrefixEquation::endpoint_at(const Nat& k) const {
    return 6 * p_at(k) + endpoint_offset();
}

std::string PrefixEquation::str() const {
    const std::string mod = to_string(denom);
    return "p = (" + to_string(slope_num) + " m" + signed_term(intercept) + ") / " + mod +
           " ; m ≡ " + to_string(m0) + " (mod " + mod + ") ; p = " + to_string(p0) + " + " +
           to_string(slope_num) + " k";
}

PrefixEquation compile_prefix(const std::string& prefix) {
    validate_prefix(prefix);
    PrefixEquation eq;
    eq.prefix = prefix;
    eq.terminal_kind = leading_kind(prefix);

    // x = (a m + b) / 2^e, starting from the 0-node x = 6m + 3.
    Nat a = 6;
    Nat b = 3;
    unsigned e = 0;
    for (auto it = prefix.rbegin() + 1; it != prefix.rend(); ++it) {
        a *= 3;
        b = 3 * b + pow2(e);
        e += halvings(*it);
        ++eq.L;
    }
    eq.K = e;
    eq.slope_num = pow3(eq.L);
    eq.denom = pow2(eq.K);

    // 6p + r = (a m + b) / 2^K  =>  p = (3^L m + (b - r 2^K)/6) / 2^K
    const Nat numer = b - Nat(eq.endpoint_offset()) * eq.denom;
    if (!mpz_divisible_ui_p(numer.get_mpz_t(), 6) || a != 6 * eq.slope_num) {
        throw ConsistencyError("prefix " + prefix + ": endpoint is not of the expected node form");
    }
    eq.intercept = numer / 6;
    solve_residue(eq);
    return eq;
}

std::optional<Nat> apply_steps(const std::string& prefix, const Nat& x) {
    validate_prefix(prefix);
    Nat cur = x;
    for (auto it = prefix.rbegin() + 1; it != prefix.rend(); ++it) {
        Nat up = 3 * cur + 1;
        const unsigned d = halvings(*it);
        if (mpz_scan1(up.get_mpz_t(), 0) < d) {
            return std::nullopt;
        }
        mpz_fdiv_q_2exp(cur.get_mpz_t(), up.get_mpz_t(), d);
    }
    return cur;
}

std::vector<ProgressionRow> enumerate(const PrefixEquation& eq, std::uint64_t rows) {
    std::vector<ProgressionRow> out;
    out.reserve(rows);
    for (std::uint64_t k = 0; k < rows; ++k) {
        ProgressionRow row;
        row.k = k;
        const Nat kk(static_cast<unsigned long>(k));
        row.m = eq.m_at(kk);
        row.zero_node = 6 * row.m + 3;
        row.p = eq.p_at(kk);
        row.endpoint = eq.endpoint_at(kk);
        row.is_pump = residue(row.endpoint, 8) == 5;
        const auto forward = apply_steps(eq.prefix, row.zero_node);
        if (!forward || *forward != row.endpoint) {
            throw ConsistencyError("prefix " + eq.prefix + " row k=" + std::to_string(k) +
                                   ": forward steps from " + to_string(row.zero_node) +
                                   " do not reach " + to_string(row.endpoint));
        }
        out.push_back(std::move(row));
    }
    return out;
}

PrefixEquation extend(const PrefixEquation& parent, char symbol) {
    if (symbol != '1' && symbol != '2') {
        throw ParseError(std::string("extend: symbol must be '1' or '2', got '") + symbol + "'");
    }
    const unsigned d = halvings(symbol);
    PrefixEquation child;
    child.prefix = symbol + parent.prefix;
    child.L = parent.L + 1;
    child.K = parent.K + d;
    child.slope_num = 3 * parent.slope_num;
    child.denom = pow2(child.K);
    child.terminal_kind = symbol == '1' ? NodeKind::One : NodeKind::Two;

    // Intercept over the new denominator: scaled parent intercept plus the
    // shift expressed in units of 1/2^K'.
    Nat shift = 0;
    switch (parent.terminal_kind) {
        case NodeKind::Zero:
            shift = symbol == '1' ? 0 : 1;  // 0 and 1/4: the initial conditions
            break;
        case NodeKind::One:
            shift = pow2(child.K - 1);  // +1/2 for 1->1 and 1->2
            break;
        case NodeKind::Two:
            shift = symbol == '1' ? Nat(-pow2(child.K - 1)) : Nat(0);  // -1/2, 0
            break;
    }
    child.intercept = 3 * parent.intercept + shift;
    solve_residue(child);

    const PrefixEquation direct = compile_prefix(child.prefix);
    if (direct != child) {
        throw ConsistencyError("extend: scale/shift rule gives " + child.str() + " for " +
                               child.prefix + " but compilation gives " + direct.str());
    }
    return child;
}

const PrefixTreeNode* PrefixTree::find(const std::string& prefix) const {
    for (const auto& n : nodes) {
        if (n.equation.prefix == prefix) {
            return &n;
        }
    }
    return nullptr;
}

PrefixTree build_tree(unsigned depth) {
    PrefixTree tree;
    tree.depth = depth;
    tree.nodes.push_back({compile_prefix("0"), 0, std::nullopt, {}});
    std::size_t level_begin = 0;
    for (unsigned level = 1; level <= depth; ++level) {
        const std::size_t level_end = tree.nodes.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (int c = 0; c < 2; ++c) {
                PrefixEquation eq = extend(tree.nodes[i].equation, c == 0 ? '1' : '2');
                tree.nodes[i].children[c] = tree.nodes.size();
                tree.nodes.push_back({std::move(eq), level, i, {}});
            }
        }
        level_begin = level_end;
    }
    return tree;
}

unsigned pump_phase(const PrefixEquation& eq) {
    std::optional<unsigned> phase;
    for (unsigned k = 0; k < 4; ++k) {
        if (residue(eq.endpoint_at(Nat(k)), 8) == 5) {
            if (phase) {
                throw ConsistencyError("pump_phase: two pump residues for " + eq.prefix);
            }
            phase = k;
        }
    }
    if (!phase) {
        throw ConsistencyError("pump_phase: no pump residue for " + eq.prefix);
    }
    return *phase;
}

CoverageReport coverage_check(const Nat& bound, unsigned max_depth) {
    CoverageReport report;
    report.bound = bound;
    report.trivial_cycle_excluded = bound > 1;
    for (Nat v = 5; v < bound; v += 2) {
        const unsigned long r = residue(v, 6);
        if (r != 1 && r != 5) {
            continue;
        }
        ++report.candidates;
        const NodeInfo node = classify(v);
        try {
            const auto trace = primitive_backward(node, max_depth);
            const auto& back = std::get<PrimitiveItinerary>(trace);
            report.max_backward_depth = std::max<unsigned>(
                report.max_backward_depth, static_cast<unsigned>(back.length() - 1));
            const PrimitiveItinerary fwd = primitive_forward(back.start());
            const bool agrees = fwd.length() >= back.length() &&
                                std::equal(back.nodes.begin(), back.nodes.end(), fwd.nodes.begin());
            if (!agrees) {
                report.failures.push_back({v, "forward itinerary from " +
                                                  to_string(back.start().value) +
                                                  " does not pass through it"});
                continue;
            }
            ++report.covered;
        } catch (const ResourceError& e) {
            report.failures.push_back({v, e.what()});
        }
    }
    return report;
}

}  // namespace ctree
