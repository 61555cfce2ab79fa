#include "ctree/oracle.hpp"

#include <algorithm>
#include <exception>
#include <iterator>
#include <thread>

#include "ctree/errors.hpp"
#include "ctree/ladder.hpp"

namespace ctree {

Orbit orbit(const Nat& x, std::uint64_t budget) {
    if (sgn(x) <= 0) {
        throw DomainError("orbit: start must be >= 1, got " + to_string(x));
    }
    Orbit o;
    o.start = x;
    o.values.push_back(x);
    do {
        if (o.steps == budget) {
            return o;
        }
        o.values.push_back(collatz_step(o.values.back()));
        ++o.steps;
    } while (o.values.back() != 1);
    o.reached_one = true;
    return o;
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks{
        Check::Classification,         Check::HubImage,        Check::PreimageFormulas,
        Check::CanonicalRelation,      Check::PrimitiveDecomposition,
        Check::PumpPeriodicity,        Check::Coverage,
    };
    return checks;
}

std::string check_name(Check c) {
    switch (c) {
        case Check::Classification: return "classification";
        case Check::HubImage: return "hub-image";
        case Check::PreimageFormulas: return "preimage-formulas";
        case Check::CanonicalRelation: return "canonical-relation";
        case Check::PrimitiveDecomposition: return "primitive-decomposition";
        case Check::PumpPeriodicity: return "pump-periodicity";
        case Check::Coverage: return "coverage";
    }
    return "?";
}

Check parse_check(const std::string& name) {
    for (Check c : all_checks()) {
        if (check_name(c) == name) {
            return c;
        }
    }
    throw ParseError("unknown check '" + name + "'");
}

namespace {

// Odd subsequence of a raw orbit and the number of halvings between
// consecutive odd values.
struct OddWalk {
    std::vector<Nat> odds;
    std::vector<unsigned> halvings;
};

OddWalk odd_walk(const Orbit& o) {
    OddWalk w;
    unsigned pending = 0;
    for (const Nat& v : o.values) {
        if (is_odd(v)) {
            if (!w.odds.empty()) {
                w.halvings.push_back(pending);
            }
            w.odds.push_back(v);
            pending = 0;
        } else {
            ++pending;
        }
    }
    return w;
}

struct RawStep {
    Nat next;
    unsigned halvings = 0;
};

// First odd value after odd y, by plain iteration of the Collatz map.
RawStep next_odd_by_iteration(const Nat& y) {
    RawStep r;
    r.next = collatz_step(y);
    while (!is_odd(r.next)) {
        r.next = collatz_step(r.next);
        ++r.halvings;
    }
    return r;
}

// Definitional forms, computed by exact division rather than residues.
bool has_form(const Nat& x, unsigned long mult, unsigned long offset) {
    if (x < offset) {
        return false;
    }
    const Nat rest = x - offset;
    return mpz_divisible_ui_p(rest.get_mpz_t(), mult) != 0;
}

bool is_pump_by_definition(const Nat& x) {
    // 4k+1 with k odd
    if (!has_form(x, 4, 1)) {
        return false;
    }
    const Nat k = (x - 1) / 4;
    return is_odd(k);
}

NodeKind next_pump_kind(NodeKind k) {
    switch (k) {
        case NodeKind::Zero: return NodeKind::Two;
        case NodeKind::Two: return NodeKind::One;
        case NodeKind::One: return NodeKind::Zero;
    }
    return k;
}

int next_character(int t) {
    switch (t) {
        case 1: return 5;
        case 5: return 3;
        default: return 1;
    }
}

std::string kind_text(NodeKind k) { return std::string(1, symbol(k)); }

std::string join(const std::vector<Nat>& xs, std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) {
        if (i > from) {
            s += ",";
        }
        s += to_string(xs[i]);
    }
    return s;
}

std::string join(const std::vector<NodeInfo>& xs, std::size_t from, std::size_t to) {
    std::vector<Nat> vs;
    for (std::size_t i = from; i < to; ++i) {
        vs.push_back(xs[i].value);
    }
    return join(vs, 0, vs.size());
}

class Checker {
public:
    Checker(const std::set<Check>& checks, const SweepOptions& options)
        : checks_(checks), options_(options) {
        for (Check c : checks_) {
            report_.checks_run[check_name(c)] = 0;
        }
    }

    void run(const Nat& x) {
        if (x == 1) {
            report_.trivial_cycle_excluded.push_back(x);
        }
        const NodeInfo info = classify(x);
        const Orbit raw = orbit(x, options_.budget);
        if (!raw.reached_one) {
            fail(x, "orbit", "reaches 1", "budget of " + std::to_string(options_.budget) + " steps exhausted");
            return;
        }
        const OddWalk walk = odd_walk(raw);

        if (wants(Check::Classification)) classification(info, walk);
        if (wants(Check::HubImage) && info.is_hub()) hub_image(info, walk);
        if (wants(Check::PreimageFormulas) && info.kind != NodeKind::Zero) preimage(info);
        if (wants(Check::CanonicalRelation)) canonical(info, walk);
        if (wants(Check::PrimitiveDecomposition) && x != 1) decomposition(info, walk);
        if (wants(Check::PumpPeriodicity)) pump_periodicity(info);
        if (wants(Check::Coverage) && info.kind != NodeKind::Zero && x != 1) coverage(info);
    }

    VerificationReport take() { return std::move(report_); }

private:
    bool wants(Check c) const { return checks_.count(c) != 0; }

    void count(Check c) { ++report_.checks_run[check_name(c)]; }

    void fail(const Nat& x, const std::string& check, std::string expected, std::string actual) {
        report_.failures.push_back({x, check, std::move(expected), std::move(actual)});
    }

    void fail(const Nat& x, Check c, std::string expected, std::string actual) {
        fail(x, check_name(c), std::move(expected), std::move(actual));
    }

    void classification(const NodeInfo& info, const OddWalk& walk) {
        count(Check::Classification);
        const Nat& x = info.value;
        NodeKind by_form = NodeKind::Zero;
        if (has_form(x, 6, 5)) {
            by_form = NodeKind::One;
        } else if (has_form(x, 6, 1)) {
            by_form = NodeKind::Two;
        } else if (!has_form(x, 6, 3)) {
            fail(x, Check::Classification, "one of 6m+1, 6m+3, 6m+5", "none");
            return;
        }
        if (info.kind != by_form) {
            fail(x, Check::Classification, "kind " + kind_text(by_form), "kind " + kind_text(info.kind));
        }
        if (by_form == NodeKind::Zero) {
            const int t = info.character.value_or(0);
            const bool ok = (t == 1 || t == 3 || t == 5) && has_form(x / 3, 6, static_cast<unsigned long>(t));
            if (!ok) {
                fail(x, Check::Classification, "x = 3(6n+t)", "character " + std::to_string(t));
            }
        } else if (info.character) {
            fail(x, Check::Classification, "no character", "character " + std::to_string(*info.character));
        }
        const bool pump = is_pump_by_definition(x);
        if (info.is_pump() != pump) {
            fail(x, Check::Classification, pump ? "pump" : "hub", info.is_pump() ? "pump" : "hub");
        }
        // Under the raw map a pump sheds at least three factors of two and
        // a hub one or two (one exactly for 4p+3).
        if (x != 1) {
            const unsigned h = walk.halvings.front();
            const bool ok = pump ? h >= 3 : (h == (has_form(x, 4, 3) ? 1u : 2u));
            if (!ok) {
                fail(x, Check::Classification, pump ? ">= 3 halvings" : "1 or 2 halvings",
                     std::to_string(h) + " halvings");
            }
        }
    }

    void hub_image(const NodeInfo& info, const OddWalk& walk) {
        count(Check::HubImage);
        const Nat& x = info.value;
        const bool to_one = has_form(x, 4, 3);
        const unsigned want_div = to_one ? 1 : 2;
        const NodeKind want_kind = to_one ? NodeKind::One : NodeKind::Two;
        const Nat& image = walk.odds.size() > 1 ? walk.odds[1] : walk.odds[0];
        const unsigned h = walk.halvings.empty() ? 2 : walk.halvings[0];
        if (h != want_div) {
            fail(x, Check::HubImage, std::to_string(want_div) + " halvings", std::to_string(h));
        }
        const NodeInfo img = classify(image);
        if (img.kind != want_kind) {
            fail(x, Check::HubImage, "image kind " + kind_text(want_kind),
                 to_string(image) + ":" + kind_text(img.kind));
        }
        const OddStep sym = odd_to_odd(x);
        if (sym.next != image || sym.divisions != h) {
            fail(x, Check::HubImage, "odd_to_odd " + to_string(image) + "/" + std::to_string(h),
                 to_string(sym.next) + "/" + std::to_string(sym.divisions));
        }
    }

    void preimage(const NodeInfo& info) {
        count(Check::PreimageFormulas);
        const Nat& x = info.value;
        const NodeInfo pre = first_odd_preimage(info);
        const RawStep fwd = next_odd_by_iteration(pre.value);
        const unsigned want_div = info.kind == NodeKind::One ? 1 : 2;
        if (fwd.next != x || fwd.halvings != want_div) {
            fail(x, Check::PreimageFormulas,
                 "first odd image of " + to_string(pre.value) + " is " + to_string(x),
                 to_string(fwd.next) + " after " + std::to_string(fwd.halvings) + " halvings");
        }
        const bool form_ok = info.kind == NodeKind::One ? has_form(pre.value, 4, 3) : has_form(pre.value, 8, 1);
        if (!form_ok || !pre.is_hub() || is_pump_by_definition(pre.value)) {
            fail(x, Check::PreimageFormulas, info.kind == NodeKind::One ? "hub 4p+3" : "hub 8p+1",
                 to_string(pre.value));
        }
        const int s = preimage_kind(info);
        if (s != code(pre.kind)) {
            fail(x, Check::PreimageFormulas, "preimage kind " + kind_text(pre.kind),
                 "closed form " + std::to_string(s));
        }
    }

    void canonical(const NodeInfo& info, const OddWalk& walk) {
        count(Check::CanonicalRelation);
        const Nat& x = info.value;
        const Nat pumped = 4 * x + 1;
        const Nat fx = collatz_step(x);
        const Nat fp = collatz_step(pumped);
        if (4 * fx != fp) {
            fail(x, Check::CanonicalRelation, "f(4x+1) = " + to_string(4 * fx), to_string(fp));
            return;
        }
        const RawStep from_pumped = next_odd_by_iteration(pumped);
        const Nat& own = walk.odds.size() > 1 ? walk.odds[1] : walk.odds[0];
        if (from_pumped.next != own) {
            fail(x, Check::CanonicalRelation, "4x+1 falls to " + to_string(own), to_string(from_pumped.next));
        }
    }

    // The odd values of the orbit split after every pump. Each piece must
    // be the tail of the primitive itinerary that ends at that pump, and
    // each pump must fall to the same odd value as the hub of its ladder.
    void decomposition(const NodeInfo& info, const OddWalk& walk) {
        count(Check::PrimitiveDecomposition);
        const Nat& x = info.value;
        const auto& odds = walk.odds;
        std::size_t begin = 0;
        while (begin < odds.size()) {
            if (odds[begin] == 1) {
                if (begin + 1 != odds.size()) {
                    fail(x, Check::PrimitiveDecomposition, "orbit ends at 1", "continues past 1");
                }
                return;
            }
            std::size_t end = begin;
            while (end < odds.size() && odds[end] != 1 && residue(odds[end], 8) != 5) {
                ++end;
            }
            if (end == odds.size() || odds[end] == 1) {
                fail(x, Check::PrimitiveDecomposition, "segment ending at a pump",
                     "hubs " + join(odds, begin, end) + " run into 1");
                return;
            }
            const NodeInfo pump = classify(odds[end]);
            const auto trace = primitive_backward(pump, options_.max_depth);
            const auto* it = std::get_if<PrimitiveItinerary>(&trace);
            if (it == nullptr) {
                fail(x, Check::PrimitiveDecomposition, "backward trace", "trivial cycle");
                return;
            }
            const std::size_t seg_len = end - begin + 1;
            bool ok = seg_len <= it->length();
            const std::size_t offset = ok ? it->length() - seg_len : 0;
            for (std::size_t i = 0; ok && i < seg_len; ++i) {
                ok = it->nodes[offset + i].value == odds[begin + i];
                if (ok && i + 1 < seg_len) {
                    ok = (1u << walk.halvings[begin + i]) == it->divisors[offset + i];
                }
            }
            if (begin == 0 && info.kind == NodeKind::Zero) {
                // starting at a 0-node the first piece is a whole itinerary
                ok = ok && offset == 0 && primitive_forward(info, options_.budget).nodes == it->nodes;
            }
            if (!ok) {
                fail(x, Check::PrimitiveDecomposition,
                     "tail of " + join(it->nodes, 0, it->length()), join(odds, begin, end + 1));
                return;
            }
            if (end + 1 < odds.size()) {
                const NodeInfo hub = ladder_hub(pump);
                const Nat lands = odd_to_odd(hub.value).next;
                if (walk.halvings[end] < 3 || lands != odds[end + 1]) {
                    fail(x, Check::PrimitiveDecomposition,
                         "pump " + to_string(pump.value) + " falls to " + to_string(lands),
                         to_string(odds[end + 1]) + " after " + std::to_string(walk.halvings[end]) +
                             " halvings");
                    return;
                }
            }
            begin = end + 1;
        }
        fail(x, Check::PrimitiveDecomposition, "orbit ends at 1", "odd sequence ends elsewhere");
    }

    void pump_periodicity(const NodeInfo& info) {
        count(Check::PumpPeriodicity);
        const Nat& x = info.value;
        const NodeInfo up = classify(4 * x + 1);
        if (up.kind != next_pump_kind(info.kind)) {
            fail(x, Check::PumpPeriodicity, "4x+1 kind " + kind_text(next_pump_kind(info.kind)),
                 kind_text(up.kind));
        }
        if (!up.is_pump()) {
            fail(x, Check::PumpPeriodicity, "4x+1 is a pump", "hub");
        }
        if (info.kind == NodeKind::Zero) {
            const NodeInfo third = classify(64 * x + 21);  // three pumps up
            const int want = next_character(*info.character);
            if (third.kind != NodeKind::Zero || third.character != want) {
                fail(x, Check::PumpPeriodicity, "next 0-node character " + std::to_string(want),
                     annotate(third));
            }
        }
    }

    void coverage(const NodeInfo& info) {
        count(Check::Coverage);
        const Nat& x = info.value;
        PrimitiveItinerary back;
        try {
            back = std::get<PrimitiveItinerary>(primitive_backward(info, options_.max_depth));
        } catch (const ResourceError& e) {
            fail(x, Check::Coverage, "backward trace reaches a 0-node", e.what());
            return;
        }
        // Replay from the 0-node with the raw map and require the odd values
        // to follow the backward chain, with no pump before x.
        Nat cur = back.start().value;
        for (std::size_t i = 1; i < back.length(); ++i) {
            if (residue(cur, 8) == 5) {
                fail(x, Check::Coverage, "hub at " + to_string(cur), "pump");
                return;
            }
            cur = next_odd_by_iteration(cur).next;
            if (cur != back.nodes[i].value) {
                fail(x, Check::Coverage, "forward visit of " + to_string(back.nodes[i].value),
                     to_string(cur));
                return;
            }
        }
    }

    const std::set<Check>& checks_;
    SweepOptions options_;
    VerificationReport report_;
};

VerificationReport run_chunk(const Nat& lo, const Nat& hi, const std::set<Check>& checks,
                             const SweepOptions& options) {
    Checker checker(checks, options);
    Nat x = lo;
    if (!is_odd(x)) {
        ++x;
    }
    for (; x < hi; x += 2) {
        checker.run(x);
    }
    return checker.take();
}

}  // namespace

VerificationReport sweep(const Nat& lo, const Nat& hi, const std::set<Check>& checks,
                         const SweepOptions& options) {
    if (lo < 1 || !(lo < hi)) {
        throw DomainError("sweep: need 1 <= lo < hi, got [" + to_string(lo) + ", " + to_string(hi) + ")");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned parts = std::max(1u, options.partitions);

    std::vector<Nat> bounds;
    const Nat width = hi - lo;
    for (unsigned i = 0; i <= parts; ++i) {
        bounds.push_back(lo + width * i / parts);
    }
    std::vector<VerificationReport> partial(parts);
    std::vector<std::exception_ptr> errors(parts);
    {
        std::vector<std::jthread> workers;
        for (unsigned i = 0; i < parts; ++i) {
            workers.emplace_back([&, i] {
                try {
                    partial[i] = run_chunk(bounds[i], bounds[i + 1], checks, options);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    VerificationReport report;
    report.lo = lo;
    report.hi = hi;
    for (Check c : checks) {
        report.checks_run[check_name(c)] = 0;
    }
    for (auto& p : partial) {
        for (const auto& [name, n] : p.checks_run) {
            report.checks_run[name] += n;
        }
        std::move(p.failures.begin(), p.failures.end(), std::back_inserter(report.failures));
        std::move(p.trivial_cycle_excluded.begin(), p.trivial_cycle_excluded.end(),
                  std::back_inserter(report.trivial_cycle_excluded));
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

}  // namespace ctree
