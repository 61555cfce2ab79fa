#include "ctree/json.hpp"

namespace ctree {

using nlohmann::json;

json nat_json(const Nat& x) {
    if (mpz_fits_slong_p(x.get_mpz_t())) {
        return static_cast<std::int64_t>(x.get_si());
    }
    return to_string(x);
}

namespace {

json nats(const std::vector<Nat>& xs) {
    json a = json::array();
    for (const auto& x : xs) {
        a.push_back(nat_json(x));
    }
    return a;
}

}  // namespace

void to_json(json& j, const NodeInfo& n) {
    j = json{{"value", nat_json(n.value)},
             {"kind", code(n.kind)},
             {"character", n.character ? json(*n.character) : json(nullptr)},
             {"role", n.is_pump() ? "pump" : "hub"}};
}

void to_json(json& j, const CLadder& l) {
    json rungs = json::array();
    for (const auto& r : l.rungs) {
        rungs.push_back({{"node", nat_json(r.node)}, {"image", nat_json(r.image)}});
    }
    j = json{{"hub", l.hub}, {"length", l.length}, {"rungs", rungs}};
}

void to_json(json& j, const EvenThread& t) {
    j = json{{"zero_node", t.zero_node}, {"preimages", nats(t.preimages)}};
}

void to_json(json& j, const PrimitiveItinerary& it) {
    json nodes = json::array();
    for (const auto& n : it.nodes) {
        nodes.push_back(nat_json(n.value));
    }
    j = json{{"nodes", nodes},
             {"divisors", it.divisors},
             {"symbols", chronological(it)},
             {"rendering", render(it).str()}};
}

void to_json(json& j, const SequenceRendering& r) {
    j = json{{"text", r.text}, {"start_value", nat_json(r.start_value)}, {"start_character", r.start_character}};
}

void to_json(json& j, const StabilityReport& r) {
    j = json{{"ones", r.ones},
             {"twos", r.twos},
             {"start", nat_json(r.start)},
             {"end", nat_json(r.end)},
             {"expansive_by_value", r.expansive_by_value},
             {"expansive_asymptotic", r.expansive_asymptotic}};
}

void to_json(json& j, const ExpansiveRun& r) {
    j = json{{"s", nat_json(r.s)},
             {"M", r.M},
             {"p0", nat_json(r.p0)},
             {"nodes", nats(r.nodes)},
             {"terminal_even", nat_json(r.terminal_even)}};
}

void to_json(json& j, const PrefixEquation& eq) {
    j = json{{"prefix", eq.prefix},
             {"L", eq.L},
             {"K", eq.K},
             {"slope", nat_json(eq.slope_num)},
             {"denom", nat_json(eq.denom)},
             {"C", nat_json(eq.intercept)},
             {"m0", nat_json(eq.m0)},
             {"p0", nat_json(eq.p0)},
             {"terminal_kind", code(eq.terminal_kind)},
             {"equation", eq.str()}};
}

void to_json(json& j, const ProgressionRow& row) {
    j = json{{"k", row.k},
             {"m", nat_json(row.m)},
             {"zero_node", nat_json(row.zero_node)},
             {"p", nat_json(row.p)},
             {"endpoint", nat_json(row.endpoint)},
             {"is_pump", row.is_pump}};
}

void to_json(json& j, const PrefixTree& tree) {
    json nodes = json::array();
    for (const auto& n : tree.nodes) {
        json e = n.equation;
        e["depth"] = n.depth;
        e["pump_phase"] = pump_phase(n.equation);
        nodes.push_back(std::move(e));
    }
    j = json{{"depth", tree.depth}, {"edges", tree.edge_count()}, {"nodes", nodes}};
}

void to_json(json& j, const CoverageReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"value", nat_json(f.value)}, {"detail", f.detail}});
    }
    j = json{{"bound", nat_json(r.bound)},
             {"candidates", r.candidates},
             {"covered", r.covered},
             {"trivial_cycle_excluded", r.trivial_cycle_excluded},
             {"max_backward_depth", r.max_backward_depth},
             {"failures", failures}};
}

void to_json(json& j, const Orbit& o) {
    j = json{{"start", nat_json(o.start)},
             {"values", nats(o.values)},
             {"reached_one", o.reached_one},
             {"steps", o.steps}};
}

void to_json(json& j, const TableArtifact& t) {
    json params = json::object();
    for (const auto& [k, v] : t.params) {
        params[k] = v;
    }
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = json::object();
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            row[t.columns[c]] = r[c];
        }
        rows.push_back(std::move(row));
    }
    json devs = json::array();
    for (const auto& d : t.deviations) {
        devs.push_back({{"row", d.row},
                        {"column", d.column},
                        {"printed", d.printed},
                        {"computed", d.computed},
                        {"note", d.note}});
    }
    j = json{{"table_id", t.table_id ? json(*t.table_id) : json(nullptr)},
             {"params", params},
             {"rows", rows},
             {"deviations", devs}};
}

json report_json(const VerificationReport& r, bool include_timing) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"value", nat_json(f.value)},
                            {"check", f.check},
                            {"expected", f.expected},
                            {"actual", f.actual}});
    }
    json j{{"range", {nat_json(r.lo), nat_json(r.hi)}},
           {"checks_run", r.checks_run},
           {"failures", failures},
           {"trivial_cycle_excluded", nats(r.trivial_cycle_excluded)},
           {"passed", r.passed()}};
    if (include_timing) {
        j["elapsed_ms"] = r.elapsed.count();
    }
    return j;
}

}  // namespace ctree
