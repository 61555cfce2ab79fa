#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include "ctree/errors.hpp"
#include "ctree/json.hpp"

using namespace ctree;
using nlohmann::json;

namespace {

enum class Format { Text, Json, Csv };

struct Options {
    std::string format = "text";
    std::string rows;
    std::string depth;
    std::string budget;
    std::string partitions;
    std::string range;
    std::string s;
    std::string M;
    std::vector<std::string> values;
    std::vector<std::string> checks;
    bool timing = false;
};

Format format_of(const std::string& f) {
    if (f == "text") return Format::Text;
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    throw ParseError("unknown format '" + f + "' (expected text, json or csv)");
}

// Decimal only; CLI11's own integer conversion would also accept 0x and 0b.
std::uint64_t count_arg(const std::string& name, const std::string& text, std::uint64_t fallback) {
    if (text.empty()) return fallback;
    const Nat n = parse_nat(text);
    if (!mpz_fits_ulong_p(n.get_mpz_t())) {
        throw DomainError("--" + name + " is too large: " + text);
    }
    return n.get_ui();
}

unsigned small_arg(const std::string& name, const std::string& text, unsigned fallback) {
    const std::uint64_t n = count_arg(name, text, fallback);
    if (n > std::numeric_limits<unsigned>::max()) {
        throw DomainError("--" + name + " is too large: " + text);
    }
    return static_cast<unsigned>(n);
}

const std::string& one_value(const Options& o, const char* what) {
    if (o.values.size() != 1) {
        throw ParseError(std::string("expected exactly one ") + what);
    }
    return o.values.front();
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        s += cells[i];
    }
    return s + '\n';
}

std::string character_cell(const NodeInfo& n) {
    return n.character ? std::to_string(*n.character) : "";
}

std::string tf(bool b) { return b ? "t" : "f"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// --- subcommands -----------------------------------------------------------

void cmd_classify(const Options& o, Format f, std::ostream& out) {
    if (o.values.empty()) throw ParseError("classify: expected at least one value");
    std::vector<NodeInfo> infos;
    for (const auto& v : o.values) infos.push_back(classify(parse_nat(v)));
    if (f == Format::Json) {
        print_json(out, infos.size() == 1 ? json(infos.front()) : json(infos));
        return;
    }
    if (f == Format::Csv) out << csv_line({"value", "kind", "character", "role"});
    for (const auto& n : infos) {
        const std::string role = n.is_pump() ? "pump" : "hub";
        if (f == Format::Csv) {
            out << csv_line({to_string(n.value), std::to_string(code(n.kind)), character_cell(n), role});
        } else {
            out << to_string(n.value) << " : " << kind_name(n.kind);
            if (n.character) out << ", character " << *n.character;
            out << ", " << role << '\n';
        }
    }
}

void cmd_ladder(const Options& o, Format f, std::ostream& out) {
    const NodeInfo hub = classify(parse_nat(one_value(o, "hub")));
    const CLadder ladder = generate_ladder(hub, small_arg("rows", o.rows, 5));
    if (f == Format::Json) {
        print_json(out, ladder);
        return;
    }
    if (f == Format::Csv) out << csv_line({"rung", "node", "kind", "character", "image"});
    for (std::size_t i = 0; i < ladder.rungs.size(); ++i) {
        const NodeInfo n = classify(ladder.rungs[i].node);
        if (f == Format::Csv) {
            out << csv_line({std::to_string(i), to_string(n.value), std::to_string(code(n.kind)),
                             character_cell(n), to_string(ladder.rungs[i].image)});
        } else {
            out << i << "  " << annotate(n) << "  -> " << to_string(ladder.rungs[i].image) << '\n';
        }
    }
}

void print_itinerary(const PrimitiveItinerary& it, Format f, std::ostream& out) {
    if (f == Format::Json) {
        json j = it;
        j["stability"] = analyze(it);
        print_json(out, j);
        return;
    }
    if (f == Format::Csv) {
        out << csv_line({"step", "node", "kind", "character", "divisor"});
        for (std::size_t i = 0; i < it.nodes.size(); ++i) {
            const auto& n = it.nodes[i];
            out << csv_line({std::to_string(i), to_string(n.value), std::to_string(code(n.kind)),
                             character_cell(n), i < it.divisors.size() ? std::to_string(it.divisors[i]) : ""});
        }
        return;
    }
    for (std::size_t i = 0; i < it.nodes.size(); ++i) {
        out << (i ? " -> " : "") << annotate(it.nodes[i]);
    }
    out << "\nsequence: " << render(it).str() << '\n';
}

void cmd_itinerary(const Options& o, Format f, std::ostream& out) {
    const NodeInfo zero = classify(parse_nat(one_value(o, "0-node")));
    print_itinerary(primitive_forward(zero, count_arg("budget", o.budget, kDefaultStepBudget)), f, out);
}

void cmd_traceback(const Options& o, Format f, std::ostream& out) {
    const NodeInfo end = classify(parse_nat(one_value(o, "node")));
    const BackwardTrace trace = primitive_backward(end, small_arg("depth", o.depth, kDefaultBackwardDepth));
    if (std::holds_alternative<TrivialCycle>(trace)) {
        if (f == Format::Json) {
            print_json(out, json{{"trivial_cycle", true}, {"rendering", "222..."}});
        } else if (f == Format::Csv) {
            out << csv_line({"step", "node", "kind", "character", "divisor"});
        } else {
            out << "1 : trivial cycle 1 -> 4 -> 2 -> 1, sequence 222...\n";
        }
        return;
    }
    print_itinerary(std::get<PrimitiveItinerary>(trace), f, out);
}

void cmd_stability(const Options& o, Format f, std::ostream& out) {
    if (!o.rows.empty()) {
        // word-length mode: how many 2-symbols an expansive word can carry
        const unsigned n = small_arg("rows", o.rows, 0);
        const TwosBound b = max_twos(n);
        const Nat count = count_expansive(n);
        if (f == Format::Json) {
            print_json(out, json{{"length", n},
                                 {"max_twos", b.twos},
                                 {"any_expansive", b.any_expansive},
                                 {"expansive_words", nat_json(count)},
                                 {"gamma", gamma()}});
        } else if (f == Format::Csv) {
            out << csv_line({"length", "max_twos", "any_expansive", "expansive_words"});
            out << csv_line({std::to_string(n), std::to_string(b.twos), tf(b.any_expansive), to_string(count)});
        } else {
            out << "length " << n << ": at most " << b.twos << " 2-symbols"
                << (b.any_expansive ? "" : " (no expansive word)") << ", " << to_string(count)
                << " expansive words\n";
        }
        return;
    }
    const NodeInfo zero = classify(parse_nat(one_value(o, "0-node")));
    const StabilityReport r = analyze(primitive_forward(zero, count_arg("budget", o.budget, kDefaultStepBudget)));
    if (f == Format::Json) {
        json j = r;
        j["gamma"] = gamma();
        print_json(out, j);
    } else if (f == Format::Csv) {
        out << csv_line({"start", "end", "ones", "twos", "expansive_by_value", "expansive_asymptotic"});
        out << csv_line({to_string(r.start), to_string(r.end), std::to_string(r.ones), std::to_string(r.twos),
                         tf(r.expansive_by_value), tf(r.expansive_asymptotic)});
    } else {
        out << to_string(r.start) << " -> " << to_string(r.end) << " : ones " << r.ones << ", twos " << r.twos
            << ", " << (r.expansive_by_value ? "grows" : "shrinks") << " by value, "
            << (r.expansive_asymptotic ? "expansive" : "contractive") << " asymptotically\n";
    }
}

void cmd_expansive(const Options& o, Format f, std::ostream& out) {
    if (o.s.empty() || o.M.empty()) throw ParseError("expansive: --s and --M are required");
    const ExpansiveRun r = construct_expansive(parse_nat(o.s), small_arg("M", o.M, 0));
    if (f == Format::Json) {
        print_json(out, r);
    } else if (f == Format::Csv) {
        out << csv_line({"i", "node"});
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            out << csv_line({std::to_string(i), to_string(r.nodes[i])});
        }
    } else {
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            out << (i ? " -> " : "") << to_string(r.nodes[i]);
        }
        out << " -> " << to_string(r.terminal_even) << '\n';
    }
}

void cmd_prefix_compile(const Options& o, Format f, std::ostream& out) {
    const PrefixEquation eq = compile_prefix(one_value(o, "prefix"));
    if (f == Format::Json) {
        json j = eq;
        j["pump_phase"] = pump_phase(eq);
        print_json(out, j);
    } else if (f == Format::Csv) {
        out << csv_line({"prefix", "slope", "denom", "C", "m0", "p0", "pump_phase"});
        out << csv_line({eq.prefix, to_string(eq.slope_num), to_string(eq.denom), to_string(eq.intercept),
                         to_string(eq.m0), to_string(eq.p0), std::to_string(pump_phase(eq))});
    } else {
        out << eq.prefix << " : " << eq.str() << '\n';
    }
}

void cmd_prefix_enumerate(const Options& o, Format f, std::ostream& out) {
    const PrefixEquation eq = compile_prefix(one_value(o, "prefix"));
    const auto rows = enumerate(eq, count_arg("rows", o.rows, 8));
    if (f == Format::Json) {
        print_json(out, json{{"equation", eq}, {"rows", rows}});
        return;
    }
    if (f == Format::Csv) {
        out << csv_line({"k", "m", "zero_node", "p", "endpoint", "pump"});
    } else {
        out << eq.prefix << " : " << eq.str() << '\n';
    }
    for (const auto& r : rows) {
        if (f == Format::Csv) {
            out << csv_line({std::to_string(r.k), to_string(r.m), to_string(r.zero_node), to_string(r.p),
                             to_string(r.endpoint), tf(r.is_pump)});
        } else {
            out << "  m = " << to_string(r.m) << "  " << to_string(r.zero_node) << " -> "
                << to_string(r.endpoint) << (r.is_pump ? "  pump" : "") << '\n';
        }
    }
}

void cmd_prefix_tree(const Options& o, Format f, std::ostream& out) {
    const PrefixTree tree = build_tree(small_arg("depth", o.depth, 3));
    if (f == Format::Json) {
        print_json(out, tree);
        return;
    }
    if (f == Format::Csv) out << csv_line({"depth", "prefix", "slope", "denom", "C", "m0", "p0"});
    for (const auto& n : tree.nodes) {
        const auto& eq = n.equation;
        if (f == Format::Csv) {
            out << csv_line({std::to_string(n.depth), eq.prefix, to_string(eq.slope_num), to_string(eq.denom),
                             to_string(eq.intercept), to_string(eq.m0), to_string(eq.p0)});
        } else {
            out << std::string(2 * n.depth, ' ') << eq.prefix << " : " << eq.str() << '\n';
        }
    }
    if (f == Format::Text) out << tree.nodes.size() << " nodes, " << tree.edge_count() << " edges\n";
}

int cmd_prefix_coverage(const Options& o, Format f, std::ostream& out) {
    const CoverageReport r =
        coverage_check(parse_nat(one_value(o, "bound")), small_arg("depth", o.depth, kDefaultBackwardDepth));
    if (f == Format::Json) {
        print_json(out, r);
    } else if (f == Format::Csv) {
        out << csv_line({"bound", "candidates", "covered", "failures", "max_backward_depth"});
        out << csv_line({to_string(r.bound), std::to_string(r.candidates), std::to_string(r.covered),
                         std::to_string(r.failures.size()), std::to_string(r.max_backward_depth)});
    } else {
        out << "1-/2-nodes below " << to_string(r.bound) << ": " << r.covered << " of " << r.candidates
            << " covered, longest backward trace " << r.max_backward_depth << " steps"
            << (r.trivial_cycle_excluded ? ", 1 excluded (trivial cycle)" : "") << '\n';
        for (const auto& fl : r.failures) out << "  " << to_string(fl.value) << ": " << fl.detail << '\n';
    }
    return r.failures.empty() ? 0 : 2;
}

void cmd_table(const Options& o, Format f, std::ostream& out) {
    const std::uint64_t id = count_arg("table", one_value(o, "table id"), 0);
    static constexpr std::size_t kPrinted[] = {0, 16, 16, 6, 8, 22};
    const std::size_t fallback = id >= 1 && id <= 5 ? kPrinted[id] : 1;
    const TableArtifact t = table_by_id(static_cast<int>(id), count_arg("rows", o.rows, fallback));
    if (f == Format::Json) {
        print_json(out, t);
    } else if (f == Format::Csv) {
        out << to_csv(t);
    } else {
        out << to_text(t);
    }
}

std::pair<Nat, Nat> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("--range expects LO:HI, got '" + text + "'");
    return {parse_nat(text.substr(0, colon)), parse_nat(text.substr(colon + 1))};
}

int cmd_verify(const Options& o, Format f, std::ostream& out) {
    if (o.range.empty()) throw ParseError("verify: --range LO:HI is required");
    const auto [lo, hi] = parse_range(o.range);
    std::set<Check> checks;
    for (const auto& c : o.checks) checks.insert(parse_check(c));
    if (checks.empty()) checks.insert(all_checks().begin(), all_checks().end());

    SweepOptions opts;
    opts.partitions = small_arg("partitions", o.partitions, std::max(1u, std::thread::hardware_concurrency()));
    opts.budget = count_arg("budget", o.budget, kDefaultStepBudget);
    opts.max_depth = small_arg("depth", o.depth, kDefaultBackwardDepth);
    const VerificationReport r = sweep(lo, hi, checks, opts);

    if (f == Format::Json) {
        print_json(out, report_json(r, o.timing));
    } else if (f == Format::Csv) {
        out << csv_line({"value", "check", "expected", "actual"});
        for (const auto& fl : r.failures) out << csv_line({to_string(fl.value), fl.check, fl.expected, fl.actual});
    } else {
        out << "odd values in [" << to_string(lo) << ", " << to_string(hi) << ")\n";
        for (const auto& [name, n] : r.checks_run) out << "  " << name << ": " << n << '\n';
        for (const auto& x : r.trivial_cycle_excluded) out << "  excluded " << to_string(x) << " (trivial cycle)\n";
        for (const auto& fl : r.failures) {
            out << "  FAIL " << to_string(fl.value) << " " << fl.check << ": expected " << fl.expected << ", got "
                << fl.actual << '\n';
        }
        if (o.timing) out << "elapsed " << r.elapsed.count() << " ms\n";
        out << (r.passed() ? "passed" : "failed") << " (" << r.failures.size() << " failures)\n";
    }
    return r.passed() ? 0 : 2;
}

void cmd_orbit(const Options& o, Format f, std::ostream& out) {
    const Orbit r = orbit(parse_nat(one_value(o, "start value")), count_arg("budget", o.budget, kDefaultStepBudget));
    if (f == Format::Json) {
        print_json(out, r);
    } else if (f == Format::Csv) {
        out << csv_line({"step", "value"});
        for (std::size_t i = 0; i < r.values.size(); ++i) out << csv_line({std::to_string(i), to_string(r.values[i])});
    } else {
        for (std::size_t i = 0; i < r.values.size(); ++i) out << (i ? " " : "") << to_string(r.values[i]);
        out << '\n' << r.steps << " steps" << (r.reached_one ? "" : ", budget exhausted before reaching 1") << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collatz C-tree toolkit"};
    app.require_subcommand(1);
    Options o;

    auto format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text, json or csv")->capture_default_str();
    };
    auto values = [&](CLI::App* c, const char* name, const char* help) {
        c->add_option(name, o.values, help);
    };

    auto* classify_cmd = app.add_subcommand("classify", "Kind, character and role of odd values");
    values(classify_cmd, "values", "odd values");
    format(classify_cmd);

    auto* ladder_cmd = app.add_subcommand("ladder", "C-ladder of 4k+1 pumps above a hub");
    values(ladder_cmd, "hub", "hub value");
    ladder_cmd->add_option("--rows", o.rows, "number of pumps (default 5)");
    format(ladder_cmd);

    auto* itinerary_cmd = app.add_subcommand("itinerary", "Primitive itinerary forward from a 0-node");
    values(itinerary_cmd, "zero", "0-node");
    itinerary_cmd->add_option("--budget", o.budget, "step budget");
    format(itinerary_cmd);

    auto* traceback_cmd = app.add_subcommand("traceback", "Backward trace from a 1- or 2-node to its 0-node");
    values(traceback_cmd, "node", "1- or 2-node");
    traceback_cmd->add_option("--depth", o.depth, "maximum trace length");
    format(traceback_cmd);

    auto* stability_cmd = app.add_subcommand("stability", "Growth of an itinerary, or 2-symbol bound by length");
    values(stability_cmd, "zero", "0-node");
    stability_cmd->add_option("--rows", o.rows, "word length for the 2-symbol bound");
    stability_cmd->add_option("--budget", o.budget, "step budget");
    format(stability_cmd);

    auto* expansive_cmd = app.add_subcommand("expansive", "Run of M+1 consecutive 1-nodes");
    expansive_cmd->add_option("--s", o.s, "odd seed");
    expansive_cmd->add_option("--M", o.M, "run length minus one");
    format(expansive_cmd);

    auto* prefix_cmd = app.add_subcommand("prefix", "Prefix equations");
    prefix_cmd->require_subcommand(1);
    auto* compile_cmd = prefix_cmd->add_subcommand("compile", "Equation of a prefix");
    values(compile_cmd, "prefix", "prefix such as 1220");
    format(compile_cmd);
    auto* enumerate_cmd = prefix_cmd->add_subcommand("enumerate", "Progression rows of a prefix");
    values(enumerate_cmd, "prefix", "prefix such as 1220");
    enumerate_cmd->add_option("--rows", o.rows, "rows (default 8)");
    format(enumerate_cmd);
    auto* tree_cmd = prefix_cmd->add_subcommand("tree", "Complete prefix tree");
    tree_cmd->add_option("--depth", o.depth, "depth (default 3)");
    format(tree_cmd);
    auto* coverage_cmd = prefix_cmd->add_subcommand("coverage", "Every 1-/2-node below a bound lies on an itinerary");
    values(coverage_cmd, "bound", "exclusive bound");
    coverage_cmd->add_option("--depth", o.depth, "maximum backward trace length");
    format(coverage_cmd);

    auto* table_cmd = app.add_subcommand("table", "Regenerate a table (1-5)");
    values(table_cmd, "id", "table id");
    table_cmd->add_option("--rows", o.rows, "rows (default: as printed)");
    format(table_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Oracle sweep over odd values in LO:HI");
    verify_cmd->add_option("--range", o.range, "LO:HI, half-open");
    verify_cmd->add_option("--check", o.checks, "check to run (repeatable; default all)");
    verify_cmd->add_option("--partitions", o.partitions, "worker threads");
    verify_cmd->add_option("--budget", o.budget, "orbit step budget");
    verify_cmd->add_option("--depth", o.depth, "maximum backward trace length");
    verify_cmd->add_flag("--timing", o.timing, "report elapsed time");
    format(verify_cmd);

    auto* orbit_cmd = app.add_subcommand("orbit", "Raw Collatz orbit");
    values(orbit_cmd, "start", "start value");
    orbit_cmd->add_option("--budget", o.budget, "step budget");
    format(orbit_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const Format f = format_of(o.format);
        std::ostringstream out;
        int status = 0;
        if (classify_cmd->parsed()) cmd_classify(o, f, out);
        else if (ladder_cmd->parsed()) cmd_ladder(o, f, out);
        else if (itinerary_cmd->parsed()) cmd_itinerary(o, f, out);
        else if (traceback_cmd->parsed()) cmd_traceback(o, f, out);
        else if (stability_cmd->parsed()) cmd_stability(o, f, out);
        else if (expansive_cmd->parsed()) cmd_expansive(o, f, out);
        else if (compile_cmd->parsed()) cmd_prefix_compile(o, f, out);
        else if (enumerate_cmd->parsed()) cmd_prefix_enumerate(o, f, out);
        else if (tree_cmd->parsed()) cmd_prefix_tree(o, f, out);
        else if (coverage_cmd->parsed()) status = cmd_prefix_coverage(o, f, out);
        else if (table_cmd->parsed()) cmd_table(o, f, out);
        else if (verify_cmd->parsed()) status = cmd_verify(o, f, out);
        else if (orbit_cmd->parsed()) cmd_orbit(o, f, out);
        std::cout << out.str();
        return status;
    } catch (const ConsistencyError& e) {
        std::cerr << "ctree: internal consistency error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ctree: " << e.what() << '\n';
        return 1;
    }
}
