#include "ctree/reports.hpp"

#include <algorithm>
#include <sstream>

#include "ctree/errors.hpp"
#include "ctree/itinerary.hpp"
#include "ctree/ladder.hpp"

namespace ctree {

namespace {

// Printed cells known to disagree with recomputation. Each is re-checked at
// generation time and only reported if the computed cell really differs.
struct Erratum {
    int table;
    std::size_t row;
    const char* column;
    const char* printed;
    const char* note;
};

constexpr Erratum kErrata[] = {
    {3, 3, "one_sequence", "12210^{17259(3)}", "17259 = 3(6*958+5) has character 5"},
    {3, 4, "two_sequence", "2211120^{24581(5)}", "24581 is not a 0-node; the trace starts at 245481"},
    {4, 7, "zero_node", "0^{(1)}", "value left blank in print"},
    {4, 7, "two_node", "", "value left blank in print"},
    {4, 7, "one_node", "", "value left blank in print"},
    {4, 8, "zero_node", "0^{(5)}", "value left blank in print"},
    {4, 8, "two_node", "", "value left blank in print"},
    {4, 8, "one_node", "", "value left blank in print"},
    {5, 10, "one_sequence", "111222121212220^{897(5)}", "forward itinerary of 897 has 13 symbols"},
    {5, 15, "two_node", "348", "4*87+1 = 349; 348 is even"},
    {5, 18, "two_sequence", "20^{561(3)}", "561 = 3(6*31+1) has character 1"},
    {5, 21, "one_sequence", "1220^{2357(5)}", "2357 is not a 0-node; the trace starts at 2337"},
};

void attach_deviations(TableArtifact& t) {
    if (!t.table_id) {
        return;
    }
    for (const auto& e : kErrata) {
        if (e.table != *t.table_id || e.row > t.rows.size()) {
            continue;
        }
        const std::string& computed = t.cell(e.row, e.column);
        if (computed != e.printed) {
            t.deviations.push_back({e.row, e.column, e.printed, computed, e.note});
        }
    }
}

std::string zero_cell(const NodeInfo& n) {
    return to_string(n.value) + "^{(" + std::to_string(n.character.value_or(0)) + ")}";
}

std::string bool_cell(bool b) { return b ? "true" : "false"; }

struct SequenceCell {
    std::string node;
    std::string sequence;
};

// Value plus backward-trace rendering. A value that is not a pump is marked
// with '*' since its trace is not a primitive itinerary.
SequenceCell sequence_cell(const NodeInfo& n) {
    SequenceCell c;
    c.node = to_string(n.value) + (n.is_pump() ? "" : "*");
    const BackwardTrace trace = primitive_backward(n);
    if (std::holds_alternative<TrivialCycle>(trace)) {
        c.sequence = "222...";
    } else {
        c.sequence = render(std::get<PrimitiveItinerary>(trace)).str();
    }
    return c;
}

TableArtifact node_table(int id, std::size_t rows, unsigned long pre_mult, unsigned long pre_off,
                         unsigned long node_off) {
    TableArtifact t;
    t.table_id = id;
    t.title = id == 1 ? "1-node behavior" : "2-node behavior";
    t.params = {{"rows", std::to_string(rows)}};
    t.columns = {"p", "preimage", "node", "pump"};
    for (std::size_t p = 0; p < rows; ++p) {
        const Nat pp(static_cast<unsigned long>(p));
        const NodeInfo pre = classify(pre_mult * pp + pre_off);
        const NodeInfo node = classify(6 * pp + node_off);
        if (first_odd_preimage(node).value != pre.value) {
            throw ConsistencyError("table " + std::to_string(id) + ": preimage mismatch at p=" +
                                   std::to_string(p));
        }
        t.rows.push_back({std::to_string(p), annotate(pre), to_string(node.value), bool_cell(node.is_pump())});
    }
    attach_deviations(t);
    return t;
}

}  // namespace

const std::string& TableArtifact::cell(std::size_t row, const std::string& column) const {
    const auto it = std::find(columns.begin(), columns.end(), column);
    if (it == columns.end() || row == 0 || row > rows.size()) {
        throw DomainError("table cell out of range: row " + std::to_string(row) + ", column " + column);
    }
    return rows[row - 1][static_cast<std::size_t>(it - columns.begin())];
}

TableArtifact table_1(std::size_t rows) { return node_table(1, rows, 4, 3, 5); }

TableArtifact table_2(std::size_t rows) { return node_table(2, rows, 8, 1, 1); }

TableArtifact pump_table(const Nat& hub_value, std::size_t rows) {
    const NodeInfo hub = classify(hub_value);
    if (!hub.is_hub()) {
        throw DomainError("pump_table: " + to_string(hub_value) + " is not a hub");
    }
    TableArtifact t;
    if (hub_value == 1) {
        t.table_id = 3;
    } else if (hub_value == 3) {
        t.table_id = 4;
    }
    t.title = "C-ladder 4k+1 pumps from hub " + to_string(hub_value);
    t.params = {{"hub", to_string(hub_value)}, {"rows", std::to_string(rows)}};
    t.columns = {"row", "zero_node", "two_node", "two_sequence", "one_node", "one_sequence"};

    // Rows are (0-node, 2-node, 1-node) triples; the hub may start mid-row.
    const unsigned lead = hub.kind == NodeKind::Zero ? 0 : hub.kind == NodeKind::Two ? 1 : 2;
    const CLadder ladder = generate_ladder(hub, static_cast<unsigned>(rows * 3 - lead - 1));
    std::vector<std::string> row;
    auto flush = [&] {
        row.insert(row.begin(), std::to_string(t.rows.size() + 1));
        t.rows.push_back(std::move(row));
        row.clear();
    };
    row.assign(lead == 0 ? 0 : lead == 1 ? 1 : 3, "");
    for (const auto& rung : ladder.rungs) {
        const NodeInfo n = classify(rung.node);
        if (n.kind == NodeKind::Zero) {
            row.push_back(zero_cell(n));
        } else {
            const SequenceCell c = sequence_cell(n);
            row.push_back(c.node);
            row.push_back(c.sequence);
        }
        if (n.kind == NodeKind::One) {
            flush();
        }
    }
    attach_deviations(t);
    return t;
}

TableArtifact table_5(std::size_t rows) {
    TableArtifact t;
    t.table_id = 5;
    t.title = "0-nodes 6m+3 with their 2-node and 1-node pumps";
    t.params = {{"rows", std::to_string(rows)}};
    t.columns = {"m", "zero_node", "two_node", "two_sequence", "one_node", "one_sequence"};
    for (std::size_t m = 0; m < rows; ++m) {
        const NodeInfo zero = classify(6 * Nat(static_cast<unsigned long>(m)) + 3);
        const NodeInfo two = classify(pump_up(zero.value));
        const NodeInfo one = classify(pump_up(two.value));
        const SequenceCell c2 = sequence_cell(two);
        const SequenceCell c1 = sequence_cell(one);
        t.rows.push_back({std::to_string(m), zero_cell(zero), c2.node, c2.sequence, c1.node, c1.sequence});
    }
    attach_deviations(t);
    return t;
}

TableArtifact table_by_id(int id, std::size_t rows) {
    switch (id) {
        case 1: return table_1(rows);
        case 2: return table_2(rows);
        case 3: return pump_table(1, rows);
        case 4: return pump_table(3, rows);
        case 5: return table_5(rows);
        default: throw DomainError("no table " + std::to_string(id) + " (expected 1-5)");
    }
}

std::string to_text(const TableArtifact& t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].size();
        for (const auto& r : t.rows) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    std::ostringstream out;
    out << (t.table_id ? "Table " + std::to_string(*t.table_id) + ": " : std::string()) << t.title << "\n";
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << (c ? "  " : "") << cells[c];
            if (c + 1 < cells.size()) {
                out << std::string(width[c] - cells[c].size(), ' ');
            }
        }
        out << "\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) {
        line(r);
    }
    for (const auto& d : t.deviations) {
        out << "deviation: row " << d.row << " " << d.column << ": printed '" << d.printed
            << "', computed '" << d.computed << "' (" << d.note << ")\n";
    }
    return out.str();
}

std::string to_csv(const TableArtifact& t) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << (c ? "," : "") << cells[c];
        }
        out << "\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) {
        line(r);
    }
    return out.str();
}

}  // namespace ctree
