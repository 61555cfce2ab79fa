#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctree/arith.hpp"

namespace ctree {

/// A printed cell that recomputation contradicts.
struct Deviation {
    std::size_t row = 0;  // 1-based row of the artifact
    std::string column;
    std::string printed;
    std::string computed;
    std::string note;

    bool operator==(const Deviation&) const = default;
};

/// One of the tables as recomputed data. Cells use the tables' notation
/// ("3:0^{(1)}", "21120^{9(3)}", "1*", "222..."); an empty string marks a
/// cell the layout leaves blank. Regenerating with the same parameters is
/// byte-identical.
struct TableArtifact {
    std::optional<int> table_id;  // empty for pump tables of other hubs
    std::string title;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<Deviation> deviations;

    const std::string& cell(std::size_t row, const std::string& column) const;
};

/// 1-node behavior: row p has preimage 4p+3 and 1-node 6p+5.
TableArtifact table_1(std::size_t rows);

/// 2-node behavior: row p has preimage 8p+1 and 2-node 6p+1.
TableArtifact table_2(std::size_t rows);

/// Pump chain of a hub grouped into (0-node, 2-node, 1-node) rows, each
/// 1-/2-node with its backward-trace sequence. Hub 1 is table 3, hub 3 is
/// table 4.
TableArtifact pump_table(const Nat& hub, std::size_t rows);

/// 0-nodes 6m+3 (m = 0, 1, ...) with their single and double pumps.
TableArtifact table_5(std::size_t rows);

/// Dispatch by id: 1, 2, 3 (hub 1), 4 (hub 3), 5.
TableArtifact table_by_id(int id, std::size_t rows);

std::string to_text(const TableArtifact& t);
std::string to_csv(const TableArtifact& t);

}  // namespace ctree
