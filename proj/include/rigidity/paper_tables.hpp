#pragma once

#include <string>
#include <vector>

namespace rigidity {

/// One regenerated table entry against its hard-coded published value.
struct TableEntry {
    std::string label;
    std::string computed;
    std::string published;
    bool match = false;
};

struct PaperTable {
    std::string name;
    std::string description;
    std::vector<TableEntry> entries;
};

struct PaperTablesReport {
    std::vector<PaperTable> tables;

    [[nodiscard]] bool all_match() const;
    [[nodiscard]] std::size_t mismatches() const;
};

/// Reflection degrees of the 𝔰𝔩_{n+1} adjoint constituents, the exceptional
/// inverse-Cartan diagonal entries, and the Veronese reflection degrees.
[[nodiscard]] PaperTablesReport run_paper_tables();

}  // namespace rigidity
