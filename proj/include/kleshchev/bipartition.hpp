#pragma once

#include "kleshchev/partition.hpp"

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kleshchev {

/// A residue class in Z/eZ, stored as its representative in 0..e-1.
struct Residue {
    int value = 0;

    bool operator==(const Residue&) const = default;
    auto operator<=>(const Residue&) const = default;
};

/// Lattice point (row, column, component); rows and columns are 0-based and
/// component is 1 or 2.
struct Node {
    int row = 0;
    int col = 0;
    int comp = 1;

    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
};

std::string to_string(const Node& n);

struct Bipartition {
    Partition first;
    Partition second;

    int rank() const noexcept { return first.rank() + second.rank(); }
    bool empty() const noexcept { return first.empty() && second.empty(); }
    const Partition& component(int c) const noexcept { return c == 1 ? first : second; }

    bool contains(const Node& n) const noexcept;
    Bipartition with_added(const Node& n) const;
    Bipartition with_removed(const Node& n) const;

    /// "3,2|4,2,1"; empty components print as "-".
    std::string to_string() const;

    bool operator==(const Bipartition&) const = default;
    auto operator<=>(const Bipartition&) const = default;
};

Bipartition parse_bipartition(std::string_view text);

Residue residue(const Node& n, const Params& params);

/// Strict node order: component 1 before component 2, then by row.
bool is_above(const Node& a, const Node& b) noexcept;

/// Addable/removable nodes of the given residue, highest first.
std::vector<Node> addable_nodes(const Bipartition& bp, Residue i, const Params& params);
std::vector<Node> removable_nodes(const Bipartition& bp, Residue i, const Params& params);

/// Every removable node regardless of residue, highest first.
std::vector<Node> all_removable_nodes(const Bipartition& bp);
std::vector<Node> all_addable_nodes(const Bipartition& bp);

} // namespace kleshchev

template <>
struct std::hash<kleshchev::Bipartition> {
    std::size_t operator()(const kleshchev::Bipartition& b) const noexcept {
        std::size_t h1 = std::hash<kleshchev::Partition>{}(b.first);
        std::size_t h2 = std::hash<kleshchev::Partition>{}(b.second);
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};
