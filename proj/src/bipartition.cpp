#include "kleshchev/bipartition.hpp"

#include "kleshchev/error.hpp"

#include <vector>

namespace kleshchev {

std::string to_string(const Node& n) {
    return "(" + std::to_string(n.row) + "," + std::to_string(n.col) + "," + std::to_string(n.comp) + ")";
}

bool Bipartition::contains(const Node& n) const noexcept {
    if (n.row < 0 || n.col < 0 || (n.comp != 1 && n.comp != 2)) return false;
    return n.col < component(n.comp)[static_cast<std::size_t>(n.row)];
}

namespace {

Partition with_row_changed(const Partition& p, int row, int delta) {
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    if (static_cast<std::size_t>(row) >= parts.size()) parts.resize(static_cast<std::size_t>(row) + 1, 0);
    parts[static_cast<std::size_t>(row)] += delta;
    return Partition(std::move(parts));
}

} // namespace

Bipartition Bipartition::with_added(const Node& n) const {
    const Partition& p = component(n.comp);
    bool addable = n.col == p[static_cast<std::size_t>(n.row)] &&
                   (n.row == 0 || p[static_cast<std::size_t>(n.row) - 1] > n.col);
    if (!addable) {
        throw PreconditionError("node " + kleshchev::to_string(n) + " is not addable to " + to_string());
    }
    Bipartition out = *this;
    (n.comp == 1 ? out.first : out.second) = with_row_changed(p, n.row, +1);
    return out;
}

Bipartition Bipartition::with_removed(const Node& n) const {
    const Partition& p = component(n.comp);
    bool removable = n.col + 1 == p[static_cast<std::size_t>(n.row)] &&
                     p[static_cast<std::size_t>(n.row) + 1] <= n.col;
    if (!removable) {
        throw PreconditionError("node " + kleshchev::to_string(n) + " is not removable from " + to_string());
    }
    Bipartition out = *this;
    (n.comp == 1 ? out.first : out.second) = with_row_changed(p, n.row, -1);
    return out;
}

std::string Bipartition::to_string() const {
    return first.to_string() + "|" + second.to_string();
}

Bipartition parse_bipartition(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
        throw ParseError(ParseErrorKind::Malformed,
                         "bipartition must have the form '<partition>|<partition>': '" + std::string(text) + "'");
    }
    return Bipartition{parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

Residue residue(const Node& n, const Params& params) {
    int shift = n.comp == 1 ? params.m() : 0;
    return Residue{floor_mod(n.col - n.row + shift, params.e())};
}

bool is_above(const Node& a, const Node& b) noexcept {
    return (a.comp == 1 && b.comp == 2) || (a.comp == b.comp && a.row < b.row);
}

std::vector<Node> all_addable_nodes(const Bipartition& bp) {
    std::vector<Node> out;
    for (int c = 1; c <= 2; ++c) {
        const Partition& p = bp.component(c);
        for (std::size_t r = 0; r <= p.length(); ++r) {
            if (r == 0 || p[r - 1] > p[r]) out.push_back(Node{static_cast<int>(r), p[r], c});
        }
    }
    return out;
}

std::vector<Node> all_removable_nodes(const Bipartition& bp) {
    std::vector<Node> out;
    for (int c = 1; c <= 2; ++c) {
        const Partition& p = bp.component(c);
        for (std::size_t r = 0; r < p.length(); ++r) {
            if (p[r] > p[r + 1]) out.push_back(Node{static_cast<int>(r), p[r] - 1, c});
        }
    }
    return out;
}

std::vector<Node> addable_nodes(const Bipartition& bp, Residue i, const Params& params) {
    std::vector<Node> out;
    for (const Node& n : all_addable_nodes(bp)) {
        if (residue(n, params) == i) out.push_back(n);
    }
    return out;
}

std::vector<Node> removable_nodes(const Bipartition& bp, Residue i, const Params& params) {
    std::vector<Node> out;
    for (const Node& n : all_removable_nodes(bp)) {
        if (residue(n, params) == i) out.push_back(n);
    }
    return out;
}

} // namespace kleshchev
