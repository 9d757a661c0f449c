#pragma once

#include "kleshchev/bipartition.hpp"

#include <optional>
#include <vector>

namespace kleshchev {

/// Removable i-nodes gamma such that for every addable i-node eta below
/// gamma, strictly more removable than addable i-nodes lie strictly between
/// them. Highest first.
std::vector<Node> normal_nodes(const Bipartition& bp, Residue i, const Params& params);

/// The highest normal i-node.
std::optional<Node> good_node(const Bipartition& bp, Residue i, const Params& params);

std::optional<Bipartition> e_tilde(const Bipartition& bp, Residue i, const Params& params);

/// The unique bp + gamma (gamma an addable i-node) whose good i-node is gamma.
/// Throws InvariantViolation if more than one candidate qualifies.
std::optional<Bipartition> f_tilde(const Bipartition& bp, Residue i, const Params& params);

/// Kleshchev by good-node removal, memoised per thread and per (e, m).
bool is_kleshchev_recursive(const Bipartition& bp, const Params& params);

struct CrystalEdge {
    std::size_t from;
    std::size_t to;
    Residue label;
};

struct CrystalGraph {
    std::vector<Bipartition> nodes; // breadth-first order from the empty bipartition
    std::vector<CrystalEdge> edges;
    std::vector<std::size_t> nodes_of_rank(int n) const;
};

/// Closure of the empty bipartition under all f_tilde, up to max_rank.
CrystalGraph crystal_graph(const Params& params, int max_rank);

} // namespace kleshchev
