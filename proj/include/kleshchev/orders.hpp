#pragma once

#include "kleshchev/bipartition.hpp"
#include "kleshchev/fock.hpp"

#include <optional>
#include <vector>

namespace kleshchev {

/// mu <= lambda in dominance: for all j, the first j parts of lambda's first
/// component sum to at least mu's, and |lambda^(1)| plus the first j parts of
/// lambda^(2) is at least the same quantity for mu.
bool dominance_leq(const Bipartition& mu, const Bipartition& lambda);
/// Strict part of dominance_leq.
bool dominance_less(const Bipartition& mu, const Bipartition& lambda);

enum class Dominance { DominatedBy, Dominates, Incomparable, Equal };

struct OrderVerdict {
    Dominance relation;
    /// Index into the combined prefix chain (first-component prefixes, then
    /// second-component prefixes) where the reverse relation first fails.
    std::optional<std::size_t> witness;
};

/// Relation of mu to lambda.
OrderVerdict compare_dominance(const Bipartition& mu, const Bipartition& lambda);

/// Reverse-lexicographic order read from the bottom: compare second
/// components at the largest index where they differ, then first components.
bool prec(const Bipartition& lambda, const Bipartition& nu);

/// Every bipartition of rank n: first-component rank descending, each
/// component's partitions in lexicographically decreasing order.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// A residue sequence of lambda realised by no strictly dominated shape.
std::optional<ResidueSequence> restricted_witness(const Bipartition& lambda, const Params& params);
bool is_restricted(const Bipartition& lambda, const Params& params);

} // namespace kleshchev
