#pragma once

#include "kleshchev/bipartition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kleshchev {

/// Removable i-nodes R_1, ..., R_s (highest first) stripped together.
struct AdmissibleBlock {
    Residue residue;
    std::vector<Node> nodes;
};

struct SequenceBlock {
    Residue residue;
    int count;
    bool operator==(const SequenceBlock&) const = default;
};

/// Blocks in stripping order: blocks[0] is removed from lambda first.
struct OptimalSequence {
    std::vector<SequenceBlock> blocks;
    std::vector<Residue> word() const;
    int rank() const;
};

/// The last node of the last row of the second component (or of the first
/// component when the second is empty) and its residue. Every addable node of
/// that residue must lie above it; otherwise PreconditionError.
std::pair<Residue, Node> select_residue(const Bipartition& bp, const Params& params);

/// With i from select_residue: the removable i-nodes below the lowest addable
/// i-node, or all removable i-nodes when there is no addable one.
AdmissibleBlock admissible_sequence(const Bipartition& bp, const Params& params);

bool is_admissible(const Bipartition& bp, Residue i, const std::vector<Node>& nodes, const Params& params);

/// Repeatedly strips admissible blocks. The input and every intermediate
/// bipartition must be Kleshchev (checked with the abacus criterion).
OptimalSequence optimal_sequence(const Bipartition& bp, const Params& params);

/// Groups a flat residue word into maximal runs.
std::vector<SequenceBlock> blocks_of_word(const std::vector<Residue>& word);

/// Strips the lowest `count` removable nodes of each block in turn, checking
/// admissibility at every step. Returns the index of the first failing block
/// (blocks.size() if nodes remain afterwards), or nullopt on success.
std::optional<std::size_t> replay_blocks(const Bipartition& bp, const std::vector<SequenceBlock>& blocks, const Params& params);

} // namespace kleshchev
