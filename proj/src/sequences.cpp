#include "kleshchev/sequences.hpp"

#include "kleshchev/abacus.hpp"
#include "kleshchev/error.hpp"

#include <algorithm>

namespace kleshchev {

std::vector<Residue> OptimalSequence::word() const {
    std::vector<Residue> out;
    for (const auto& b : blocks) out.insert(out.end(), static_cast<std::size_t>(b.count), b.residue);
    return out;
}

int OptimalSequence::rank() const {
    int n = 0;
    for (const auto& b : blocks) n += b.count;
    return n;
}

std::pair<Residue, Node> select_residue(const Bipartition& bp, const Params& params) {
    if (bp.empty()) throw PreconditionError("select_residue needs a nonempty bipartition");
    const int c = bp.second.empty() ? 1 : 2;
    const Partition& p = bp.component(c);
    const int row = static_cast<int>(p.length()) - 1;
    Node gamma{row, p[static_cast<std::size_t>(row)] - 1, c};
    Residue i = residue(gamma, params);
    for (const Node& eta : addable_nodes(bp, i, params)) {
        if (!is_above(eta, gamma)) {
            throw PreconditionError("addable " + std::to_string(i.value) + "-node " + to_string(eta) +
                                    " lies below " + to_string(gamma) + " in " + bp.to_string() +
                                    "; the bipartition is not Kleshchev");
        }
    }
    return {i, gamma};
}

AdmissibleBlock admissible_sequence(const Bipartition& bp, const Params& params) {
    Residue i = select_residue(bp, params).first;
    auto addable = addable_nodes(bp, i, params);
    auto removable = removable_nodes(bp, i, params);
    AdmissibleBlock block{i, {}};
    for (const Node& r : removable) {
        if (addable.empty() || is_above(addable.back(), r)) block.nodes.push_back(r);
    }
    if (block.nodes.empty()) {
        throw InvariantViolation("no admissible " + std::to_string(i.value) + "-nodes in " + bp.to_string());
    }
    if (!is_admissible(bp, i, block.nodes, params)) {
        throw InvariantViolation("constructed block for " + bp.to_string() + " is not admissible");
    }
    return block;
}

bool is_admissible(const Bipartition& bp, Residue i, const std::vector<Node>& nodes, const Params& params) {
    if (nodes.empty()) return false;
    auto removable = removable_nodes(bp, i, params);
    auto addable = addable_nodes(bp, i, params);
    if (nodes.size() > removable.size()) return false;
    const std::size_t split = removable.size() - nodes.size();
    if (!std::equal(nodes.begin(), nodes.end(), removable.begin() + static_cast<std::ptrdiff_t>(split))) {
        return false;
    }
    const Node& highest = nodes.front();
    for (const Node& a : addable) {
        if (!is_above(a, highest)) return false;
    }
    for (std::size_t k = 0; k < split; ++k) {
        const Node& r = removable[k];
        bool has_addable_below = std::any_of(addable.begin(), addable.end(),
                                             [&](const Node& a) { return is_above(r, a); });
        if (!has_addable_below) return false;
    }
    return true;
}

OptimalSequence optimal_sequence(const Bipartition& bp, const Params& params) {
    if (!akt_is_kleshchev(bp, params)) {
        throw PreconditionError(bp.to_string() + " is not Kleshchev");
    }
    OptimalSequence seq;
    Bipartition cur = bp;
    while (!cur.empty()) {
        AdmissibleBlock block = admissible_sequence(cur, params);
        for (const Node& n : block.nodes) cur = cur.with_removed(n);
        seq.blocks.push_back({block.residue, static_cast<int>(block.nodes.size())});
        if (!akt_is_kleshchev(cur, params)) {
            throw InvariantViolation("stripping an admissible block from " + bp.to_string() +
                                     " reached non-Kleshchev " + cur.to_string());
        }
    }
    return seq;
}

std::vector<SequenceBlock> blocks_of_word(const std::vector<Residue>& word) {
    std::vector<SequenceBlock> out;
    for (Residue r : word) {
        if (!out.empty() && out.back().residue == r) {
            ++out.back().count;
        } else {
            out.push_back({r, 1});
        }
    }
    return out;
}

std::optional<std::size_t> replay_blocks(const Bipartition& bp, const std::vector<SequenceBlock>& blocks, const Params& params) {
    Bipartition cur = bp;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        auto removable = removable_nodes(cur, blocks[j].residue, params);
        auto count = static_cast<std::size_t>(blocks[j].count);
        if (count == 0 || count > removable.size()) return j;
        std::vector<Node> nodes(removable.end() - static_cast<std::ptrdiff_t>(count), removable.end());
        if (!is_admissible(cur, blocks[j].residue, nodes, params)) return j;
        for (const Node& n : nodes) cur = cur.with_removed(n);
    }
    if (!cur.empty()) return blocks.size();
    return std::nullopt;
}

} // namespace kleshchev
