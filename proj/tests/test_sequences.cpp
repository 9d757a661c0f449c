#include "kleshchev/abacus.hpp"
#include "kleshchev/crystal.hpp"
#include "kleshchev/error.hpp"
#include "kleshchev/fock.hpp"
#include "kleshchev/orders.hpp"
#include "kleshchev/sequences.hpp"

#include "oracles.hpp"
#include "printers.hpp"

#include <doctest.h>

using namespace kleshchev;

namespace {

const Params p20(2, 0);
const Params p42(4, 2);

Bipartition bip(const char* s) { return parse_bipartition(s); }

ResidueSequence word_of(std::initializer_list<int> xs) {
    ResidueSequence w;
    for (int x : xs) w.push_back(Residue{x});
    return w;
}

// Corners read straight off the diagram, ordered top to bottom.
struct Signature {
    std::vector<Node> addable, removable;
};

Signature signature(const Bipartition& bp, int i, const Params& params) {
    Signature s;
    for (int c = 1; c <= 2; ++c) {
        const Partition& p = bp.component(c);
        for (std::size_t r = 0; r <= p.length(); ++r) {
            Node add{int(r), p[r], c};
            if ((r == 0 || p[r - 1] > p[r]) && oracle::residue_of(add, params) == i) s.addable.push_back(add);
            if (p[r] > 0 && p[r + 1] < p[r]) {
                Node rem{int(r), p[r] - 1, c};
                if (oracle::residue_of(rem, params) == i) s.removable.push_back(rem);
            }
        }
    }
    return s;
}

bool above(const Node& a, const Node& b) { return a.comp < b.comp || (a.comp == b.comp && a.row < b.row); }

// Clause by clause, with the lowest s removable nodes as candidate block.
bool admissible_oracle(const Bipartition& bp, int i, std::size_t s, const Params& params) {
    Signature sig = signature(bp, i, params);
    if (s == 0 || s > sig.removable.size()) return false;
    std::vector<Node> block(sig.removable.end() - static_cast<std::ptrdiff_t>(s), sig.removable.end());
    for (const auto& a : sig.addable) {
        for (const auto& r : block) {
            if (!above(a, r)) return false;
        }
    }
    for (const auto& r : sig.removable) {
        bool above_block = std::all_of(block.begin(), block.end(), [&](const Node& b) { return above(r, b); });
        if (!above_block) continue;
        bool ok = std::any_of(sig.addable.begin(), sig.addable.end(), [&](const Node& a) { return above(r, a); });
        if (!ok) return false;
    }
    return true;
}

} // namespace

TEST_CASE("select_residue examples") {
    auto [i1, n1] = select_residue(bip("3,2|4,2,1"), p42);
    CHECK(i1.value == 2);
    CHECK(n1 == Node{2, 0, 2});
    auto [i2, n2] = select_residue(bip("-|1"), p20);
    CHECK(i2.value == 0);
    CHECK(n2 == Node{0, 0, 2});
    auto [i3, n3] = select_residue(bip("2,1|-"), Params(3, 0));
    CHECK(i3.value == 2);
    CHECK(n3 == Node{1, 0, 1});
    CHECK_THROWS_AS(select_residue(Bipartition{}, p20), PreconditionError);
}

TEST_CASE("admissible_sequence examples") {
    AdmissibleBlock b1 = admissible_sequence(bip("3,2|4,2,1"), p42);
    CHECK(b1.residue.value == 2);
    CHECK(b1.nodes == std::vector<Node>{{1, 1, 1}, {2, 0, 2}});
    AdmissibleBlock b2 = admissible_sequence(bip("3,1|4,2"), p42);
    CHECK(b2.residue.value == 0);
    CHECK(b2.nodes == std::vector<Node>{{1, 1, 2}});
    AdmissibleBlock b3 = admissible_sequence(bip("1|1"), p20);
    CHECK(b3.residue.value == 0);
    CHECK(b3.nodes == std::vector<Node>{{0, 0, 1}, {0, 0, 2}});
}

TEST_CASE("is_admissible rejects non-admissible blocks") {
    CHECK_FALSE(is_admissible(bip("3,2|4,2,1"), Residue{2}, {{2, 0, 2}}, p42));
    CHECK(is_admissible(bip("3,2|4,2,1"), Residue{2}, {{1, 1, 1}, {2, 0, 2}}, p42));
    CHECK_FALSE(is_admissible(Bipartition{}, Residue{0}, {}, p20));
    CHECK_FALSE(is_admissible(bip("1|1"), Residue{0}, {{0, 0, 1}}, p20));
    CHECK_FALSE(is_admissible(bip("1|1"), Residue{1}, {{0, 0, 1}}, p20));
}

TEST_CASE("optimal_sequence examples") {
    OptimalSequence s1 = optimal_sequence(bip("3,2|4,2,1"), p42);
    CHECK(s1.word() == word_of({2, 2, 0, 3, 3, 2, 1, 1, 0, 0, 3, 2}));
    CHECK(s1.rank() == 12);
    CHECK(optimal_sequence(bip("-|1"), p20).word() == word_of({0}));
    OptimalSequence s3 = optimal_sequence(bip("1|1"), p20);
    CHECK(s3.blocks == std::vector<SequenceBlock>{{Residue{0}, 2}});
    CHECK(optimal_sequence(Bipartition{}, p20).blocks.empty());
    CHECK_THROWS_AS(optimal_sequence(bip("1|-"), p20), PreconditionError);
}

TEST_CASE("the printed word replays as admissible blocks") {
    auto word = word_of({2, 2, 0, 3, 3, 2, 1, 1, 0, 0, 3, 2});
    auto blocks = blocks_of_word(word);
    CHECK(blocks.size() == 8);
    CHECK(blocks.front() == SequenceBlock{Residue{2}, 2});
    CHECK_FALSE(replay_blocks(bip("3,2|4,2,1"), blocks, p42).has_value());

    // No removable 1-nodes at the start.
    auto bad = blocks;
    bad[0] = SequenceBlock{Residue{1}, 1};
    CHECK(replay_blocks(bip("3,2|4,2,1"), bad, p42) == std::optional<std::size_t>{0});
    auto short_word = blocks;
    short_word.pop_back();
    CHECK(replay_blocks(bip("3,2|4,2,1"), short_word, p42) == std::optional<std::size_t>{short_word.size()});
}

TEST_CASE("is_admissible agrees with a clause-by-clause reading") {
    for (const auto& params : oracle::all_params(4)) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& bp : enumerate_bipartitions(n)) {
                for (int i = 0; i < params.e(); ++i) {
                    auto rem = removable_nodes(bp, Residue{i}, params);
                    CHECK(rem == signature(bp, i, params).removable);
                    for (std::size_t s = 1; s <= rem.size(); ++s) {
                        std::vector<Node> block(rem.end() - static_cast<std::ptrdiff_t>(s), rem.end());
                        CAPTURE(bp);
                        CAPTURE(i);
                        CAPTURE(s);
                        CHECK(is_admissible(bp, Residue{i}, block, params) == admissible_oracle(bp, i, s, params));
                    }
                    // A block that skips the lowest removable node is never admissible.
                    if (rem.size() >= 2) {
                        CHECK_FALSE(is_admissible(bp, Residue{i}, {rem.front()}, params));
                    }
                }
            }
        }
    }
}

TEST_CASE("optimal sequences exist and replay for every Kleshchev bipartition up to rank 8") {
    for (const auto& params : oracle::all_params(4)) {
        for (int n = 0; n <= 8; ++n) {
            for (const auto& bp : enumerate_bipartitions(n)) {
                if (!akt_is_kleshchev(bp, params)) continue;
                CAPTURE(bp);
                OptimalSequence seq = optimal_sequence(bp, params);
                CHECK(seq.rank() == n);
                CHECK(static_cast<int>(seq.word().size()) == n);
                CHECK_FALSE(replay_blocks(bp, seq.blocks, params).has_value());
                if (n > 0) {
                    AdmissibleBlock first = admissible_sequence(bp, params);
                    CHECK(first.residue == seq.blocks.front().residue);
                    CHECK(is_admissible(bp, first.residue, first.nodes, params));
                }
                // The word is a residue sequence of some standard bitableau of bp.
                auto seqs = residue_sequences(bp, params);
                auto w = seq.word();
                CHECK(seqs.count(ResidueSequence(w.rbegin(), w.rend())) == 1);
            }
        }
    }
}
