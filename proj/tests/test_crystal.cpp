#include "kleshchev/abacus.hpp"
#include "kleshchev/crystal.hpp"
#include "kleshchev/error.hpp"
#include "kleshchev/orders.hpp"

#include "oracles.hpp"
#include "printers.hpp"

#include <doctest.h>

#include <set>

using namespace kleshchev;

namespace {

const Params p20(2, 0);
const Params p42(4, 2);

Bipartition bip(const char* s) { return parse_bipartition(s); }

std::vector<Bipartition> up_to(int max_rank) {
    std::vector<Bipartition> out;
    for (int n = 0; n <= max_rank; ++n) {
        for (auto& bp : enumerate_bipartitions(n)) out.push_back(std::move(bp));
    }
    return out;
}

} // namespace

TEST_CASE("parse_bipartition") {
    CHECK(bip("3,2|4,2,1") == Bipartition{Partition{3, 2}, Partition{4, 2, 1}});
    CHECK(bip("-|1,1") == Bipartition{Partition{}, Partition{1, 1}});
    CHECK(bip("|") == Bipartition{});
    CHECK(bip("3,2|4,2,1").to_string() == "3,2|4,2,1");
    CHECK(Bipartition{}.to_string() == "-|-");
    CHECK_THROWS_AS(bip("3,2"), ParseError);
    CHECK_THROWS_AS(bip("1|1|1"), ParseError);
    CHECK_THROWS_AS(bip("1,2|1"), ParseError);
    CHECK_THROWS_AS(bip("a|1"), ParseError);
}

TEST_CASE("residue colouring of the e=4, m=2 example") {
    CHECK(residue(Node{0, 0, 1}, p42).value == 2);
    CHECK(residue(Node{0, 3, 2}, p42).value == 3);
    CHECK(residue(Node{1, 0, 2}, p20).value == 1);

    Bipartition bp = bip("3,2|4,2,1");
    std::vector<std::vector<int>> first, second;
    for (std::size_t r = 0; r < bp.first.length(); ++r) {
        first.emplace_back();
        for (int c = 0; c < bp.first[r]; ++c) first.back().push_back(residue(Node{int(r), c, 1}, p42).value);
    }
    for (std::size_t r = 0; r < bp.second.length(); ++r) {
        second.emplace_back();
        for (int c = 0; c < bp.second[r]; ++c) second.back().push_back(residue(Node{int(r), c, 2}, p42).value);
    }
    CHECK(first == std::vector<std::vector<int>>{{2, 3, 0}, {1, 2}});
    CHECK(second == std::vector<std::vector<int>>{{0, 1, 2, 3}, {3, 0}, {2}});
}

TEST_CASE("is_above") {
    CHECK(is_above(Node{5, 0, 1}, Node{0, 9, 2}));
    CHECK(is_above(Node{0, 3, 1}, Node{2, 0, 1}));
    CHECK_FALSE(is_above(Node{1, 1, 2}, Node{0, 4, 2}));
    CHECK_FALSE(is_above(Node{1, 1, 2}, Node{1, 1, 2}));
}

TEST_CASE("addable and removable nodes") {
    Bipartition bp = bip("3,2|4,2,1");
    CHECK(removable_nodes(bp, Residue{2}, p42) == std::vector<Node>{{1, 1, 1}, {2, 0, 2}});
    CHECK(addable_nodes(bp, Residue{2}, p42).empty());
    CHECK(addable_nodes(Bipartition{}, Residue{0}, p20) == std::vector<Node>{{0, 0, 1}, {0, 0, 2}});
    CHECK(all_removable_nodes(bp).size() == 5);
    CHECK(all_addable_nodes(bp).size() == 7);
    CHECK_THROWS_AS(bp.with_added(Node{0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(bp.with_removed(Node{0, 0, 1}), PreconditionError);
}

TEST_CASE("normal and good nodes") {
    CHECK(normal_nodes(bip("1|1"), Residue{0}, p20) == std::vector<Node>{{0, 0, 1}, {0, 0, 2}});
    CHECK(normal_nodes(bip("1|-"), Residue{0}, p20).empty());
    CHECK(normal_nodes(Bipartition{}, Residue{0}, p20).empty());
    CHECK(normal_nodes(Bipartition{}, Residue{1}, p20).empty());

    CHECK(good_node(bip("1|1"), Residue{0}, p20) == Node{0, 0, 1});
    CHECK_FALSE(good_node(bip("1|-"), Residue{0}, p20));
    CHECK(good_node(bip("-|1"), Residue{0}, p20) == Node{0, 0, 2});
}

TEST_CASE("crystal operators") {
    CHECK(e_tilde(bip("1|1"), Residue{0}, p20) == bip("-|1"));
    CHECK(e_tilde(bip("-|1"), Residue{0}, p20) == Bipartition{});
    CHECK_FALSE(e_tilde(bip("-|1"), Residue{1}, p20));

    CHECK(f_tilde(Bipartition{}, Residue{0}, p20) == bip("-|1"));
    CHECK(f_tilde(bip("-|1"), Residue{1}, p20) == bip("-|1,1"));
    for (int e = 2; e <= 4; ++e) {
        for (int m = 1; m < e; ++m) CHECK(f_tilde(Bipartition{}, Residue{m}, Params(e, m)) == bip("1|-"));
    }
}

TEST_CASE("recursive Kleshchev examples") {
    CHECK(is_kleshchev_recursive(Bipartition{}, p20));
    CHECK(is_kleshchev_recursive(bip("3,2|4,2,1"), p42));
    CHECK_FALSE(is_kleshchev_recursive(bip("1|-"), p20));
    CHECK(is_kleshchev_recursive(bip("-|1"), p20));
}

TEST_CASE("crystal graph layers") {
    CrystalGraph g0 = crystal_graph(p20, 0);
    CHECK(g0.nodes == std::vector<Bipartition>{Bipartition{}});
    CHECK(g0.edges.empty());

    CrystalGraph g1 = crystal_graph(p20, 1);
    CHECK(g1.nodes == std::vector<Bipartition>{Bipartition{}, bip("-|1")});
    REQUIRE(g1.edges.size() == 1);
    CHECK(g1.edges[0].label.value == 0);

    CrystalGraph g2 = crystal_graph(p20, 2);
    std::set<Bipartition> layer;
    for (auto k : g2.nodes_of_rank(2)) layer.insert(g2.nodes[k]);
    CHECK(layer == std::set<Bipartition>{bip("1|1"), bip("-|1,1")});
}

TEST_CASE("crystal graph nodes are exactly the Kleshchev bipartitions") {
    for (const auto& params : oracle::all_params(3)) {
        CrystalGraph g = crystal_graph(params, 7);
        std::set<Bipartition> nodes(g.nodes.begin(), g.nodes.end());
        CHECK(nodes.size() == g.nodes.size());
        for (const auto& bp : up_to(7)) {
            CAPTURE(bp);
            CHECK(nodes.count(bp) == (is_kleshchev_recursive(bp, params) ? 1u : 0u));
        }
        for (const auto& e : g.edges) {
            CHECK(f_tilde(g.nodes[e.from], e.label, params) == g.nodes[e.to]);
        }
    }
}

TEST_CASE("crystal operators are mutually inverse up to rank 8") {
    for (const auto& params : oracle::all_params(4)) {
        for (const auto& bp : up_to(8)) {
            for (int i = 0; i < params.e(); ++i) {
                Residue r{i};
                if (auto up = f_tilde(bp, r, params)) CHECK(e_tilde(*up, r, params) == bp);
                if (auto down = e_tilde(bp, r, params)) CHECK(f_tilde(*down, r, params) == bp);
            }
        }
    }
}

TEST_CASE("Kleshchev structure facts up to rank 8") {
    for (const auto& params : oracle::all_params(4)) {
        const int e = params.e();
        for (const auto& bp : up_to(8)) {
            CAPTURE(bp);
            if (!is_kleshchev_recursive(bp, params)) continue;
            CHECK(is_e_restricted(bp.first, e));
            CHECK(is_e_restricted(bp.second, e));
            for (int i = 0; i < e; ++i) {
                if (auto g = good_node(bp, Residue{i}, params)) {
                    CHECK(is_kleshchev_recursive(bp.with_removed(*g), params));
                }
            }
        }
    }
}

TEST_CASE("node order is total on each i-signature") {
    for (const auto& params : oracle::all_params(4)) {
        for (const auto& bp : up_to(7)) {
            for (int i = 0; i < params.e(); ++i) {
                auto nodes = addable_nodes(bp, Residue{i}, params);
                auto rem = removable_nodes(bp, Residue{i}, params);
                nodes.insert(nodes.end(), rem.begin(), rem.end());
                for (const auto& a : nodes) {
                    CHECK(residue(a, params).value == i);
                    CHECK(residue(a, params).value == oracle::residue_of(a, params));
                    CHECK_FALSE(is_above(a, a));
                    for (const auto& b : nodes) {
                        if (a == b) continue;
                        CHECK(is_above(a, b) != is_above(b, a));
                        for (const auto& c : nodes) {
                            if (is_above(a, b) && is_above(b, c)) CHECK(is_above(a, c));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("normal nodes satisfy the counting rule literally") {
    for (const auto& params : oracle::all_params(3)) {
        for (const auto& bp : up_to(7)) {
            for (int i = 0; i < params.e(); ++i) {
                auto add = addable_nodes(bp, Residue{i}, params);
                auto rem = removable_nodes(bp, Residue{i}, params);
                std::vector<Node> expected;
                for (const auto& g : rem) {
                    bool normal = true;
                    for (const auto& eta : add) {
                        if (!is_above(g, eta)) continue;
                        int r = 0, a = 0;
                        for (const auto& x : rem) r += is_above(g, x) && is_above(x, eta);
                        for (const auto& x : add) a += is_above(g, x) && is_above(x, eta);
                        if (r <= a) normal = false;
                    }
                    if (normal) expected.push_back(g);
                }
                CHECK(normal_nodes(bp, Residue{i}, params) == expected);
            }
        }
    }
}
