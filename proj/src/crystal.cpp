#include "kleshchev/crystal.hpp"

#include "kleshchev/error.hpp"

#include <deque>
#include <map>
#include <unordered_map>

namespace kleshchev {

namespace {

struct SignedNode {
    Node node;
    bool addable;
};

// Addable and removable i-nodes merged, highest first.
std::vector<SignedNode> i_signature(const Bipartition& bp, Residue i, const Params& params) {
    std::vector<SignedNode> out;
    auto add = addable_nodes(bp, i, params);
    auto rem = removable_nodes(bp, i, params);
    std::size_t a = 0, r = 0;
    while (a < add.size() || r < rem.size()) {
        if (r == rem.size() || (a < add.size() && is_above(add[a], rem[r]))) {
            out.push_back({add[a++], true});
        } else {
            out.push_back({rem[r++], false});
        }
    }
    return out;
}

} // namespace

std::vector<Node> normal_nodes(const Bipartition& bp, Residue i, const Params& params) {
    auto sig = i_signature(bp, i, params);
    std::vector<Node> out;
    for (std::size_t g = 0; g < sig.size(); ++g) {
        if (sig[g].addable) continue;
        bool normal = true;
        int removable_between = 0;
        int addable_between = 0;
        for (std::size_t k = g + 1; k < sig.size() && normal; ++k) {
            if (sig[k].addable) {
                if (removable_between <= addable_between) normal = false;
                ++addable_between;
            } else {
                ++removable_between;
            }
        }
        if (normal) out.push_back(sig[g].node);
    }
    return out;
}

std::optional<Node> good_node(const Bipartition& bp, Residue i, const Params& params) {
    auto normal = normal_nodes(bp, i, params);
    if (normal.empty()) return std::nullopt;
    return normal.front();
}

std::optional<Bipartition> e_tilde(const Bipartition& bp, Residue i, const Params& params) {
    auto g = good_node(bp, i, params);
    if (!g) return std::nullopt;
    return bp.with_removed(*g);
}

std::optional<Bipartition> f_tilde(const Bipartition& bp, Residue i, const Params& params) {
    std::optional<Bipartition> found;
    for (const Node& gamma : addable_nodes(bp, i, params)) {
        Bipartition mu = bp.with_added(gamma);
        if (good_node(mu, i, params) == gamma) {
            if (found) {
                throw InvariantViolation("f_tilde_" + std::to_string(i.value) + " of " + bp.to_string() +
                                         " has two candidates: " + found->to_string() + " and " +
                                         mu.to_string());
            }
            found = std::move(mu);
        }
    }
    return found;
}

namespace {

using Memo = std::unordered_map<Bipartition, bool>;

bool kleshchev_rec(const Bipartition& bp, const Params& params, Memo& memo) {
    if (bp.empty()) return true;
    if (auto it = memo.find(bp); it != memo.end()) return it->second;
    bool result = false;
    for (int r = 0; r < params.e() && !result; ++r) {
        if (auto smaller = e_tilde(bp, Residue{r}, params)) {
            result = kleshchev_rec(*smaller, params, memo);
        }
    }
    memo.emplace(bp, result);
    return result;
}

} // namespace

bool is_kleshchev_recursive(const Bipartition& bp, const Params& params) {
    thread_local std::map<Params, Memo> memos;
    return kleshchev_rec(bp, params, memos[params]);
}

std::vector<std::size_t> CrystalGraph::nodes_of_rank(int n) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (nodes[k].rank() == n) out.push_back(k);
    }
    return out;
}

CrystalGraph crystal_graph(const Params& params, int max_rank) {
    CrystalGraph g;
    std::map<Bipartition, std::size_t> index;
    g.nodes.push_back(Bipartition{});
    index.emplace(Bipartition{}, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        if (g.nodes[cur].rank() >= max_rank) continue;
        for (int r = 0; r < params.e(); ++r) {
            auto next = f_tilde(g.nodes[cur], Residue{r}, params);
            if (!next) continue;
            auto [it, inserted] = index.emplace(*next, g.nodes.size());
            if (inserted) {
                g.nodes.push_back(*next);
                queue.push_back(it->second);
            }
            g.edges.push_back({cur, it->second, Residue{r}});
        }
    }
    return g;
}

} // namespace kleshchev
