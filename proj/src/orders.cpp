#include "kleshchev/orders.hpp"

#include <algorithm>
#include <set>

namespace kleshchev {

namespace {

// Prefix chain of a bipartition: first-component prefix sums over k parts
// (k = 1..width1), then |first| + second-component prefix sums over k parts
// (k = 0..width2).
std::vector<int> prefix_chain(const Bipartition& bp, std::size_t width1, std::size_t width2) {
    std::vector<int> out;
    out.reserve(width1 + width2 + 1);
    int s = 0;
    for (std::size_t k = 0; k < width1; ++k) out.push_back(s += bp.first[k]);
    out.push_back(s = bp.first.rank());
    for (std::size_t k = 0; k < width2; ++k) out.push_back(s += bp.second[k]);
    return out;
}

// First index where chain a exceeds chain b, i.e. where "a <= b" fails.
std::optional<std::size_t> first_excess(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return k;
    }
    return std::nullopt;
}

struct Chains {
    std::vector<int> mu;
    std::vector<int> lambda;
};

Chains chains(const Bipartition& mu, const Bipartition& lambda) {
    std::size_t w1 = std::max(mu.first.length(), lambda.first.length());
    std::size_t w2 = std::max(mu.second.length(), lambda.second.length());
    return {prefix_chain(mu, w1, w2), prefix_chain(lambda, w1, w2)};
}

} // namespace

bool dominance_leq(const Bipartition& mu, const Bipartition& lambda) {
    auto c = chains(mu, lambda);
    return !first_excess(c.mu, c.lambda).has_value();
}

bool dominance_less(const Bipartition& mu, const Bipartition& lambda) {
    return mu != lambda && dominance_leq(mu, lambda);
}

OrderVerdict compare_dominance(const Bipartition& mu, const Bipartition& lambda) {
    if (mu == lambda) return {Dominance::Equal, std::nullopt};
    auto c = chains(mu, lambda);
    auto mu_fails = first_excess(c.mu, c.lambda);
    auto lambda_fails = first_excess(c.lambda, c.mu);
    if (!mu_fails) return {Dominance::DominatedBy, lambda_fails};
    if (!lambda_fails) return {Dominance::Dominates, mu_fails};
    return {Dominance::Incomparable, mu_fails};
}

namespace {

// -1 if a is smaller at the largest differing index, +1 if larger, 0 if equal.
int compare_from_bottom(const Partition& a, const Partition& b) {
    std::size_t len = std::max(a.length(), b.length());
    for (std::size_t k = len; k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    }
    return 0;
}

} // namespace

bool prec(const Bipartition& lambda, const Bipartition& nu) {
    int c = compare_from_bottom(lambda.second, nu.second);
    if (c != 0) return c < 0;
    return compare_from_bottom(lambda.first, nu.first) < 0;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int k = n; k >= 0; --k) {
        auto firsts = partitions_of(k);
        auto seconds = partitions_of(n - k);
        for (const auto& a : firsts) {
            for (const auto& b : seconds) out.push_back(Bipartition{a, b});
        }
    }
    return out;
}

std::optional<ResidueSequence> restricted_witness(const Bipartition& lambda, const Params& params) {
    std::set<Bipartition> dominated;
    for (auto& nu : enumerate_bipartitions(lambda.rank())) {
        if (dominance_less(nu, lambda)) dominated.insert(std::move(nu));
    }
    auto sequences = residue_sequences(lambda, params);
    if (dominated.empty()) return *sequences.begin();

    // Sequences come in lexicographic order, so consecutive ones share long
    // prefixes; cache the classical vector after each prefix length.
    const std::size_t n = static_cast<std::size_t>(lambda.rank());
    std::vector<FockVector> stack(n + 1);
    stack[0] = FockVector::basis(Bipartition{});
    const ResidueSequence* previous = nullptr;
    for (const ResidueSequence& s : sequences) {
        std::size_t common = 0;
        if (previous) {
            while (common < n && (*previous)[common] == s[common]) ++common;
        }
        for (std::size_t k = common; k < n; ++k) {
            stack[k + 1] = f_apply(s[k], stack[k], params, Convention::Classical);
        }
        previous = &s;
        bool hit = std::any_of(stack[n].terms().begin(), stack[n].terms().end(),
                               [&](const auto& term) { return dominated.count(term.first) > 0; });
        if (!hit) return s;
    }
    return std::nullopt;
}

bool is_restricted(const Bipartition& lambda, const Params& params) {
    return restricted_witness(lambda, params).has_value();
}

} // namespace kleshchev
