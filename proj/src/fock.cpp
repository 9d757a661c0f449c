#include "kleshchev/fock.hpp"

#include "kleshchev/error.hpp"
#include "kleshchev/orders.hpp"
#include "kleshchev/sequences.hpp"

#include <algorithm>
#include <unordered_map>

namespace kleshchev {

FockVector FockVector::basis(const Bipartition& bp, LaurentPoly coeff) {
    FockVector w;
    w.add(bp, coeff);
    return w;
}

void FockVector::add(const Bipartition& bp, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(bp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly FockVector::coeff(const Bipartition& bp) const {
    auto it = terms_.find(bp);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

FockVector FockVector::at_one() const {
    FockVector out;
    for (const auto& [bp, c] : terms_) out.add(bp, LaurentPoly(c.at_one()));
    return out;
}

namespace {

int exponent_for(const Node& gamma, const std::vector<Node>& addable, const std::vector<Node>& removable,
                 Convention convention) {
    if (convention == Convention::Classical) return 0;
    auto counts = [&](const Node& other) {
        return convention == Convention::Below ? is_above(gamma, other) : is_above(other, gamma);
    };
    int n = 0;
    for (const Node& a : addable) n += counts(a) ? 1 : 0;
    for (const Node& r : removable) n -= counts(r) ? 1 : 0;
    return n;
}

} // namespace

FockVector f_apply(Residue i, const FockVector& w, const Params& params, Convention convention) {
    FockVector out;
    for (const auto& [bp, c] : w.terms()) {
        auto addable = addable_nodes(bp, i, params);
        auto removable = removable_nodes(bp, i, params);
        for (const Node& gamma : addable) {
            out.add(bp.with_added(gamma), c.shifted(exponent_for(gamma, addable, removable, convention)));
        }
    }
    return out;
}

FockVector f_divided_apply(Residue i, int a, const FockVector& w, const Params& params, Convention convention) {
    if (a < 0) throw PreconditionError("divided power exponent must be nonnegative");
    FockVector cur = w;
    for (int k = 0; k < a; ++k) cur = f_apply(i, cur, params, convention);
    if (a <= 1) return cur;
    const LaurentPoly denom = convention == Convention::Classical ? quantum_factorial(a).at_one()
                                                                  : quantum_factorial(a);
    FockVector out;
    for (const auto& [bp, c] : cur.terms()) out.add(bp, exact_divide(c, denom));
    return out;
}

FockVector apply_word(const ResidueSequence& word, const Params& params, Convention convention) {
    FockVector w = FockVector::basis(Bipartition{});
    for (Residue r : word) w = f_apply(r, w, params, convention);
    return w;
}

std::string ExpansionCheck::describe() const {
    std::string out;
    if (!leading_is_one) out += "leading coefficient is not 1; ";
    for (const auto& b : not_below) out += b.to_string() + " is not below; ";
    for (const auto& b : negative_coeffs) out += b.to_string() + " has a negative coefficient; ";
    if (out.empty()) return "ok";
    out.resize(out.size() - 2);
    return out;
}

ExpansionCheck check_expansion(const FockVector& w, const Bipartition& lambda) {
    ExpansionCheck check;
    check.leading_is_one = w.coeff(lambda).is_one();
    for (const auto& [bp, c] : w.terms()) {
        if (!c.all_nonnegative()) check.negative_coeffs.push_back(bp);
        if (bp != lambda && !prec(bp, lambda)) check.not_below.push_back(bp);
    }
    return check;
}

FockVector expand_optimal_unchecked(const Bipartition& lambda, const Params& params, Convention convention) {
    OptimalSequence seq = optimal_sequence(lambda, params);
    FockVector w = FockVector::basis(Bipartition{});
    for (auto it = seq.blocks.rbegin(); it != seq.blocks.rend(); ++it) {
        w = f_divided_apply(it->residue, it->count, w, params, convention);
    }
    return w;
}

FockVector expand_optimal(const Bipartition& lambda, const Params& params, Convention convention) {
    FockVector w = expand_optimal_unchecked(lambda, params, convention);
    ExpansionCheck check = check_expansion(w, lambda);
    if (!check.ok()) {
        throw ConventionViolation("expansion of " + lambda.to_string() + " failed: " + check.describe());
    }
    return w;
}

namespace {

struct CountKey {
    Bipartition shape;
    std::size_t len;
    bool operator==(const CountKey&) const = default;
};

struct CountKeyHash {
    std::size_t operator()(const CountKey& k) const noexcept {
        return std::hash<Bipartition>{}(k.shape) * 31 + k.len;
    }
};

std::uint64_t count_rec(const Bipartition& nu, const ResidueSequence& s, std::size_t len, const Params& params,
                        std::unordered_map<CountKey, std::uint64_t, CountKeyHash>& memo) {
    if (len == 0) return nu.empty() ? 1 : 0;
    CountKey key{nu, len};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const Node& g : removable_nodes(nu, s[len - 1], params)) {
        std::uint64_t sub = count_rec(nu.with_removed(g), s, len - 1, params, memo);
        if (__builtin_add_overflow(total, sub, &total)) throw OverflowError("bitableau count overflow");
    }
    memo.emplace(std::move(key), total);
    return total;
}

using SeqMemo = std::unordered_map<Bipartition, std::set<ResidueSequence>>;

const std::set<ResidueSequence>& sequences_rec(const Bipartition& lambda, const Params& params, SeqMemo& memo) {
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    std::set<ResidueSequence> out;
    if (lambda.empty()) {
        out.insert(ResidueSequence{});
    } else {
        for (const Node& g : all_removable_nodes(lambda)) {
            Residue r = residue(g, params);
            for (ResidueSequence s : sequences_rec(lambda.with_removed(g), params, memo)) {
                s.push_back(r);
                out.insert(std::move(s));
            }
        }
    }
    return memo.emplace(lambda, std::move(out)).first->second;
}

} // namespace

std::uint64_t count_bitableaux(const Bipartition& nu, const ResidueSequence& s, const Params& params) {
    if (nu.rank() != static_cast<int>(s.size())) return 0;
    std::unordered_map<CountKey, std::uint64_t, CountKeyHash> memo;
    return count_rec(nu, s, s.size(), params, memo);
}

std::set<ResidueSequence> residue_sequences(const Bipartition& lambda, const Params& params) {
    SeqMemo memo;
    return sequences_rec(lambda, params, memo);
}

std::string to_string(const ResidueSequence& s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(s[k].value);
    }
    return out;
}

} // namespace kleshchev
