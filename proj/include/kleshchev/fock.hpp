#pragma once

#include "kleshchev/bipartition.hpp"
#include "kleshchev/laurent.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace kleshchev {

/// Finitely supported combination of bipartitions with Laurent coefficients.
class FockVector {
public:
    FockVector() = default;
    static FockVector basis(const Bipartition& bp, LaurentPoly coeff = LaurentPoly(1));

    void add(const Bipartition& bp, const LaurentPoly& coeff);
    LaurentPoly coeff(const Bipartition& bp) const;
    const std::map<Bipartition, LaurentPoly>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficientwise value at v = 1.
    FockVector at_one() const;

    bool operator==(const FockVector&) const = default;

private:
    std::map<Bipartition, LaurentPoly> terms_;
};

/// How the power of v attached to an added node gamma is counted.
///   Below:     #addable - #removable i-nodes strictly below gamma
///   Above:     #addable - #removable i-nodes strictly above gamma
///   Classical: always v^0 (the undeformed action)
enum class Convention { Below, Above, Classical };

using ResidueSequence = std::vector<Residue>;

FockVector f_apply(Residue i, const FockVector& w, const Params& params,
                   Convention convention = Convention::Below);

/// f_i^a w divided by [a]!; the division must be exact.
FockVector f_divided_apply(Residue i, int a, const FockVector& w, const Params& params,
                           Convention convention = Convention::Below);

/// f_{s_n} ... f_{s_1} applied to the empty bipartition (s_1 acts first).
FockVector apply_word(const ResidueSequence& word, const Params& params,
                      Convention convention = Convention::Below);

/// Outcome of checking that an expansion is lambda + (terms strictly below
/// lambda in the reverse-lexicographic order) with nonnegative coefficients.
struct ExpansionCheck {
    bool leading_is_one = false;
    std::vector<Bipartition> not_below;        // supported, != lambda, and not prec lambda
    std::vector<Bipartition> negative_coeffs;  // some coefficient is negative
    bool ok() const noexcept { return leading_is_one && not_below.empty() && negative_coeffs.empty(); }
    std::string describe() const;
};

ExpansionCheck check_expansion(const FockVector& w, const Bipartition& lambda);

/// Divided powers along the optimal sequence of a Kleshchev bipartition, the
/// last stripped block acting first. Throws ConventionViolation if the
/// result fails check_expansion.
FockVector expand_optimal(const Bipartition& lambda, const Params& params,
                          Convention convention = Convention::Below);

/// Like expand_optimal, without the post-check.
FockVector expand_optimal_unchecked(const Bipartition& lambda, const Params& params,
                                    Convention convention = Convention::Below);

/// Standard bitableaux of shape nu whose residue sequence is s.
std::uint64_t count_bitableaux(const Bipartition& nu, const ResidueSequence& s, const Params& params);

/// Distinct residue sequences of all standard bitableaux of lambda.
std::set<ResidueSequence> residue_sequences(const Bipartition& lambda, const Params& params);

std::string to_string(const ResidueSequence& s);

} // namespace kleshchev
