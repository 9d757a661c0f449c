#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace kleshchev {

/// Integer Laurent polynomial in v. Coefficients are 64-bit with every
/// operation overflow-checked (OverflowError); zero coefficients are never
/// stored, so equality is structural.
class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(Coeff constant); // NOLINT: implicit from integers is intended
    static LaurentPoly monomial(Coeff c, int exponent);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<int, Coeff>& terms() const noexcept { return terms_; }
    Coeff coeff(int exponent) const noexcept;
    int min_exponent() const; // requires nonzero
    int max_exponent() const; // requires nonzero

    /// Value at v = 1.
    Coeff at_one() const;
    bool all_nonnegative() const noexcept;
    bool is_one() const noexcept { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    /// Multiply by v^k.
    LaurentPoly shifted(int k) const;

    bool operator==(const LaurentPoly&) const = default;

    /// e.g. "v^2 + 2 + v^-2"; zero prints as "0".
    std::string to_string() const;

private:
    void add_term(int exponent, Coeff c);
    std::map<int, Coeff> terms_;
};

/// q with p = q * d in Z[v, v^-1]; throws InexactDivision otherwise and
/// InvariantViolation when d is zero.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);

/// [k] = v^(k-1) + v^(k-3) + ... + v^(1-k).
LaurentPoly quantum_integer(int k);
/// [a]! = [1][2]...[a].
LaurentPoly quantum_factorial(int a);

} // namespace kleshchev
