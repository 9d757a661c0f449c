#include "kleshchev/laurent.hpp"

#include "kleshchev/error.hpp"

namespace kleshchev {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Laurent coefficient overflow in addition");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("Laurent coefficient overflow in multiplication");
    return r;
}

Coeff checked_neg(Coeff a) {
    Coeff r;
    if (__builtin_sub_overflow(Coeff{0}, a, &r)) throw OverflowError("Laurent coefficient overflow in negation");
    return r;
}

} // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const noexcept {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw InvariantViolation("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw InvariantViolation("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
    Coeff s = 0;
    for (auto [k, c] : terms_) s = checked_add(s, c);
    return s;
}

bool LaurentPoly::all_nonnegative() const noexcept {
    for (auto [k, c] : terms_) {
        if (c < 0) return false;
    }
    return true;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (auto [k, c] : terms_) out.terms_.emplace(k, checked_neg(c));
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [k, c] : o.terms_) add_term(k, checked_neg(c));
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (auto [k1, c1] : terms_) {
        for (auto [k2, c2] : o.terms_) out.add_term(k1 + k2, checked_mul(c1, c2));
    }
    *this = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (auto [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [k, c] = *it;
        Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag);
        out += "v";
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw InvariantViolation("division by the zero polynomial");
    if (p.is_zero()) return {};
    // Long division from the top degree; d's lowest term is a unit shift, so
    // exactness in the Laurent ring is exactness of the normalised polynomials.
    const int d_top = d.max_exponent();
    const int d_low = d.min_exponent();
    const Coeff lead = d.coeff(d_top);
    LaurentPoly rem = p;
    LaurentPoly quot;
    while (!rem.is_zero()) {
        int top = rem.max_exponent();
        if (top - d_top < rem.min_exponent() - d_low) break;
        Coeff c = rem.coeff(top);
        if (c % lead != 0) break;
        LaurentPoly step = LaurentPoly::monomial(c / lead, top - d_top);
        quot += step;
        rem -= step * d;
    }
    if (!rem.is_zero()) {
        throw InexactDivision("(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
    }
    return quot;
}

LaurentPoly quantum_integer(int k) {
    LaurentPoly out;
    for (int j = 0; j < k; ++j) out += LaurentPoly::monomial(1, k - 1 - 2 * j);
    return out;
}

LaurentPoly quantum_factorial(int a) {
    LaurentPoly out(1);
    for (int k = 2; k <= a; ++k) out *= quantum_integer(k);
    return out;
}

} // namespace kleshchev
