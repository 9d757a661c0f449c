#include "kleshchev/error.hpp"
#include "kleshchev/laurent.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace kleshchev;

namespace {

LaurentPoly mono(LaurentPoly::Coeff c, int k) { return LaurentPoly::monomial(c, k); }

const LaurentPoly v = mono(1, 1);
const LaurentPoly vinv = mono(1, -1);

// Value at an integer point, for the factor theorem at v = -1.
long long eval(const LaurentPoly& p, long long x) {
    long long total = 0;
    for (auto [k, c] : p.terms()) {
        long long term = c;
        for (int j = 0; j < k; ++j) term *= x;
        for (int j = 0; j > k; --j) term /= x; // x = +-1 only
        total += term;
    }
    return total;
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-4, 4), coeff(-5, 5), count(1, 4);
    LaurentPoly p;
    for (int t = count(rng); t > 0; --t) p += mono(coeff(rng), exp(rng));
    return p;
}

} // namespace

TEST_CASE("normal form") {
    CHECK(LaurentPoly().is_zero());
    CHECK(LaurentPoly(0).is_zero());
    CHECK((v - v).is_zero());
    CHECK((v - v).terms().empty());
    CHECK(LaurentPoly(1).is_one());
    CHECK(mono(0, 5).is_zero());
    CHECK((v * vinv).is_one());
    CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("multiplication") {
    LaurentPoly q = v + vinv;
    LaurentPoly sq = q * q;
    CHECK(sq == mono(1, 2) + LaurentPoly(2) + mono(1, -2));
    CHECK(sq.min_exponent() == -2);
    CHECK(sq.max_exponent() == 2);
    CHECK(sq.at_one() == 4);
    CHECK(sq.shifted(3) == mono(1, 5) + mono(2, 3) + mono(1, 1));
}

TEST_CASE("exact division") {
    LaurentPoly q = v + vinv;
    CHECK(exact_divide(q, q).is_one());
    CHECK(exact_divide(q * q, q) == q);
    CHECK(exact_divide(LaurentPoly(), q).is_zero());
    CHECK(exact_divide(mono(6, 3), mono(2, 1)) == mono(3, 2));
    CHECK_THROWS_AS(exact_divide(q, LaurentPoly()), InvariantViolation);

    // v^2 + 1 is not divisible by v + 1: by the factor theorem it would vanish at v = -1.
    LaurentPoly num = mono(1, 2) + LaurentPoly(1);
    CHECK(eval(num, -1) == 2);
    CHECK_THROWS_AS(exact_divide(num, v + LaurentPoly(1)), InexactDivision);
    CHECK_THROWS_AS(exact_divide(LaurentPoly(3), LaurentPoly(2)), InexactDivision);
}

TEST_CASE("division undoes multiplication on random inputs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 2000; ++t) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly b = random_poly(rng);
        if (b.is_zero()) continue;
        LaurentPoly prod = a * b;
        CHECK(exact_divide(prod, b) == a);
        CHECK(prod.at_one() == a.at_one() * b.at_one());
        CHECK(eval(prod, -1) == eval(a, -1) * eval(b, -1));
        CHECK(a + b - b == a);
    }
}

TEST_CASE("quantum integers and factorials") {
    CHECK(quantum_integer(1).is_one());
    CHECK(quantum_integer(2) == v + vinv);
    CHECK(quantum_integer(3) == mono(1, 2) + LaurentPoly(1) + mono(1, -2));
    CHECK(quantum_factorial(0).is_one());
    CHECK(quantum_factorial(1).is_one());
    CHECK(quantum_factorial(2) == v + vinv);
    LaurentPoly f3 = (v + vinv) * (mono(1, 2) + LaurentPoly(1) + mono(1, -2));
    CHECK(quantum_factorial(3) == f3);
    CHECK(f3 == mono(1, 3) + mono(2, 1) + mono(2, -1) + mono(1, -3));
    for (int a = 0; a <= 10; ++a) {
        // [a]! at v=1 is a!, and it is bar-invariant.
        long long fact = 1;
        for (int k = 2; k <= a; ++k) fact *= k;
        LaurentPoly f = quantum_factorial(a);
        CHECK(f.at_one() == fact);
        for (auto [k, c] : f.terms()) CHECK(f.coeff(-k) == c);
        if (a > 0) CHECK(exact_divide(f, quantum_integer(a)) == quantum_factorial(a - 1));
    }
}

TEST_CASE("overflow is detected") {
    constexpr auto big = std::numeric_limits<LaurentPoly::Coeff>::max();
    LaurentPoly b(big);
    CHECK_THROWS_AS(b + LaurentPoly(1), OverflowError);
    CHECK_THROWS_AS(b * LaurentPoly(2), OverflowError);
    CHECK_THROWS_AS((b + v) * (b + v), OverflowError);
    CHECK_NOTHROW(b - LaurentPoly(1));
    CHECK_THROWS_AS(-LaurentPoly(std::numeric_limits<LaurentPoly::Coeff>::min()), OverflowError);
}
