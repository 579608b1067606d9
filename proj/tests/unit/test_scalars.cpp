#include "chroma/cyclotomic.hpp"
#include "chroma/errors.hpp"
#include "chroma/scalar.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace chroma;

namespace {

Scalar S(const std::string& s) { return Scalar::parse(s); }

// Least n in [0, bound] with a^n = b, by repeated multiplication.
std::optional<long long> brute_power(const Scalar& a, const Scalar& b, long long bound) {
    Scalar x = Scalar::one();
    for (long long n = 0; n <= bound; ++n) {
        if (x == b) return n;
        x *= a;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("rational01 is kept reduced in [0,1)") {
    CHECK(Rational01(3, 6) == Rational01(1, 2));
    CHECK(Rational01(-1, 3) == Rational01(2, 3));
    CHECK(Rational01(7, 7).is_zero());
    CHECK(Rational01(5, 4).num() == 1);
    CHECK(Rational01(5, 4).den() == 4);
    CHECK_THROWS_AS(Rational01(1, 0), DomainError);
    CHECK(Rational01::parse("2/6") == Rational01(1, 3));
    CHECK(Rational01(2, 3).to_string() == "2/3");
}

TEST_CASE("monomial products") {
    CHECK((S("-1") * S("-1")).is_one());
    CHECK((S("q") * S("q^-1")).is_one());
    Scalar p = S("zeta(3,1)") * S("-1*q^-1");
    CHECK(p.root() == Rational01(5, 6));
    CHECK(p.exponent("q") == -1);
    CHECK(S("q^2*q^-2").is_one());
}

TEST_CASE("scalar grammar round trip") {
    for (const char* s : {"-1*q^-1", "zeta(3,1)*q", "1", "q", "zeta(12,5)*q^3*r^-2", "-1"}) CHECK(S(s).to_string() == s);
    CHECK(S("zeta(3,1)").root() == Rational01(1, 3));
    CHECK(S("-1*q^-1").root() == Rational01(1, 2));
    CHECK(S("q*zeta(4,1)").to_string() == "zeta(4,1)*q");
    CHECK_THROWS_AS(S("q^"), ParseError);
    CHECK_THROWS_AS(S("zeta(0,1)"), ParseError);
    CHECK_THROWS_AS(S("2*q"), ParseError);
    CHECK_THROWS_AS(S(""), ParseError);
    try {
        S("q*&");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("emission after parsing is the identity on random monomials") {
    gen::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Scalar a = gen::monomial(rng);
        CHECK(Scalar::parse(a.to_string()) == a);
    }
}

TEST_CASE("multiplicative orders") {
    CHECK(order_of(S("zeta(3,1)")) == 3);
    CHECK(order_of(S("1")) == 1);
    CHECK_FALSE(order_of(S("-1*q")).has_value());
    gen::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        Scalar a(gen::root(rng, 30));
        long long n = *order_of(a);
        CHECK(a.pow(n).is_one());
        for (long long m = 1; m < n; ++m) CHECK_FALSE(a.pow(m).is_one());
    }
}

TEST_CASE("solve_power examples") {
    CHECK(solve_power(S("q"), S("q")) == 1);
    CHECK(solve_power(S("q"), S("q^-1") * S("q^2")) == 1);
    CHECK(solve_power(S("-1"), S("1")) == 0);
    CHECK(solve_power(S("-1"), S("-1")) == 1);
    CHECK_FALSE(solve_power(S("q"), S("q^-1")).has_value());
    CHECK_FALSE(solve_power(S("-1"), S("zeta(3,1)")).has_value());
    CHECK(solve_power(S("zeta(6,1)*q"), S("zeta(3,1)*q^2")) == 2);
}

TEST_CASE("solve_power agrees with brute force on random monomials") {
    gen::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        Scalar a = gen::monomial(rng, 12, 3);
        Scalar b = gen::uniform(rng, 0, 1) ? a.pow(gen::uniform(rng, 0, 40)) : gen::monomial(rng, 12, 3);
        CHECK(solve_power(a, b) == brute_power(a, b, 200));
    }
}

TEST_CASE("group axioms on random triples") {
    gen::Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        Scalar a = gen::monomial(rng), b = gen::monomial(rng), c = gen::monomial(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a * a.inverse()).is_one());
        CHECK(a * Scalar::one() == a);
    }
}

TEST_CASE("cyclotomic arithmetic") {
    CHECK((Cyclotomic::embed(Rational01(1, 2), 2) + Cyclotomic::embed(Rational01(), 2)).is_zero());
    CHECK((Cyclotomic::embed(Rational01(1, 3), 3) * Cyclotomic::embed(Rational01(2, 3), 3)).is_one());
    CHECK(Cyclotomic::embed(Rational01(1, 3), 3) + Cyclotomic::embed(Rational01(2, 3), 3) == -Cyclotomic::one(3));
    Cyclotomic s;
    for (long long k = 0; k < 12; ++k) s += Cyclotomic::embed(Rational01(k, 12), 12);
    CHECK(s.is_zero());
    CHECK_THROWS_AS(Cyclotomic(7).inverse(), DivisionByZero);
    CHECK(Cyclotomic::embed(Rational01(1, 4), 12).as_root() == Rational01(1, 4));
    CHECK_FALSE((Cyclotomic::one() + Cyclotomic::one()).as_root().has_value());
    Cyclotomic z = Cyclotomic::parse("1+zeta(3,1)");
    CHECK(z == -Cyclotomic::embed(Rational01(2, 3), 3));
    CHECK(Cyclotomic::parse(z.to_string()) == z);
}

TEST_CASE("cyclotomic arithmetic matches floating point") {
    gen::Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        long long n = gen::uniform(rng, 1, 24), m = gen::uniform(rng, 1, 24);
        Cyclotomic a = gen::cyclotomic(rng, n), b = gen::cyclotomic(rng, m);
        auto fa = a.eval(), fb = b.eval();
        CHECK(std::abs((a + b).eval() - (fa + fb)) < 1e-9);
        CHECK(std::abs((a * b).eval() - fa * fb) < 1e-9);
        CHECK(std::abs((a - b).eval() - (fa - fb)) < 1e-9);
        if (!b.is_zero()) {
            CHECK(std::abs((a / b).eval() - fa / fb) < 1e-9 * (1 + std::abs(fa / fb)));
            CHECK((a / b) * b == a);
        }
        CHECK(a.lifted(a.conductor() * 5) == a);
    }
}
