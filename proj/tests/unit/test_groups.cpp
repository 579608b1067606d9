#include "chroma/errors.hpp"
#include "chroma/groups.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <set>

using namespace chroma;

namespace {

Rational01 R(long long n, long long d) { return Rational01(n, d); }

// Subgroup generated by a few random elements.
Subgroup random_subgroup(gen::Rng& rng, const FinAbGroup& g) {
    std::vector<Element> gens;
    int k = static_cast<int>(gen::uniform(rng, 0, 2));
    for (int i = 0; i < k; ++i) gens.push_back(gen::element(rng, g));
    return Subgroup(g, gens);
}

}  // namespace

TEST_CASE("element arithmetic and indexing") {
    FinAbGroup g({2, 4});
    CHECK(g.size() == 8);
    CHECK(g.exponent() == 4);
    for (long long i = 0; i < g.size(); ++i) CHECK(g.index(g.element(i)) == i);
    CHECK(g.element(1).r == std::vector<long long>{1, 0});
    CHECK(g.element(2).r == std::vector<long long>{0, 1});
    Element x = g.make({1, 3});
    CHECK(g.order(x) == 4);
    CHECK(g.mul(x, g.inv(x)) == g.identity());
    CHECK(g.pow(x, 4) == g.identity());
    CHECK(g.make({3, -1}) == x);
    CHECK(g.is_invariant_factor_form());
    CHECK_FALSE(FinAbGroup({4, 2}).is_invariant_factor_form());
}

TEST_CASE("bicharacter evaluation on the worked examples") {
    FinAbGroup c4({4});
    Bicharacter b1(c4, {{R(1, 2)}});
    CHECK(b1.eval(c4.generator(0), c4.generator(0)) == R(1, 2));
    CHECK(b1.is_nondegenerate() == false);
    CHECK(b1.is_commutation_factor());

    FinAbGroup k({2, 2});
    Bicharacter b2(k, {{R(1, 2), R(1, 2)}, {R(0, 1), R(1, 2)}});
    Element sigma = k.make({1, 0}), nu = k.make({0, 1});
    CHECK(b2.eval(nu, sigma).is_zero());
    CHECK(b2.eval(sigma, nu) == R(1, 2));
    CHECK_FALSE(b2.is_commutation_factor());
    CHECK(b2.eval(k.identity(), nu).is_zero());
    CHECK_THROWS_AS(b2.eval(c4.generator(0), nu), DomainError);

    FinAbGroup c3({3});
    Bicharacter b3(c3, {{R(1, 3)}});
    std::set<Character> images;
    for (auto& x : c3.elements()) images.insert(b3.chi(x));
    CHECK(images.size() == 3);
}

TEST_CASE("bicharacter well-definedness is enforced") {
    CHECK_THROWS(Bicharacter(FinAbGroup({2}), {{R(1, 3)}}));
    CHECK_THROWS(Bicharacter(FinAbGroup({2, 4}), {{R(0, 1), R(1, 4)}, {R(0, 1), R(0, 1)}}));
    CHECK_NOTHROW(Bicharacter(FinAbGroup({2, 4}), {{R(0, 1), R(1, 2)}, {R(0, 1), R(1, 4)}}));
}

TEST_CASE("radical, nondegeneracy and commutation factors") {
    FinAbGroup c2({2});
    Bicharacter triv = Bicharacter::trivial(c2);
    CHECK(triv.radical().size() == 2);
    CHECK_FALSE(triv.is_nondegenerate());
    FinAbGroup c4({4});
    Bicharacter b(c4, {{R(1, 4)}});
    CHECK(b.is_nondegenerate());
    CHECK_FALSE(b.is_commutation_factor());
}

TEST_CASE("chi maps") {
    gen::Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        FinAbGroup g = gen::group(rng, 24);
        Bicharacter b = gen::bicharacter(rng, g);
        Element x = gen::element(rng, g), y = gen::element(rng, g), z = gen::element(rng, g);
        CHECK(g.eval(b.chi(x), y) == b.eval(y, x));
        CHECK(g.eval(b.chi_o(x), y) == b.eval(x, y));
        CHECK(b.chi_map().apply(x).r == b.chi(x).r);
        CHECK(b.chi_o_map().apply(x).r == b.chi_o(x).r);
        CHECK(b.chi(g.mul(x, y)) == g.char_mul(b.chi(x), b.chi(y)));
        CHECK(b.eval(g.mul(x, y), z) == b.eval(x, z) + b.eval(y, z));
        CHECK(b.eval(z, g.mul(x, y)) == b.eval(z, x) + b.eval(z, y));
        std::set<Character> images;
        for (auto& e : g.elements()) images.insert(b.chi(e));
        CHECK(b.is_nondegenerate() == (static_cast<long long>(images.size()) == g.size()));
        std::set<Element> rad;
        for (auto& e : g.elements()) {
            bool in = true;
            for (auto& h : g.elements()) in = in && b.eval(e, h).is_zero();
            if (in) rad.insert(e);
        }
        auto rad_elems = b.radical().elements();
        CHECK(std::set<Element>(rad_elems.begin(), rad_elems.end()) == rad);
        bool cf = true;
        for (auto& e : g.elements())
            for (auto& h : g.elements()) cf = cf && (b.eval(e, h) + b.eval(h, e)).is_zero();
        CHECK(b.is_commutation_factor() == cf);
    }
}

TEST_CASE("perp and quotient on C4") {
    FinAbGroup c4({4});
    Subgroup s(c4, {c4.make({2})});
    CHECK(s.size() == 2);
    Quotient q = quotient(c4, s);
    CHECK(q.group.orders() == std::vector<long long>{2});
    Subgroup p = perp(s);
    CHECK(p.size() == 2);
    CHECK(p.contains(c4.make({2})));
    CHECK(perp(Subgroup(c4, {})).size() == 4);
    CHECK(perp(Subgroup(c4, {c4.generator(0)})).size() == 1);
}

TEST_CASE("subgroup duality and quotient maps on random groups") {
    gen::Rng rng(4);
    for (int i = 0; i < 150; ++i) {
        FinAbGroup g = gen::group(rng, 64);
        Subgroup s = random_subgroup(rng, g);
        Subgroup p = perp(s);
        CHECK(s.size() * p.size() == g.size());
        for (auto& c : p.elements())
            for (auto& x : s.elements()) CHECK(g.eval(Character{c.r}, x).is_zero());
        Quotient q = quotient(g, s);
        CHECK(q.group.is_invariant_factor_form());
        CHECK(q.group.size() * s.size() == g.size());
        std::set<Element> image;
        for (auto& x : g.elements()) {
            Element px = q.projection.apply(x);
            image.insert(px);
            CHECK(q.group.is_identity(px) == s.contains(x));
            Element y = gen::element(rng, g);
            CHECK(q.projection.apply(g.mul(x, y)) == q.group.mul(px, q.projection.apply(y)));
        }
        CHECK(static_cast<long long>(image.size()) == q.group.size());
    }
}

TEST_CASE("normalization to invariant factors") {
    CHECK(normalize(FinAbGroup({2, 3})).group.orders() == std::vector<long long>{6});
    CHECK(normalize(FinAbGroup({4, 2})).group.orders() == std::vector<long long>{2, 4});
    CHECK(normalize(FinAbGroup({6, 4})).group.orders() == std::vector<long long>{2, 12});
    CHECK(normalize(FinAbGroup({1, 5})).group.orders() == std::vector<long long>{5});
}

TEST_CASE("bicharacter enumeration") {
    FinAbGroup g({2, 4});
    CHECK(bicharacter_count(g) == 2 * 2 * 2 * 4);
    std::set<std::vector<std::vector<Rational01>>> seen;
    for (long long i = 0; i < bicharacter_count(g); ++i) seen.insert(bicharacter_by_index(g, i).matrix());
    CHECK(static_cast<long long>(seen.size()) == bicharacter_count(g));
}
