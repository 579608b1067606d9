#include "chroma/errors.hpp"
#include "chroma/triangular.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace chroma;

namespace {

Rational01 R(long long n, long long d) { return Rational01(n, d); }

}  // namespace

TEST_CASE("drinfeld element") {
    FinAbGroup c2({2});
    auto u = drinfeld_u(Bicharacter::trivial(c2));
    CHECK(u == std::vector<Rational01>{R(0, 1), R(0, 1)});
    u = drinfeld_u(Bicharacter(c2, {{R(1, 2)}}));
    CHECK(u[0].is_zero());
    CHECK(u[1] == R(1, 2));
    CHECK_THROWS_AS(drinfeld_u(Bicharacter(FinAbGroup({3}), {{R(1, 3)}})), NotCommutationFactor);
}

TEST_CASE("kappa from u") {
    FinAbGroup g({2, 2});
    CHECK(kappa_of(g, {R(0, 1), R(0, 1), R(0, 1), R(0, 1)}) == Bicharacter::trivial(g));
    // u(x) = u(y) = -1
    Bicharacter k = kappa_of(g, {R(0, 1), R(1, 2), R(1, 2), R(0, 1)});
    CHECK(k.eval(g.make({1, 0}), g.make({0, 1})) == R(1, 2));
    CHECK(k.eval(g.make({1, 1}), g.make({1, 0})).is_zero());
    CHECK(k.is_commutation_factor());
    k = kappa_of(g, {R(0, 1), R(1, 2), R(0, 1), R(1, 2)});
    CHECK(k.eval(g.make({0, 1}), g.make({1, 1})).is_zero());
}

TEST_CASE("reduction of the basic cases") {
    FinAbGroup c2({2});
    TriangularData t = reduce(Bicharacter::trivial(c2));
    CHECK(t.g_prime.group.size() == 1);
    CHECK(t.K.size() == 1);

    t = reduce(Bicharacter(c2, {{R(1, 2)}}));
    CHECK(t.kappa == Bicharacter(c2, {{R(1, 2)}}));
    CHECK(t.g_prime.group.size() == 1);
    CHECK(t.K.size() == 1);

    FinAbGroup k({2, 2});
    Bicharacter hyper(k, {{R(0, 1), R(1, 2)}, {R(1, 2), R(0, 1)}});
    t = reduce(hyper);
    for (auto& v : t.u) CHECK(v.is_zero());
    CHECK(t.kappa == Bicharacter::trivial(k));
    CHECK(t.g_prime.group.size() == 4);
    CHECK(t.K.size() == 4);
    CHECK(satisfies_trick(t.beta_prime, t.gamma_prime));
    const auto& gp = t.g_prime.group;
    Element x = gp.generator(0), y = gp.generator(1);
    CHECK(t.gamma_prime[gp.index(x)][gp.index(y)] != t.gamma_prime[gp.index(y)][gp.index(x)]);
    CHECK(t.gamma_prime[gp.index(x)][gp.index(y)] - t.gamma_prime[gp.index(y)][gp.index(x)] == R(1, 2));
}

TEST_CASE("scheunert cocycle preconditions") {
    FinAbGroup c2({2});
    CHECK_THROWS_AS(scheunert_cocycle(Bicharacter(c2, {{R(1, 2)}})), DomainError);
    auto g = scheunert_cocycle(Bicharacter::trivial(c2));
    for (auto& row : g)
        for (auto& v : row) CHECK(v.is_zero());
}

TEST_CASE("pipeline invariants on random commutation factors") {
    gen::Rng rng(17);
    int tested = 0;
    while (tested < 200) {
        FinAbGroup g = gen::group(rng, 16);
        Bicharacter b = gen::bicharacter(rng, g);
        if (!b.is_commutation_factor()) continue;
        ++tested;
        TriangularData t = reduce(b);
        for (auto& x : g.elements()) {
            Rational01 ux = t.u[static_cast<std::size_t>(g.index(x))];
            CHECK((ux + ux).is_zero());
            for (auto& y : g.elements())
                CHECK(t.u[static_cast<std::size_t>(g.index(g.mul(x, y)))] ==
                      ux + t.u[static_cast<std::size_t>(g.index(y))]);
        }
        CHECK(t.beta_kappa.is_commutation_factor());
        CHECK(t.beta_prime.is_nondegenerate());
        CHECK(t.K.size() * t.radical.size() == g.size());
        const FinAbGroup& gp = t.g_prime.group;
        CHECK(is_normalized(gp, t.gamma_prime));
        CHECK(is_two_cocycle(gp, t.gamma_prime));
        CHECK(satisfies_trick(t.beta_prime, t.gamma_prime));
    }
}
