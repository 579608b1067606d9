#include "chroma/dynkin.hpp"
#include "chroma/errors.hpp"
#include "chroma/weyl.hpp"
#include "corpus.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <set>

using namespace chroma;
using corpus::S;
using corpus::el;

namespace {

// Direct evaluation of the reflection formula on the twisted matrix.
BraidingMatrix reflect_twisted(const BraidingMatrix& qt, std::size_t p, const std::vector<long long>& a) {
    BraidingMatrix r = qt;
    for (std::size_t i = 0; i < qt.size(); ++i)
        for (std::size_t j = 0; j < qt.size(); ++j)
            r[i][j] = qt[i][j] * qt[p][j].pow(-a[i]) * qt[i][p].pow(-a[j]) * qt[p][p].pow(a[i] * a[j]);
    return r;
}

void check_involution(const Datum& e) {
    for (std::size_t p = 0; p < e.rank(); ++p) {
        std::optional<Datum> d;
        try {
            d = reflect_datum(e, p);
        } catch (const DiagonalOne&) {
            continue;
        }
        if (!d) continue;
        auto a = cartan_row(e.q(), p);
        CHECK(d->qt() == reflect_twisted(e.qt(), p, *a));
        auto back = reflect_datum(*d, p);
        REQUIRE(back.has_value());
        CHECK(*back == e);
        CHECK(*reflect_matrix(*reflect_matrix(e.q(), p), p) == e.q());
    }
}

}  // namespace

TEST_CASE("cartan entries") {
    BraidingMatrix q{{S("q"), S("q^-1")}, {S("1"), S("-1")}};
    CHECK(cartan_entry(q, 0, 0) == 2);
    CHECK(cartan_entry(q, 0, 1) == -1);
    BraidingMatrix r{{S("-1"), S("-1*q")}, {S("1"), S("q")}};
    CHECK(cartan_entry(r, 0, 1) == -1);
    BraidingMatrix s{{S("q"), S("r")}, {S("r^-1"), S("q")}};
    CHECK(cartan_entry(s, 0, 1) == 0);
    BraidingMatrix u{{S("q"), S("q")}, {S("1"), S("q")}};
    CHECK_FALSE(cartan_entry(u, 0, 1).has_value());
    CHECK_FALSE(cartan_row(u, 0).has_value());
    CHECK_FALSE(reflect_matrix(u, 0).has_value());
    CHECK_THROWS_AS(cartan_entry(u, 0, 2), DomainError);
}

TEST_CASE("reflections of the worked examples") {
    Datum e = corpus::nuestro();
    auto d = reflect_datum(e, 0);
    REQUIRE(d.has_value());
    CHECK(d->t() == std::vector<Element>{el({2}), el({2})});
    CHECK(isomorphic(generalized_diagram(d->q()), corpus::nuestro_generalized(true)));
    CHECK(isomorphic(colored_diagram(*d), corpus::nuestro_colored(true)));

    BraidingMatrix one{{S("q")}};
    CHECK(*reflect_matrix(one, 0) == one);

    BraidingMatrix q = corpus::c2xc2().q();
    Datum plain(q, Bicharacter::trivial(FinAbGroup({1})), std::vector<Element>(4, el({0})));
    for (std::size_t p = 0; p < 4; ++p)
        if (auto r = reflect_datum(plain, p))
            for (auto& t : r->t()) CHECK(t == el({0}));

    auto first = reflect_datum(corpus::c2xc2(), 1);
    REQUIRE(first.has_value());
    CHECK(isomorphic(colored_diagram(*first), corpus::c2xc2_table()[0].colored));
}

TEST_CASE("orbits") {
    OrbitGraph o = weyl_orbit(corpus::nuestro());
    CHECK_FALSE(o.truncated);
    std::vector<Diagram> g;
    for (auto& n : o.nodes) g.push_back(generalized_diagram(n.q()));
    CHECK(distinct_diagrams(g).size() == 2);
    CHECK(check_consistent_coloring(o));

    Datum rank1({{S("q")}}, Bicharacter::trivial(FinAbGroup({1})), {el({0})});
    CHECK(weyl_orbit(rank1).nodes.size() == 1);

    OrbitGraph c = weyl_orbit(corpus::c2xc2());
    CHECK(c.nodes.size() == 360);
    CHECK(check_consistent_coloring(c));
    CHECK(weyl_orbit(corpus::c2xc2(), 10).truncated);
    CHECK_THROWS_AS(weyl_orbit(rank1, 0), DomainError);
}

TEST_CASE("corrupted colorings are detected") {
    OrbitGraph o = weyl_orbit(corpus::nuestro());
    REQUIRE(o.nodes.size() > 1);
    const Datum& n = o.nodes[1];
    std::vector<Element> t = n.t();
    t[0] = n.group().mul(t[0], n.group().generator(0));
    o.nodes[1] = Datum(n.q(), n.beta(), t);
    CHECK_FALSE(check_consistent_coloring(o));
}

TEST_CASE("node count does not depend on the starting node") {
    for (const Datum& e : {corpus::nuestro(), corpus::c2xc2()}) {
        OrbitGraph o = weyl_orbit(e);
        std::set<std::size_t> sizes;
        for (std::size_t k : {std::size_t{0}, o.nodes.size() / 2, o.nodes.size() - 1}) sizes.insert(weyl_orbit(o.nodes[k]).nodes.size());
        CHECK(sizes == std::set<std::size_t>{o.nodes.size()});
    }
}

TEST_CASE("reflection is an involution on orbit nodes") {
    for (const Datum& e : {corpus::nuestro(), corpus::c2xc2()})
        for (auto& n : weyl_orbit(e).nodes) check_involution(n);
}

TEST_CASE("reflection is an involution on random data") {
    gen::Rng rng(29);
    for (int i = 0; i < 300; ++i) check_involution(gen::datum(rng, 4, 8));
}

TEST_CASE("every orbit edge matches the reflected generalized diagram") {
    OrbitGraph o = weyl_orbit(corpus::c2xc2());
    for (auto& ed : o.edges)
        CHECK(generalized_diagram(o.nodes[ed.to].q()) == generalized_diagram(*reflect_matrix(o.nodes[ed.from].q(), ed.vertex)));
}
