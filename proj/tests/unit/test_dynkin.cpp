#include "chroma/dynkin.hpp"
#include "chroma/errors.hpp"
#include "chroma/weyl.hpp"
#include "corpus.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace chroma;
using corpus::S;
using corpus::el;

TEST_CASE("generalized diagrams") {
    BraidingMatrix diag{{S("q"), S("r")}, {S("r^-1"), S("-1")}};
    CHECK(generalized_diagram(diag).edges.empty());
    Diagram d = generalized_diagram(corpus::c2xc2().q());
    REQUIRE(d.edges.size() == 3);
    CHECK(d.edges[0].label == S("q^-1"));
    CHECK(d.edges[1].label == S("-1"));
    CHECK(d.edges[2].label == S("-1*q"));
    CHECK_FALSE(d == corpus::nuestro_generalized(false));
    CHECK(generalized_diagram(corpus::nuestro().q()) == corpus::nuestro_generalized(false));
}

TEST_CASE("colored diagrams") {
    Diagram c = colored_diagram(corpus::c2xc2());
    FinAbGroup g({2, 2});
    Diagram expect;
    expect.kind = Diagram::Kind::colored;
    expect.group = g;
    expect.vertices = {{S("q"), el({0, 0})}, {S("1"), el({1, 0})}, {S("1"), el({0, 1})}, {S("q^-1"), el({1, 0})}};
    expect.edges = {{0, 1, S("q^-1")}, {1, 2, std::nullopt}, {2, 3, S("q")}};
    CHECK(c == expect);
    CHECK(colored_diagram(corpus::nuestro()) == corpus::nuestro_colored(false));

    BraidingMatrix q = corpus::c2xc2().q();
    Datum plain(q, Bicharacter::trivial(FinAbGroup({1})), std::vector<Element>(4, el({0})));
    Diagram pc = colored_diagram(plain), pg = generalized_diagram(q);
    REQUIRE(pc.edges.size() == pg.edges.size());
    for (std::size_t k = 0; k < pc.edges.size(); ++k) CHECK(pc.edges[k] == pg.edges[k]);
}

TEST_CASE("labeled isomorphism") {
    Diagram a = generalized_diagram({{S("q"), S("zeta(3,1)")}, {S("1"), S("-1")}});
    Diagram b = generalized_diagram({{S("-1"), S("zeta(3,1)")}, {S("1"), S("q")}});
    CHECK(isomorphic(a, a));
    CHECK(isomorphic(a, b));
    auto rows = corpus::c2xc2_table();
    CHECK_FALSE(isomorphic(rows[1].generalized, rows[5].generalized));
    CHECK_FALSE(isomorphic(rows[0].colored, rows[2].colored));
    Diagram big;
    big.vertices.assign(11, {S("q"), std::nullopt});
    CHECK_THROWS_AS(isomorphic(big, big), SizeLimit);
}

TEST_CASE("isomorphism is an equivalence on orbit diagrams") {
    OrbitGraph o = weyl_orbit(corpus::nuestro());
    std::vector<Diagram> ds;
    for (auto& n : o.nodes) ds.push_back(colored_diagram(n));
    for (auto& x : ds) {
        CHECK(isomorphic(x, x));
        for (auto& y : ds) {
            CHECK(isomorphic(x, y) == isomorphic(y, x));
            for (auto& z : ds)
                if (isomorphic(x, y) && isomorphic(y, z)) CHECK(isomorphic(x, z));
        }
    }
}

TEST_CASE("DOT emission") {
    Diagram one = generalized_diagram({{S("q")}});
    CHECK(emit_dot(one) == "graph generalized {\n  v0 [label=\"q\"];\n}\n");
    std::string chain = emit_dot(generalized_diagram(corpus::c2xc2().q()));
    CHECK(chain.find("v3 [label") != std::string::npos);
    CHECK(chain.find("v2 -- v3 [label=\"-1*q\"]") != std::string::npos);
    std::string col = emit_dot(colored_diagram(corpus::c2xc2()));
    CHECK(col.find("v1 -- v2 [label=\"\"]") != std::string::npos);
    CHECK(emit_dot(colored_diagram(corpus::c2xc2())) == col);
    CHECK_THROWS_AS(parse_dot("digraph x {\n}\n"), ParseError);
}

TEST_CASE("DOT round trip") {
    for (auto& row : corpus::c2xc2_table()) {
        CHECK(parse_dot(emit_dot(row.generalized)) == row.generalized);
        CHECK(parse_dot(emit_dot(row.colored)) == row.colored);
    }
    gen::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        Datum e = gen::datum(rng, 4, 8);
        Diagram g = generalized_diagram(e.q()), c = colored_diagram(e);
        CHECK(parse_dot(emit_dot(g)) == g);
        CHECK(parse_dot(emit_dot(c)) == c);
    }
}

TEST_CASE("text rendering") {
    CHECK(render_text(corpus::nuestro_generalized(false)) == "○^ω —q^-1— ○^q\n");
    CHECK(render_text(corpus::nuestro_generalized(true)) == "○^ω —qω²— ○^q^-1ω\n");
    std::string c = render_text(corpus::nuestro_colored(true));
    CHECK(c.rfind("⊗^1 —q— ⊗^q^-1\n", 0) == 0);
    CHECK(c.find("legend: ○=(0) ●=(1) ⊗=(2)") != std::string::npos);
    Datum big({{S("q")}}, Bicharacter(FinAbGroup({5}), {{Rational01(1, 5)}}), {el({3})});
    std::string b = render_text(colored_diagram(big));
    CHECK(b.find("(3)^") != std::string::npos);
    CHECK(b.find("legend") == std::string::npos);
}
