#include "corpus.hpp"

namespace corpus {

using namespace chroma;

Scalar S(const std::string& text) { return Scalar::parse(text); }
Element el(std::vector<long long> r) { return Element{std::move(r)}; }

namespace {

const Element E{{0, 0}}, SIG{{1, 0}}, NU{{0, 1}}, SN{{1, 1}};

Bicharacter c2xc2_beta() {
    FinAbGroup g({2, 2});
    return Bicharacter(g, {{Rational01(1, 2), Rational01(1, 2)}, {Rational01(), Rational01(1, 2)}});
}

Diagram gen(std::vector<std::string> v, std::vector<std::tuple<std::size_t, std::size_t, std::string>> e) {
    Diagram d;
    for (auto& s : v) d.vertices.push_back({S(s), std::nullopt});
    for (auto& [i, j, s] : e) d.edges.push_back({i, j, S(s)});
    return d;
}

// Edge label "" means unlabeled.
Diagram col(const FinAbGroup& g, std::vector<std::pair<std::string, Element>> v,
            std::vector<std::tuple<std::size_t, std::size_t, std::string>> e) {
    Diagram d;
    d.kind = Diagram::Kind::colored;
    d.group = g;
    for (auto& [s, t] : v) d.vertices.push_back({S(s), t});
    for (auto& [i, j, s] : e) d.edges.push_back({i, j, s.empty() ? std::nullopt : std::optional<Scalar>(S(s))});
    return d;
}

}  // namespace

Datum c2xc2() {
    BraidingMatrix q(4, std::vector<Scalar>(4));
    q[0][0] = S("q");
    q[0][1] = S("q^-1");
    q[1][1] = S("-1");
    q[1][2] = S("-1");
    q[2][2] = S("-1");
    q[2][3] = S("-1*q");
    q[3][3] = S("-1*q^-1");
    return Datum(q, c2xc2_beta(), {E, SIG, NU, SIG});
}

std::vector<TableRow> c2xc2_table() {
    FinAbGroup g({2, 2});
    std::vector<TableRow> rows;
    rows.push_back({gen({"-1", "-1", "-1", "-1*q^-1"}, {{0, 1, "q"}, {0, 2, "-1"}, {1, 2, "-1*q^-1"}, {2, 3, "-1*q"}}),
                    col(g, {{"1", SIG}, {"1", SIG}, {"1", SN}, {"q^-1", SIG}}, {{0, 1, "q"}, {0, 2, ""}, {1, 2, "q^-1"}, {2, 3, "q"}})});
    rows.push_back({gen({"q", "-1", "-1*q^-1", "-1*q^-1"}, {{0, 1, "q^-1"}, {1, 2, "-1*q"}, {2, 3, "-1*q"}}),
                    col(g, {{"q", E}, {"1", SIG}, {"q^-1", NU}, {"q^-1", SIG}}, {{0, 1, "q^-1"}, {1, 2, "q"}, {2, 3, "q"}})});
    rows.push_back({gen({"-1*q^-1", "-1", "-1", "-1"}, {{0, 1, "-1*q"}, {1, 2, "-1"}, {1, 3, "-1*q^-1"}, {2, 3, "q"}}),
                    col(g, {{"q^-1", NU}, {"1", SN}, {"1", NU}, {"1", NU}}, {{0, 1, "q"}, {1, 2, ""}, {1, 3, "q^-1"}, {2, 3, "q"}})});
    rows.push_back({gen({"q", "-1", "-1", "-1"}, {{0, 1, "q^-1"}, {1, 2, "-1"}, {1, 3, "q"}, {2, 3, "-1*q^-1"}}),
                    col(g, {{"q", E}, {"1", SN}, {"1", NU}, {"1", SN}}, {{0, 1, "q^-1"}, {1, 2, ""}, {1, 3, "q"}, {2, 3, "q^-1"}})});
    rows.push_back({gen({"-1", "-1", "-1", "q"}, {{0, 1, "-1*q^-1"}, {0, 2, "-1"}, {1, 2, "q"}, {2, 3, "q^-1"}}),
                    col(g, {{"1", SIG}, {"1", SN}, {"1", SN}, {"q", E}}, {{0, 1, "q^-1"}, {0, 2, ""}, {1, 2, "q"}, {2, 3, "q^-1"}})});
    rows.push_back({gen({"q", "q", "-1", "-1*q^-1"}, {{0, 1, "q^-1"}, {1, 2, "q^-1"}, {2, 3, "-1*q"}}),
                    col(g, {{"q", E}, {"q", E}, {"1", SN}, {"q^-1", SIG}}, {{0, 1, "q^-1"}, {1, 2, "q^-1"}, {2, 3, "q"}})});
    return rows;
}

namespace {

Bicharacter c3_beta() { return Bicharacter(FinAbGroup({3}), {{Rational01(1, 3)}}); }

}  // namespace

Datum nuestro() {
    BraidingMatrix qt{{S("1"), S("q^-1")}, {S("1"), S("q")}};
    return datum_from_twisted(qt, c3_beta(), {el({1}), el({0})});
}

Diagram nuestro_generalized(bool reflected) {
    if (!reflected) return gen({"zeta(3,1)", "q"}, {{0, 1, "q^-1"}});
    return gen({"zeta(3,1)", "zeta(3,1)*q^-1"}, {{0, 1, "zeta(3,2)*q"}});
}

Diagram nuestro_colored(bool reflected) {
    FinAbGroup g({3});
    if (!reflected) return col(g, {{"1", el({1})}, {"q", el({0})}}, {{0, 1, "q^-1"}});
    return col(g, {{"1", el({2})}, {"q^-1", el({2})}}, {{0, 1, "q"}});
}

Datum yamane() {
    BraidingMatrix qt{{S("1"), S("q^-1")}, {S("q^-1"), S("q^2")}};
    return datum_from_twisted(qt, c3_beta(), {el({1}), el({0})});
}

MatchedPair forpro() {
    MatchedPair mp = MatchedPair::trivial(FiniteGroup::cyclic(7), FiniteGroup::cyclic(3));
    for (std::size_t l = 0; l < 7; ++l)
        for (std::size_t c = 0; c < 3; ++c) {
            std::size_t x = l;
            for (std::size_t k = 0; k < c; ++k) x = (2 * x) % 7;
            mp.lact[l][c] = x;
        }
    return mp;
}

ExtAutomorphism forpro_auto(long long k) {
    ExtAutomorphism f;
    for (std::size_t l = 0; l < 7; ++l) f.g.push_back((7 - l) % 7);
    f.h = {0, 1, 2};
    f.ftilde.assign(3, std::vector<Rational01>(7));
    for (long long i = 0; i < 7; ++i) {
        f.ftilde[1][static_cast<std::size_t>(i)] = Rational01(k * i, 7);
        f.ftilde[2][static_cast<std::size_t>(i)] = Rational01(3 * k * i, 7);
    }
    return f;
}

MatchedPair forpro1() {
    MatchedPair mp = MatchedPair::trivial(FiniteGroup::cyclic(12), FiniteGroup::cyclic(3));
    for (std::size_t l = 1; l < 12; l += 2) {
        mp.ract[l][1] = 2;
        mp.ract[l][2] = 1;
        mp.lact[l][1] = (l + 4) % 12;
        mp.lact[l][2] = (l + 8) % 12;
    }
    return mp;
}

ExtAutomorphism forpro1_auto(long long k) {
    ExtAutomorphism f;
    for (std::size_t l = 0; l < 12; ++l) f.g.push_back((7 * l) % 12);
    f.h = {0, 1, 2};
    f.ftilde.assign(3, std::vector<Rational01>(12));
    for (std::size_t l = 1; l < 12; l += 2) {
        f.ftilde[1][l] = Rational01(k, 3);
        f.ftilde[2][l] = Rational01(2 * k, 3);
    }
    return f;
}

namespace {

ColorExample group_algebra_example(const FinAbGroup& g, std::vector<std::vector<Rational01>> b,
                                   std::vector<Element> sup) {
    ColorExample ex;
    ex.mp = MatchedPair::trivial(FiniteGroup(), FiniteGroup::from_abelian(FinAbGroup({2, 2})));
    ex.rho.beta = Bicharacter(g, std::move(b));
    // gamma = index 1, eta = index 2, gamma eta = index 3; eta -> gamma eta
    ExtAutomorphism f{{0}, {0, 1, 3, 2}, std::vector<std::vector<Rational01>>(4, std::vector<Rational01>(1))};
    ex.rho.generators.assign(g.rank(), f);
    ex.expected_support = std::move(sup);
    return ex;
}

}  // namespace

ColorExample colorgroup1() { return group_algebra_example(FinAbGroup({4}), {{Rational01(1, 2)}}, {el({0}), el({2})}); }

ColorExample colorgroup2() {
    return group_algebra_example(FinAbGroup({2, 4}), {{Rational01(), Rational01(1, 2)}, {Rational01(1, 2), Rational01()}},
                                 {el({0, 0}), el({1, 2})});
}

ColorExample matchedpair() {
    ColorExample ex;
    ex.mp = forpro1();
    ex.rho.beta = Bicharacter(FinAbGroup({2, 2}), {{Rational01(), Rational01(1, 2)}, {Rational01(1, 2), Rational01()}});
    ex.rho.generators = {forpro1_auto(0), forpro1_auto(0)};
    ex.expected_support = {el({0, 0}), el({1, 1})};
    return ex;
}

ColorExample matchedpair_mutated() {
    ColorExample ex = matchedpair();
    ex.rho.beta = c2xc2_beta();
    ex.expected_color = false;
    return ex;
}

SommerInput sommer_z3() {
    SommerInput in;
    in.ring = FinAbGroup({3});
    in.Gamma = FiniteGroup::cyclic(2);
    in.nu = {el({1}), el({2})};
    in.psi = {el({0}), el({1})};
    in.phi.assign(2, std::vector<Element>(2, el({0})));
    in.eta = Character{{0}};
    in.theta = Character{{1}};
    return in;
}

}  // namespace corpus
