#include "chroma/triangular.hpp"

#include "chroma/errors.hpp"

namespace chroma {

std::vector<Rational01> drinfeld_u(const Bicharacter& beta) {
    if (!beta.is_commutation_factor()) throw NotCommutationFactor();
    const FinAbGroup& g = beta.group();
    std::vector<Rational01> u;
    for (auto& x : g.elements()) {
        Rational01 v = beta.eval(x, g.inv(x));
        if (v != beta.eval(x, x)) throw Error("u(g) differs from beta(g,g) for a commutation factor");
        u.push_back(v);
    }
    return u;
}

Bicharacter kappa_of(const FinAbGroup& g, const std::vector<Rational01>& u) {
    if (static_cast<long long>(u.size()) != g.size()) throw DimensionMismatch("u must be tabulated on every element");
    std::size_t n = g.rank();
    std::vector<bool> odd(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational01 v = u[static_cast<std::size_t>(g.index(g.generator(i)))];
        if (!v.is_zero() && v != Rational01(1, 2)) throw DomainError("u takes a value other than +-1");
        odd[i] = !v.is_zero();
    }
    std::vector<std::vector<Rational01>> b(n, std::vector<Rational01>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (odd[i] && odd[j]) b[i][j] = Rational01(1, 2);
    return Bicharacter(g, b);
}

Bicharacter product(const Bicharacter& a, const Bicharacter& b) {
    if (!(a.group() == b.group())) throw DomainError("bicharacters live on different groups");
    auto m = a.matrix();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += b.matrix()[i][j];
    return Bicharacter(a.group(), m);
}

CocycleTable scheunert_cocycle(const Bicharacter& bp) {
    const FinAbGroup& g = bp.group();
    if (!bp.is_commutation_factor()) throw NotCommutationFactor();
    for (std::size_t i = 0; i < g.rank(); ++i)
        if (!bp.matrix()[i][i].is_zero()) throw DomainError("commutation factor has nontrivial diagonal");
    auto n = static_cast<std::size_t>(g.size());
    CocycleTable t(n, std::vector<Rational01>(n));
    auto elems = g.elements();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Rational01 acc;
            for (std::size_t i = 0; i < g.rank(); ++i)
                for (std::size_t j = 0; j < i; ++j) acc += bp.matrix()[i][j] * (elems[x].r[i] * elems[y].r[j]);
            t[x][y] = acc;
        }
    return t;
}

bool satisfies_trick(const Bicharacter& beta, const CocycleTable& gamma) {
    const FinAbGroup& g = beta.group();
    auto elems = g.elements();
    for (std::size_t x = 0; x < elems.size(); ++x)
        for (std::size_t y = 0; y < elems.size(); ++y)
            if (beta.eval(elems[x], elems[y]) != gamma[x][y] - gamma[y][x]) return false;
    return true;
}

bool is_two_cocycle(const FinAbGroup& g, const CocycleTable& gamma) {
    auto n = static_cast<std::size_t>(g.size());
    auto elems = g.elements();
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) mul[x][y] = static_cast<std::size_t>(g.index(g.mul(elems[x], elems[y])));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (gamma[x][y] + gamma[mul[x][y]][z] != gamma[y][z] + gamma[x][mul[y][z]]) return false;
    return true;
}

bool is_normalized(const FinAbGroup& g, const CocycleTable& gamma) {
    auto e = static_cast<std::size_t>(g.index(g.identity()));
    for (std::size_t x = 0; x < gamma.size(); ++x)
        if (!gamma[e][x].is_zero() || !gamma[x][e].is_zero()) return false;
    return true;
}

TriangularData reduce(const Bicharacter& beta) {
    const FinAbGroup& g = beta.group();
    auto u = drinfeld_u(beta);
    Bicharacter kappa = kappa_of(g, u);
    Bicharacter bk = product(beta, kappa);
    if (!bk.is_commutation_factor()) throw Error("beta*kappa is not a commutation factor");
    Subgroup rad = bk.radical();
    Quotient q = quotient(g, rad);
    // sections of the generators of G'
    std::vector<Element> section(q.group.rank());
    std::vector<bool> found(q.group.rank(), false);
    auto elems = g.elements();
    for (auto& x : elems) {
        Element px = q.projection.apply(x);
        for (std::size_t k = 0; k < q.group.rank(); ++k)
            if (!found[k] && px == q.group.generator(k)) {
                section[k] = x;
                found[k] = true;
            }
    }
    std::vector<std::vector<Rational01>> bm(q.group.rank(), std::vector<Rational01>(q.group.rank()));
    for (std::size_t i = 0; i < q.group.rank(); ++i)
        for (std::size_t j = 0; j < q.group.rank(); ++j) bm[i][j] = bk.eval(section[i], section[j]);
    Bicharacter bp(q.group, bm);
    for (auto& x : elems)
        for (auto& y : elems)
            if (bk.eval(x, y) != bp.eval(q.projection.apply(x), q.projection.apply(y)))
                throw Error("beta*kappa does not descend to the quotient");
    if (!bp.is_nondegenerate()) throw Error("reduced bicharacter is degenerate");
    for (auto& x : q.group.elements())
        if (!bp.eval(x, x).is_zero()) throw Error("reduced bicharacter has nontrivial diagonal");
    Subgroup k = perp(rad);
    CocycleTable gp = scheunert_cocycle(bp);
    return TriangularData{u, kappa, bk, rad, q, bp, k, gp};
}

}  // namespace chroma
