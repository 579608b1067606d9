#include "chroma/extensions.hpp"

#include "chroma/errors.hpp"
#include "chroma/parallel.hpp"
#include "chroma/smith.hpp"

#include <atomic>
#include <map>
#include <numeric>

namespace chroma {

MatchedPair MatchedPair::trivial(FiniteGroup l, FiniteGroup gamma) {
    MatchedPair mp{std::move(l), std::move(gamma), {}, {}};
    mp.lact.assign(mp.L.size(), std::vector<std::size_t>(mp.Gamma.size()));
    mp.ract.assign(mp.L.size(), std::vector<std::size_t>(mp.Gamma.size()));
    for (std::size_t a = 0; a < mp.L.size(); ++a)
        for (std::size_t c = 0; c < mp.Gamma.size(); ++c) {
            mp.lact[a][c] = a;
            mp.ract[a][c] = c;
        }
    return mp;
}

bool MatchedPair::lact_trivial() const {
    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t c = 0; c < Gamma.size(); ++c)
            if (lact[a][c] != a) return false;
    return true;
}

bool MatchedPair::ract_trivial() const {
    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t c = 0; c < Gamma.size(); ++c)
            if (ract[a][c] != c) return false;
    return true;
}

void MatchedPair::check_shape() const {
    auto check = [&](const std::vector<std::vector<std::size_t>>& t, std::size_t bound, const char* what) {
        if (t.size() != L.size()) throw DimensionMismatch(std::string(what) + " table must have |L| rows");
        for (auto& row : t) {
            if (row.size() != Gamma.size()) throw DimensionMismatch(std::string(what) + " table must have |Gamma| columns");
            for (auto x : row)
                if (x >= bound) throw DimensionMismatch(std::string(what) + " table entry out of range");
        }
    };
    check(lact, L.size(), "right action");
    check(ract, Gamma.size(), "left action");
}

bool validate_matched_pair(const MatchedPair& mp) {
    mp.check_shape();
    const auto& L = mp.L;
    const auto& G = mp.Gamma;
    for (std::size_t l = 0; l < L.size(); ++l) {
        if (mp.lact[l][G.identity()] != l || mp.ract[l][G.identity()] != G.identity()) return false;
    }
    for (std::size_t c = 0; c < G.size(); ++c)
        if (mp.lact[L.identity()][c] != L.identity() || mp.ract[L.identity()][c] != c) return false;
    for (std::size_t l = 0; l < L.size(); ++l)
        for (std::size_t c = 0; c < G.size(); ++c)
            for (std::size_t d = 0; d < G.size(); ++d) {
                // right action of Gamma on L
                if (mp.lact[mp.lact[l][c]][d] != mp.lact[l][G.mul(c, d)]) return false;
                // l |> cd = (l |> c)((l <| c) |> d)
                if (mp.ract[l][G.mul(c, d)] != G.mul(mp.ract[l][c], mp.ract[mp.lact[l][c]][d])) return false;
            }
    for (std::size_t l = 0; l < L.size(); ++l)
        for (std::size_t t = 0; t < L.size(); ++t)
            for (std::size_t c = 0; c < G.size(); ++c) {
                // left action of L on Gamma
                if (mp.ract[l][mp.ract[t][c]] != mp.ract[L.mul(l, t)][c]) return false;
                // lt <| c = (l <| (t |> c))(t <| c)
                if (mp.lact[L.mul(l, t)][c] != L.mul(mp.lact[l][mp.ract[t][c]], mp.lact[t][c])) return false;
            }
    return true;
}

SigmaTable trivial_sigma(const MatchedPair& mp) {
    return SigmaTable(mp.L.size(), std::vector<std::vector<Rational01>>(mp.Gamma.size(), std::vector<Rational01>(mp.Gamma.size())));
}

TauTable trivial_tau(const MatchedPair& mp) {
    return TauTable(mp.Gamma.size(), std::vector<std::vector<Rational01>>(mp.L.size(), std::vector<Rational01>(mp.L.size())));
}

void check_shape(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau) {
    mp.check_shape();
    const std::size_t nl = mp.L.size(), ng = mp.Gamma.size();
    if (sigma.size() != nl) throw DimensionMismatch("sigma must have |L| slices");
    for (auto& s : sigma) {
        if (s.size() != ng) throw DimensionMismatch("sigma slices must be |Gamma| x |Gamma|");
        for (auto& row : s)
            if (row.size() != ng) throw DimensionMismatch("sigma slices must be |Gamma| x |Gamma|");
    }
    if (tau.size() != ng) throw DimensionMismatch("tau must have |Gamma| slices");
    for (auto& s : tau) {
        if (s.size() != nl) throw DimensionMismatch("tau slices must be |L| x |L|");
        for (auto& row : s)
            if (row.size() != nl) throw DimensionMismatch("tau slices must be |L| x |L|");
    }
}

bool sigma_is_cocycle(const MatchedPair& mp, const SigmaTable& s) {
    const auto& G = mp.Gamma;
    for (std::size_t l = 0; l < mp.L.size(); ++l)
        for (std::size_t a = 0; a < G.size(); ++a)
            for (std::size_t b = 0; b < G.size(); ++b)
                for (std::size_t c = 0; c < G.size(); ++c)
                    if (s[l][a][b] + s[l][G.mul(a, b)][c] != s[mp.lact[l][a]][b][c] + s[l][a][G.mul(b, c)]) return false;
    return true;
}

bool tau_is_cocycle(const MatchedPair& mp, const TauTable& t) {
    const auto& L = mp.L;
    for (std::size_t g = 0; g < mp.Gamma.size(); ++g)
        for (std::size_t a = 0; a < L.size(); ++a)
            for (std::size_t b = 0; b < L.size(); ++b)
                for (std::size_t c = 0; c < L.size(); ++c)
                    if (t[mp.ract[c][g]][a][b] + t[g][L.mul(a, b)][c] != t[g][b][c] + t[g][a][L.mul(b, c)]) return false;
    return true;
}

bool cocycles_normalized(const MatchedPair& mp, const SigmaTable& s, const TauTable& t) {
    const std::size_t e1 = mp.L.identity(), e2 = mp.Gamma.identity();
    for (std::size_t l = 0; l < mp.L.size(); ++l)
        for (std::size_t g = 0; g < mp.Gamma.size(); ++g) {
            if (!s[l][e2][g].is_zero() || !s[l][g][e2].is_zero()) return false;
            if (!t[g][e1][l].is_zero() || !t[g][l][e1].is_zero()) return false;
        }
    for (std::size_t a = 0; a < mp.Gamma.size(); ++a)
        for (std::size_t b = 0; b < mp.Gamma.size(); ++b)
            if (!s[e1][a][b].is_zero()) return false;
    for (std::size_t a = 0; a < mp.L.size(); ++a)
        for (std::size_t b = 0; b < mp.L.size(); ++b)
            if (!t[e2][a][b].is_zero()) return false;
    return true;
}

bool kac_condition(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau) {
    check_shape(mp, sigma, tau);
    const auto& L = mp.L;
    const auto& G = mp.Gamma;
    std::atomic<bool> ok{true};
    parallel_for(L.size(), [&](std::size_t s) {
        for (std::size_t t = 0; t < L.size() && ok; ++t)
            for (std::size_t x = 0; x < G.size(); ++x)
                for (std::size_t y = 0; y < G.size(); ++y) {
                    std::size_t tx = mp.ract[t][x];
                    std::size_t tlx = mp.lact[t][x];
                    Rational01 lhs = sigma[L.mul(s, t)][x][y] + tau[G.mul(x, y)][s][t];
                    Rational01 rhs = sigma[s][tx][mp.ract[tlx][y]] + sigma[t][x][y] + tau[x][s][t] + tau[y][mp.lact[s][tx]][tlx];
                    if (lhs != rhs) {
                        ok = false;
                        return;
                    }
                }
    });
    return ok;
}

namespace {

long long table_conductor(const SigmaTable& sigma, const TauTable& tau) {
    long long n = 1;
    for (auto& a : sigma)
        for (auto& b : a)
            for (auto& c : b) n = std::lcm(n, c.den());
    for (auto& a : tau)
        for (auto& b : a)
            for (auto& c : b) n = std::lcm(n, c.den());
    return n;
}

}  // namespace

Bicrossed build_bicrossed(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau) {
    check_shape(mp, sigma, tau);
    const auto& L = mp.L;
    const auto& G = mp.Gamma;
    const long long n = table_conductor(sigma, tau);
    auto root = [n](const Rational01& r) { return Cyclotomic::embed(r, n); };
    Bicrossed out;
    StructBialgebra& h = out.algebra;
    h.dim = mp.dim();
    h.mult.resize(h.dim * h.dim);
    for (std::size_t l = 0; l < L.size(); ++l)
        for (std::size_t c = 0; c < G.size(); ++c) {
            std::size_t t = mp.lact[l][c];
            for (std::size_t d = 0; d < G.size(); ++d)
                h.mult[mp.index(l, c) * h.dim + mp.index(t, d)] = {Term{mp.index(l, G.mul(c, d)), root(sigma[l][c][d])}};
        }
    h.comult.resize(h.dim);
    for (std::size_t l = 0; l < L.size(); ++l)
        for (std::size_t c = 0; c < G.size(); ++c) {
            ComboBuilder b;
            for (std::size_t u = 0; u < L.size(); ++u) {
                std::size_t v = L.mul(L.inv(u), l);
                std::size_t left = mp.index(u, mp.ract[v][c]);
                b.add(left * h.dim + mp.index(v, c), root(tau[c][u][v]));
            }
            h.comult[mp.index(l, c)] = b.take();
        }
    for (std::size_t l = 0; l < L.size(); ++l) h.unit.push_back(Term{mp.index(l, G.identity()), Cyclotomic::one(n)});
    h.counit.assign(h.dim, Cyclotomic::zero(n));
    for (std::size_t c = 0; c < G.size(); ++c) h.counit[mp.index(L.identity(), c)] = Cyclotomic::one(n);
    out.kac = kac_condition(mp, sigma, tau);
    return out;
}

ExtAutomorphism ext_identity(const MatchedPair& mp) {
    ExtAutomorphism f;
    f.g.resize(mp.L.size());
    std::iota(f.g.begin(), f.g.end(), std::size_t{0});
    f.h.resize(mp.Gamma.size());
    std::iota(f.h.begin(), f.h.end(), std::size_t{0});
    f.ftilde.assign(mp.Gamma.size(), std::vector<Rational01>(mp.L.size()));
    return f;
}

namespace {

std::vector<std::size_t> inverse_perm(const std::vector<std::size_t>& p) {
    std::vector<std::size_t> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
    return q;
}

void check_ext_shape(const MatchedPair& mp, const ExtAutomorphism& f) {
    if (f.g.size() != mp.L.size() || f.h.size() != mp.Gamma.size() || f.ftilde.size() != mp.Gamma.size())
        throw DimensionMismatch("extension automorphism has the wrong shape");
    for (auto& row : f.ftilde)
        if (row.size() != mp.L.size()) throw DimensionMismatch("extension automorphism has the wrong shape");
}

}  // namespace

ExtAutomorphism compose(const MatchedPair& mp, const ExtAutomorphism& f, const ExtAutomorphism& f2) {
    check_ext_shape(mp, f);
    check_ext_shape(mp, f2);
    ExtAutomorphism r;
    r.g.resize(mp.L.size());
    r.h.resize(mp.Gamma.size());
    for (std::size_t l = 0; l < mp.L.size(); ++l) r.g[l] = f.g[f2.g[l]];
    for (std::size_t c = 0; c < mp.Gamma.size(); ++c) r.h[c] = f.h[f2.h[c]];
    auto ginv = inverse_perm(f.g);
    r.ftilde.assign(mp.Gamma.size(), std::vector<Rational01>(mp.L.size()));
    for (std::size_t c = 0; c < mp.Gamma.size(); ++c)
        for (std::size_t m = 0; m < mp.L.size(); ++m) r.ftilde[c][m] = f2.ftilde[c][ginv[m]] + f.ftilde[f2.h[c]][m];
    return r;
}

ExtAutomorphism ext_power(const MatchedPair& mp, const ExtAutomorphism& f, long long k) {
    if (k < 0) throw DomainError("negative power of an extension automorphism");
    ExtAutomorphism r = ext_identity(mp);
    for (long long i = 0; i < k; ++i) r = compose(mp, f, r);
    return r;
}

bool actions_compatible(const MatchedPair& mp, const std::vector<std::size_t>& g, const std::vector<std::size_t>& h) {
    for (std::size_t l = 0; l < mp.L.size(); ++l)
        for (std::size_t c = 0; c < mp.Gamma.size(); ++c) {
            if (mp.lact[g[l]][h[c]] != g[mp.lact[l][c]]) return false;
            if (mp.ract[g[l]][h[c]] != h[mp.ract[l][c]]) return false;
        }
    return true;
}

bool ftilde_conditions(const MatchedPair& mp, const ExtAutomorphism& f) {
    check_ext_shape(mp, f);
    const auto& L = mp.L;
    const auto& G = mp.Gamma;
    const auto& x = f.ftilde;
    auto ginv = inverse_perm(f.g);
    for (std::size_t c = 0; c < G.size(); ++c)
        if (!x[c][L.identity()].is_zero()) return false;
    for (std::size_t l = 0; l < L.size(); ++l)
        if (!x[G.identity()][l].is_zero()) return false;
    for (std::size_t c = 0; c < G.size(); ++c)
        for (std::size_t d = 0; d < G.size(); ++d)
            for (std::size_t l = 0; l < L.size(); ++l)
                if (x[G.mul(c, d)][l] != x[c][l] + x[d][mp.lact[l][f.h[c]]]) return false;
    for (std::size_t c = 0; c < G.size(); ++c)
        for (std::size_t l = 0; l < L.size(); ++l)
            for (std::size_t t = 0; t < L.size(); ++t)
                if (x[c][L.mul(l, t)] != x[mp.ract[ginv[t]][c]][l] + x[c][t]) return false;
    return true;
}

std::vector<LinearCombo> ext_matrix(const MatchedPair& mp, const ExtAutomorphism& f) {
    check_ext_shape(mp, f);
    std::vector<LinearCombo> cols(mp.dim());
    for (std::size_t l = 0; l < mp.L.size(); ++l)
        for (std::size_t c = 0; c < mp.Gamma.size(); ++c)
            cols[mp.index(l, c)] = {Term{mp.index(f.g[l], f.h[c]), Cyclotomic::root(f.ftilde[c][f.g[l]])}};
    return cols;
}

long long default_root_bound(const MatchedPair& mp) {
    long long e = std::lcm(static_cast<long long>(mp.L.exponent()), static_cast<long long>(mp.Gamma.exponent()));
    return std::lcm(e, static_cast<long long>(mp.L.size()));
}

AutExtResult aut_ext_solve(const MatchedPair& mp, const std::vector<std::size_t>& g, const std::vector<std::size_t>& h,
                           long long n, std::size_t cap) {
    mp.check_shape();
    if (n < 1) throw DomainError("root-of-unity bound must be positive");
    if (!mp.L.is_automorphism(g)) throw ValidationError("g is not an automorphism of L");
    if (!mp.Gamma.is_automorphism(h)) throw ValidationError("h is not an automorphism of Gamma");
    AutExtResult res;
    res.bound_too_small = n % default_root_bound(mp) != 0;
    res.compatible = actions_compatible(mp, g, h);
    if (!res.compatible) return res;

    const auto& L = mp.L;
    const auto& G = mp.Gamma;
    const std::size_t nl = L.size(), ng = G.size(), cols = nl * ng;
    auto var = [nl](std::size_t c, std::size_t l) { return c * nl + l; };
    auto ginv = inverse_perm(g);
    IntMatrix rows;
    auto add_row = [&](std::initializer_list<std::pair<std::size_t, long long>> terms) {
        std::vector<long long> r(cols, 0);
        for (auto& [k, v] : terms) r[k] += v;
        bool zero = true;
        for (auto& v : r) {
            v = ((v % n) + n) % n;
            if (v) zero = false;
        }
        if (!zero) rows.push_back(std::move(r));
    };
    for (std::size_t c = 0; c < ng; ++c) add_row({{var(c, L.identity()), 1}});
    for (std::size_t l = 0; l < nl; ++l) add_row({{var(G.identity(), l), 1}});
    for (std::size_t c = 0; c < ng; ++c)
        for (std::size_t d = 0; d < ng; ++d)
            for (std::size_t l = 0; l < nl; ++l)
                add_row({{var(G.mul(c, d), l), 1}, {var(c, l), -1}, {var(d, mp.lact[l][h[c]]), -1}});
    for (std::size_t c = 0; c < ng; ++c)
        for (std::size_t l = 0; l < nl; ++l)
            for (std::size_t t = 0; t < nl; ++t)
                add_row({{var(c, L.mul(l, t)), 1}, {var(mp.ract[ginv[t]][c], l), -1}, {var(c, t), -1}});
    if (rows.empty()) rows.push_back(std::vector<long long>(cols, 0));
    ModKernel ker = kernel_mod(rows, cols, n);
    res.solution_count = ker.size();

    auto H = build_bicrossed(mp, trivial_sigma(mp), trivial_tau(mp)).algebra;
    std::vector<long long> digits(ker.generators.size(), 0);
    while (true) {
        if (res.solutions.size() >= cap) {
            res.truncated = static_cast<long long>(cap) < res.solution_count;
            break;
        }
        std::vector<long long> x(cols, 0);
        for (std::size_t k = 0; k < digits.size(); ++k)
            for (std::size_t j = 0; j < cols; ++j) x[j] = (x[j] + digits[k] * ker.generators[k][j]) % n;
        ExtAutomorphism f{g, h, std::vector<std::vector<Rational01>>(ng, std::vector<Rational01>(nl))};
        for (std::size_t c = 0; c < ng; ++c)
            for (std::size_t l = 0; l < nl; ++l) f.ftilde[c][l] = Rational01(x[var(c, l)], n);
        res.solutions.push_back(std::move(f));
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == ker.orders[k]) digits[k++] = 0;
        if (k == digits.size()) break;
    }
    std::vector<char> certified(res.solutions.size(), 0);
    parallel_for(res.solutions.size(), [&](std::size_t i) {
        const auto& f = res.solutions[i];
        certified[i] = ftilde_conditions(mp, f) && check_morphism(H, H, ext_matrix(mp, f)).all_pass();
    });
    for (auto c : certified)
        if (!c) res.all_certified = false;
    return res;
}

std::vector<AutExtPair> aut_ext_enumerate(const MatchedPair& mp, long long n) {
    if (mp.L.size() > 12 || mp.Gamma.size() > 12) throw SizeLimit("Aut_ext enumeration is limited to groups of order 12");
    std::vector<AutExtPair> out;
    for (auto& g : mp.L.automorphisms())
        for (auto& h : mp.Gamma.automorphisms()) {
            if (!actions_compatible(mp, g, h)) continue;
            auto r = aut_ext_solve(mp, g, h, n, 0);
            out.push_back({g, h, r.solution_count});
        }
    return out;
}

MonomialMap monomial_from_columns(const std::vector<LinearCombo>& columns) {
    MonomialMap m;
    std::vector<char> hit(columns.size(), 0);
    for (auto& col : columns) {
        if (col.size() != 1 || col[0].index >= columns.size() || hit[col[0].index]) throw NonMonomialAction();
        auto r = col[0].coeff.as_root();
        if (!r) throw NonMonomialAction();
        hit[col[0].index] = 1;
        m.target.push_back(col[0].index);
        m.scale.push_back(*r);
    }
    return m;
}

std::vector<LinearCombo> monomial_columns(const MonomialMap& m) {
    std::vector<LinearCombo> cols(m.target.size());
    for (std::size_t x = 0; x < cols.size(); ++x) cols[x] = {Term{m.target[x], Cyclotomic::root(m.scale[x])}};
    return cols;
}

namespace {

// (a o b)(x) = a(b(x))
MonomialMap mono_compose(const MonomialMap& a, const MonomialMap& b) {
    MonomialMap r;
    r.target.resize(b.target.size());
    r.scale.resize(b.target.size());
    for (std::size_t x = 0; x < b.target.size(); ++x) {
        r.target[x] = a.target[b.target[x]];
        r.scale[x] = b.scale[x] + a.scale[b.target[x]];
    }
    return r;
}

MonomialMap mono_identity(std::size_t d) {
    MonomialMap r;
    r.target.resize(d);
    std::iota(r.target.begin(), r.target.end(), std::size_t{0});
    r.scale.assign(d, Rational01());
    return r;
}

MonomialMap mono_power(const MonomialMap& m, long long k) {
    MonomialMap r = mono_identity(m.target.size());
    for (long long i = 0; i < k; ++i) r = mono_compose(m, r);
    return r;
}

GradedAction expand_monomial(const Bicharacter& beta, const std::vector<MonomialMap>& gens, std::size_t dim) {
    const FinAbGroup& g = beta.group();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!(mono_power(gens[i], g.orders()[i]) == mono_identity(dim)))
            throw ValidationError("action generator " + std::to_string(i + 1) + " has the wrong order");
        for (std::size_t j = 0; j < i; ++j)
            if (!(mono_compose(gens[i], gens[j]) == mono_compose(gens[j], gens[i]))) throw NonCommutingAction();
    }
    GradedAction act{beta, {}};
    for (auto& chi : g.characters()) {
        MonomialMap m = mono_identity(dim);
        for (std::size_t i = 0; i < gens.size(); ++i) m = mono_compose(mono_power(gens[i], chi.r[i]), m);
        act.maps.push_back(std::move(m));
    }
    return act;
}

// P_g(e_x) up to the factor 1/|A|.
LinearCombo projector_image(const GradedAction& act, const Element& g, std::size_t x, long long n) {
    const FinAbGroup& grp = act.beta.group();
    ComboBuilder b;
    for (long long k = 0; k < grp.size(); ++k) {
        const auto& m = act.maps[static_cast<std::size_t>(k)];
        Rational01 c = m.scale[x] - grp.eval(grp.character(k), g);
        b.add(m.target[x], Cyclotomic::embed(c, n));
    }
    return b.take();
}

long long action_conductor(const GradedAction& act) {
    long long n = act.beta.group().exponent();
    for (auto& m : act.maps)
        for (auto& s : m.scale) n = std::lcm(n, s.den());
    return n;
}

}  // namespace

GradedAction make_action(const StructBialgebra& h, const Bicharacter& beta,
                         const std::vector<std::vector<LinearCombo>>& generators) {
    h.validate_shape();
    if (generators.size() != beta.group().rank()) throw DimensionMismatch("one action matrix per generator of the dual group is required");
    std::vector<MonomialMap> gens;
    for (auto& cols : generators) {
        if (cols.size() != h.dim) throw DimensionMismatch("action matrix has the wrong size");
        gens.push_back(monomial_from_columns(cols));
        if (!check_morphism(h, h, cols).all_pass()) throw ValidationError("action generator is not a Hopf algebra automorphism");
    }
    return expand_monomial(beta, gens, h.dim);
}

std::vector<Element> support(const StructBialgebra& h, const GradedAction& action) {
    const FinAbGroup& g = action.beta.group();
    const long long n = action_conductor(action);
    std::vector<Element> sup;
    for (auto& el : g.elements()) {
        bool nonzero = false;
        for (std::size_t x = 0; x < h.dim && !nonzero; ++x) nonzero = !projector_image(action, el, x, n).empty();
        if (nonzero) sup.push_back(el);
    }
    return sup;
}

bool is_color(const StructBialgebra& h, const GradedAction& action) {
    auto sup = support(h, action);
    for (auto& a : sup)
        for (auto& b : sup)
            if (!action.beta.eval(a, b).is_zero()) return false;
    return true;
}

StructBialgebra homogenize(const StructBialgebra& h, const GradedAction& action) {
    const FinAbGroup& g = action.beta.group();
    const long long n = action_conductor(action);
    std::vector<LinearCombo> columns;
    std::vector<Element> degrees;
    for (auto& el : g.elements()) {
        std::vector<LinearCombo> images;
        for (std::size_t x = 0; x < h.dim; ++x) {
            auto v = projector_image(action, el, x, n);
            if (!v.empty()) images.push_back(std::move(v));
        }
        for (auto k : independent_subset(images)) {
            columns.push_back(images[k]);
            degrees.push_back(el);
        }
    }
    if (columns.size() != h.dim) throw Error("homogeneous components do not span the algebra");
    StructBialgebra out = change_basis(h, columns);
    out.grading = ColorGrading{action.beta, degrees};
    return out;
}

std::vector<ExtAutomorphism> expand_ext_action(const MatchedPair& mp, const ExtAction& rho) {
    const FinAbGroup& grp = rho.beta.group();
    if (rho.generators.size() != grp.rank()) throw DimensionMismatch("one extension automorphism per generator of the dual group is required");
    for (std::size_t i = 0; i < rho.generators.size(); ++i) {
        const auto& f = rho.generators[i];
        check_ext_shape(mp, f);
        if (!mp.L.is_automorphism(f.g) || !mp.Gamma.is_automorphism(f.h))
            throw ValidationError("action generator " + std::to_string(i + 1) + " does not induce group automorphisms");
        if (!actions_compatible(mp, f.g, f.h) || !ftilde_conditions(mp, f))
            throw ValidationError("action generator " + std::to_string(i + 1) + " is not an extension automorphism");
        if (!(ext_power(mp, f, grp.orders()[i]) == ext_identity(mp)))
            throw ValidationError("action generator " + std::to_string(i + 1) + " has the wrong order");
        for (std::size_t j = 0; j < i; ++j)
            if (!(compose(mp, f, rho.generators[j]) == compose(mp, rho.generators[j], f))) throw NonCommutingAction();
    }
    std::vector<ExtAutomorphism> out;
    for (auto& chi : grp.characters()) {
        ExtAutomorphism m = ext_identity(mp);
        for (std::size_t i = 0; i < rho.generators.size(); ++i) m = compose(mp, ext_power(mp, rho.generators[i], chi.r[i]), m);
        out.push_back(std::move(m));
    }
    return out;
}

GradedAction graded_action(const MatchedPair& mp, const ExtAction& rho) {
    auto all = expand_ext_action(mp, rho);
    GradedAction act{rho.beta, {}};
    for (auto& f : all) act.maps.push_back(monomial_from_columns(ext_matrix(mp, f)));
    return act;
}

ColorPairReport check_color_matched_pair_def(const MatchedPair& mp, const ExtAction& rho) {
    auto exts = expand_ext_action(mp, rho);
    const FinAbGroup& grp = rho.beta.group();
    const std::size_t na = exts.size();
    const std::size_t nl = mp.L.size(), ng = mp.Gamma.size();
    auto elems = grp.elements();
    std::vector<std::size_t> chi_index;
    for (auto& g : elems) chi_index.push_back(static_cast<std::size_t>(grp.char_index(rho.beta.chi(g))));
    auto chars = grp.characters();

    // stab[l][c][a]: a fixes delta_l e_c up to scalar
    std::vector<std::vector<std::vector<char>>> stab(nl, std::vector<std::vector<char>>(ng, std::vector<char>(na)));
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t c = 0; c < ng; ++c)
            for (std::size_t a = 0; a < na; ++a) stab[l][c][a] = exts[a].g[l] == l && exts[a].h[c] == c;

    ColorPairReport rep;
    rep.cond_i = rep.cond_ii = rep.cond_iii = true;
    for (std::size_t u = 0; u < nl; ++u)
        for (std::size_t e = 0; e < ng; ++e) {
            std::vector<std::size_t> gset;
            for (std::size_t k = 0; k < elems.size(); ++k)
                if (stab[u][e][chi_index[k]]) gset.push_back(k);
            std::vector<char> perp_set(na, 1), restricts(na, 1);
            for (std::size_t a = 0; a < na; ++a)
                for (auto k : gset) {
                    Rational01 v = grp.eval(chars[a], elems[k]);
                    if (!v.is_zero()) perp_set[a] = 0;
                    if (v != exts[chi_index[k]].ftilde[e][u]) restricts[a] = 0;
                }
            for (std::size_t l = 0; l < nl; ++l)
                for (std::size_t c = 0; c < ng; ++c) {
                    bool nonempty = false;
                    for (std::size_t a = 0; a < na; ++a) {
                        if (perp_set[a] && !stab[l][c][a]) rep.cond_i = false;
                        if (restricts[a] && stab[l][c][a]) {
                            nonempty = true;
                            if (!exts[a].ftilde[c][l].is_zero()) rep.cond_iii = false;
                        }
                    }
                    if (!nonempty) rep.cond_ii = false;
                }
        }
    rep.color_pair = rep.cond_i && rep.cond_ii && rep.cond_iii;
    auto H = build_bicrossed(mp, trivial_sigma(mp), trivial_tau(mp)).algebra;
    auto act = graded_action(mp, rho);
    rep.support = support(H, act);
    rep.is_color = true;
    for (auto& a : rep.support)
        for (auto& b : rep.support)
            if (!rho.beta.eval(a, b).is_zero()) rep.is_color = false;
    rep.direct_color = color_hopf(homogenize(H, act));
    rep.agrees = rep.color_pair == rep.is_color && rep.is_color == rep.direct_color;
    return rep;
}

namespace {

void check_z_shape(const MatchedPair& mp, const FinAbGroup& g, const ZTable& z) {
    if (z.size() != mp.L.size()) throw DimensionMismatch("z must have |L| rows");
    for (auto& row : z) {
        if (row.size() != mp.Gamma.size()) throw DimensionMismatch("z must have |Gamma| columns");
        for (auto& e : row)
            if (e.r.size() != g.rank()) throw DimensionMismatch("z entry has the wrong number of coordinates");
    }
}

}  // namespace

bool validate_z(const MatchedPair& mp, const FinAbGroup& g, const ZTable& z) {
    mp.check_shape();
    check_z_shape(mp, g, z);
    const auto& L = mp.L;
    const auto& G = mp.Gamma;
    for (std::size_t l = 0; l < L.size(); ++l)
        for (std::size_t c = 0; c < G.size(); ++c)
            for (std::size_t d = 0; d < G.size(); ++d)
                if (g.make(z[l][G.mul(c, d)].r) != g.mul(z[l][c], z[mp.lact[l][c]][d])) return false;
    for (std::size_t l = 0; l < L.size(); ++l)
        for (std::size_t t = 0; t < L.size(); ++t)
            for (std::size_t c = 0; c < G.size(); ++c)
                if (g.make(z[L.mul(l, t)][c].r) != g.mul(z[l][mp.ract[t][c]], z[t][c])) return false;
    return true;
}

bool braided_compat(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau, const ZTable& z,
                    const Bicharacter& beta) {
    check_shape(mp, sigma, tau);
    if (!validate_z(mp, beta.group(), z)) return false;
    const auto& L = mp.L;
    const auto& G = mp.Gamma;
    std::atomic<bool> ok{true};
    parallel_for(L.size(), [&](std::size_t l) {
        for (std::size_t t = 0; t < L.size() && ok; ++t)
            for (std::size_t c = 0; c < G.size(); ++c)
                for (std::size_t d = 0; d < G.size(); ++d) {
                    std::size_t tc = mp.ract[t][c];
                    std::size_t tlc = mp.lact[t][c];
                    std::size_t l2 = mp.lact[l][tc];
                    std::size_t d2 = mp.ract[tlc][d];
                    Rational01 lhs = sigma[L.mul(l, t)][c][d] + tau[G.mul(c, d)][l][t];
                    Rational01 rhs = beta.eval(z[t][c], z[l2][d2]) + tau[c][l][t] + tau[d][l2][tlc] + sigma[l][tc][d2] + sigma[t][c][d];
                    if (lhs != rhs) {
                        ok = false;
                        return;
                    }
                }
    });
    return ok;
}

StructBialgebra graded_bicrossed(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau, const ZTable& z,
                                 const Bicharacter& beta) {
    check_z_shape(mp, beta.group(), z);
    StructBialgebra h = build_bicrossed(mp, sigma, tau).algebra;
    std::vector<Element> deg(h.dim);
    for (std::size_t l = 0; l < mp.L.size(); ++l)
        for (std::size_t c = 0; c < mp.Gamma.size(); ++c) deg[mp.index(l, c)] = beta.group().make(z[l][c].r);
    h.grading = ColorGrading{beta, deg};
    h.unify_conductor();
    return h;
}

bool color_hopf(const StructBialgebra& graded) {
    if (!check_axioms(graded, Mode::color).all_pass()) return false;
    return solve_antipode(graded, Mode::color).ok();
}

Thm317Report thm317_check(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau, const ZTable& z,
                          const Bicharacter& beta, bool cross_check) {
    check_shape(mp, sigma, tau);
    if (!mp.ract_trivial()) throw RactNotTrivial();
    const FinAbGroup& grp = beta.group();
    check_z_shape(mp, grp, z);
    const auto& L = mp.L;
    const auto& G = mp.Gamma;
    Thm317Report rep;

    rep.z_cocycle = true;
    for (std::size_t c = 0; c < G.size() && rep.z_cocycle; ++c)
        for (std::size_t l = 0; l < L.size(); ++l)
            for (std::size_t t = 0; t < L.size(); ++t)
                if (grp.make(z[L.mul(l, t)][c].r) != grp.mul(z[l][c], z[t][c])) rep.z_cocycle = false;
    for (std::size_t c = 0; c < G.size() && rep.z_cocycle; ++c)
        for (std::size_t d = 0; d < G.size(); ++d)
            for (std::size_t l = 0; l < L.size(); ++l)
                if (grp.make(z[l][G.mul(c, d)].r) != grp.mul(z[l][c], z[mp.lact[l][c]][d])) rep.z_cocycle = false;

    rep.compatibility = true;
    for (std::size_t l = 0; l < L.size() && rep.compatibility; ++l)
        for (std::size_t t = 0; t < L.size(); ++t)
            for (std::size_t c = 0; c < G.size(); ++c)
                for (std::size_t d = 0; d < G.size(); ++d)
                    if (sigma[L.mul(l, t)][c][d] != beta.eval(z[t][c], z[mp.lact[l][c]][d]) + sigma[l][c][d] + sigma[t][c][d])
                        rep.compatibility = false;

    bool sigma_ok = sigma_is_cocycle(mp, sigma) && cocycles_normalized(mp, sigma, trivial_tau(mp));

    rep.tau_cocycle = true;
    for (std::size_t c = 0; c < G.size() && rep.tau_cocycle; ++c) {
        for (std::size_t a = 0; a < L.size(); ++a) {
            if (!tau[c][L.identity()][a].is_zero() || !tau[c][a][L.identity()].is_zero()) rep.tau_cocycle = false;
            for (std::size_t b = 0; b < L.size(); ++b)
                for (std::size_t e = 0; e < L.size(); ++e)
                    if (tau[c][a][b] + tau[c][L.mul(a, b)][e] != tau[c][b][e] + tau[c][a][L.mul(b, e)]) rep.tau_cocycle = false;
        }
        for (std::size_t d = 0; d < G.size(); ++d)
            for (std::size_t l = 0; l < L.size(); ++l)
                for (std::size_t t = 0; t < L.size(); ++t)
                    if (tau[G.mul(c, d)][l][t] != tau[c][l][t] + tau[d][mp.lact[l][c]][mp.lact[t][c]]) rep.tau_cocycle = false;
    }
    rep.holds = rep.z_cocycle && rep.compatibility && sigma_ok && rep.tau_cocycle;

    if (cross_check) {
        rep.checked_hopf = true;
        rep.color_hopf = color_hopf(graded_bicrossed(mp, sigma, tau, z, beta));
        if (rep.z_cocycle && rep.compatibility && sigma_ok) rep.agrees = rep.tau_cocycle == rep.color_hopf;
    }
    return rep;
}

}  // namespace chroma
