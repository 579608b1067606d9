#include "chroma/hopf.hpp"

#include "chroma/errors.hpp"
#include "chroma/parallel.hpp"

#include <mutex>

namespace chroma {

LinearCombo StructBialgebra::multiply(const LinearCombo& x, const LinearCombo& y) const {
    ComboBuilder b;
    for (auto& s : x)
        for (auto& t : y) b.add(mult[s.index * dim + t.index], s.coeff * t.coeff);
    return b.take();
}

LinearCombo StructBialgebra::coproduct(const LinearCombo& x) const {
    ComboBuilder b;
    for (auto& s : x) b.add(comult[s.index], s.coeff);
    return b.take();
}

Cyclotomic StructBialgebra::epsilon(const LinearCombo& x) const {
    Cyclotomic r;
    for (auto& s : x) r += s.coeff * counit[s.index];
    return r;
}

Rational01 StructBialgebra::braid(std::size_t a, std::size_t b) const {
    if (!grading) return Rational01();
    return grading->beta.eval(grading->degrees[a], grading->degrees[b]);
}

long long StructBialgebra::conductor() const {
    long long n = 1;
    auto visit = [&](const LinearCombo& v) {
        for (auto& t : v) n = lcm_ll(n, t.coeff.conductor());
    };
    for (auto& v : mult) visit(v);
    for (auto& v : comult) visit(v);
    visit(unit);
    for (auto& c : counit) n = lcm_ll(n, c.conductor());
    if (antipode)
        for (auto& v : *antipode) visit(v);
    if (grading)
        for (auto& row : grading->beta.matrix())
            for (auto& r : row) n = lcm_ll(n, r.den());
    return n;
}

void StructBialgebra::unify_conductor() {
    long long n = conductor();
    auto lift = [n](LinearCombo& v) {
        for (auto& t : v) t.coeff = t.coeff.lifted(n);
    };
    for (auto& v : mult) lift(v);
    for (auto& v : comult) lift(v);
    lift(unit);
    for (auto& c : counit) c = c.lifted(n);
    if (antipode)
        for (auto& v : *antipode) lift(v);
}

void StructBialgebra::validate_shape() const {
    if (mult.size() != dim * dim) throw DimensionMismatch("multiplication table has the wrong size");
    if (comult.size() != dim) throw DimensionMismatch("comultiplication table has the wrong size");
    if (counit.size() != dim) throw DimensionMismatch("counit has the wrong size");
    auto check = [&](const LinearCombo& v, std::size_t bound) {
        for (auto& t : v)
            if (t.index >= bound) throw DimensionMismatch("basis index out of range");
    };
    for (auto& v : mult) check(v, dim);
    for (auto& v : comult) check(v, dim * dim);
    check(unit, dim);
    if (antipode) {
        if (antipode->size() != dim) throw DimensionMismatch("antipode has the wrong size");
        for (auto& v : *antipode) check(v, dim);
    }
    if (grading && grading->degrees.size() != dim) throw DimensionMismatch("grading has the wrong size");
}

bool AxiomReport::all_pass() const {
    for (auto& r : results)
        if (!r.pass) return false;
    return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
    for (auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

// Runs test(i) for i in [0, n) in parallel; returns the failure with the lowest i.
AxiomResult first_failure(const std::string& name, std::size_t n,
                          const std::function<std::optional<std::vector<std::size_t>>(std::size_t)>& test) {
    std::vector<std::optional<std::vector<std::size_t>>> found(n);
    parallel_for(n, [&](std::size_t i) { found[i] = test(i); });
    AxiomResult r{name, true, {}};
    for (auto& f : found)
        if (f) {
            r.pass = false;
            r.counterexample = *f;
            break;
        }
    return r;
}

// Product in H (x) H, twisted by beta(|b|,|c|) in color mode: (a(x)b)(c(x)d).
LinearCombo tensor_multiply(const StructBialgebra& h, const LinearCombo& x, const LinearCombo& y, bool twisted, long long n) {
    ComboBuilder out;
    std::size_t d = h.dim;
    for (auto& s : x) {
        std::size_t a = s.index / d, b = s.index % d;
        for (auto& t : y) {
            std::size_t c = t.index / d, e = t.index % d;
            Cyclotomic coef = s.coeff * t.coeff;
            if (twisted) {
                Rational01 r = h.braid(b, c);
                if (!r.is_zero()) coef *= Cyclotomic::embed(r, n);
            }
            const LinearCombo& ac = h.mult[a * d + c];
            const LinearCombo& be = h.mult[b * d + e];
            for (auto& p : ac)
                for (auto& q : be) out.add(p.index * d + q.index, coef * p.coeff * q.coeff);
        }
    }
    return out.take();
}

LinearCombo scaled(const LinearCombo& v, const Cyclotomic& c) {
    LinearCombo out;
    for (auto& t : v) {
        Cyclotomic x = t.coeff * c;
        if (!x.is_zero()) out.push_back(Term{t.index, x});
    }
    return out;
}

long long working_conductor(const StructBialgebra& h) { return h.conductor(); }

}  // namespace

AxiomReport check_axioms(const StructBialgebra& h, Mode mode) {
    h.validate_shape();
    bool color = mode == Mode::color;
    if (color && !h.grading) throw DomainError("color mode needs a grading and a bicharacter");
    const std::size_t d = h.dim;
    const long long n = working_conductor(h);
    AxiomReport rep;

    rep.results.push_back(first_failure("associativity", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        LinearCombo ei = basis_vector(i);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                LinearCombo left = h.multiply(h.mult[i * d + j], basis_vector(k));
                LinearCombo right = h.multiply(ei, h.mult[j * d + k]);
                if (!combo_equal(left, right)) return std::vector<std::size_t>{i, j, k};
            }
        return std::nullopt;
    }));

    rep.results.push_back(first_failure("unit", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        LinearCombo ei = basis_vector(i);
        if (!combo_equal(h.multiply(h.unit, ei), ei) || !combo_equal(h.multiply(ei, h.unit), ei)) return std::vector<std::size_t>{i};
        return std::nullopt;
    }));

    rep.results.push_back(first_failure("coassociativity", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        ComboBuilder left, right;
        for (auto& t : h.comult[i]) {
            std::size_t a = t.index / d, b = t.index % d;
            for (auto& s : h.comult[a]) left.add(s.index * d + b, s.coeff * t.coeff);
            for (auto& s : h.comult[b]) right.add(a * d * d + s.index, s.coeff * t.coeff);
        }
        if (!combo_equal(left.take(), right.take())) return std::vector<std::size_t>{i};
        return std::nullopt;
    }));

    rep.results.push_back(first_failure("counit", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        ComboBuilder left, right;
        for (auto& t : h.comult[i]) {
            std::size_t a = t.index / d, b = t.index % d;
            left.add(b, h.counit[a] * t.coeff);
            right.add(a, h.counit[b] * t.coeff);
        }
        LinearCombo ei = basis_vector(i);
        if (!combo_equal(left.take(), ei) || !combo_equal(right.take(), ei)) return std::vector<std::size_t>{i};
        return std::nullopt;
    }));

    rep.results.push_back(first_failure("comultiplication_multiplicative", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        for (std::size_t j = 0; j < d; ++j) {
            LinearCombo left = h.coproduct(h.mult[i * d + j]);
            LinearCombo right = tensor_multiply(h, h.comult[i], h.comult[j], color, n);
            if (!combo_equal(left, right)) return std::vector<std::size_t>{i, j};
        }
        return std::nullopt;
    }));

    rep.results.push_back(first_failure("counit_multiplicative", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        for (std::size_t j = 0; j < d; ++j)
            if (!(h.epsilon(h.mult[i * d + j]) == h.counit[i] * h.counit[j])) return std::vector<std::size_t>{i, j};
        return std::nullopt;
    }));

    {
        AxiomResult r{"unit_grouplike", true, {}};
        LinearCombo du = h.coproduct(h.unit);
        ComboBuilder uu;
        for (auto& s : h.unit)
            for (auto& t : h.unit) uu.add(s.index * d + t.index, s.coeff * t.coeff);
        if (!combo_equal(du, uu.take()) || !h.epsilon(h.unit).is_one()) r.pass = false;
        rep.results.push_back(r);
    }

    if (color) {
        const FinAbGroup& g = h.grading->beta.group();
        const auto& deg = h.grading->degrees;
        rep.results.push_back(first_failure("grading", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
            for (std::size_t j = 0; j < d; ++j)
                for (auto& t : h.mult[i * d + j])
                    if (deg[t.index] != g.mul(deg[i], deg[j])) return std::vector<std::size_t>{i, j};
            for (auto& t : h.comult[i])
                if (g.mul(deg[t.index / d], deg[t.index % d]) != deg[i]) return std::vector<std::size_t>{i};
            if (!h.counit[i].is_zero() && !g.is_identity(deg[i])) return std::vector<std::size_t>{i};
            for (auto& t : h.unit)
                if (t.index == i && !g.is_identity(deg[i])) return std::vector<std::size_t>{i};
            return std::nullopt;
        }));
    }
    return rep;
}

namespace {

// Solves sum S(x1) x2 = eps(x) 1 (left) or sum x1 S(x2) = eps(x) 1 (right).
std::optional<std::vector<LinearCombo>> solve_side(const StructBialgebra& h, bool left) {
    const std::size_t d = h.dim;
    SparseSystem sys(d * d);  // unknown s_{ij} (coefficient of e_i in S(e_j)) at j * d + i
    for (std::size_t x = 0; x < d; ++x) {
        std::map<std::size_t, ComboBuilder> eqs;
        for (auto& t : h.comult[x]) {
            std::size_t a = t.index / d, b = t.index % d;
            std::size_t unknown_col = left ? a : b;
            for (std::size_t i = 0; i < d; ++i) {
                const LinearCombo& prod = left ? h.mult[i * d + b] : h.mult[a * d + i];
                for (auto& p : prod) eqs[p.index].add(unknown_col * d + i, t.coeff * p.coeff);
            }
        }
        std::map<std::size_t, Cyclotomic> rhs;
        for (auto& u : h.unit) rhs[u.index] = h.counit[x] * u.coeff;
        for (auto& [m, b] : eqs) {
            auto it = rhs.find(m);
            Cyclotomic r = it == rhs.end() ? Cyclotomic() : it->second;
            if (!sys.add_equation(b.take(), r)) return std::nullopt;
        }
        for (auto& [m, r] : rhs)
            if (!eqs.count(m) && !r.is_zero()) return std::nullopt;
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    std::vector<LinearCombo> s(d);
    for (std::size_t j = 0; j < d; ++j) {
        ComboBuilder b;
        for (std::size_t i = 0; i < d; ++i) b.add(i, (*sol)[j * d + i]);
        s[j] = b.take();
    }
    return s;
}

}  // namespace

bool is_antipode(const StructBialgebra& h, const std::vector<LinearCombo>& s) {
    const std::size_t d = h.dim;
    if (s.size() != d) return false;
    for (std::size_t x = 0; x < d; ++x) {
        ComboBuilder left, right;
        for (auto& t : h.comult[x]) {
            std::size_t a = t.index / d, b = t.index % d;
            left.add(h.multiply(s[a], basis_vector(b)), t.coeff);
            right.add(h.multiply(basis_vector(a), s[b]), t.coeff);
        }
        LinearCombo target = scaled(h.unit, h.counit[x]);
        if (!combo_equal(left.take(), target) || !combo_equal(right.take(), target)) return false;
    }
    return true;
}

AntipodeReport solve_antipode(const StructBialgebra& h, Mode mode) {
    h.validate_shape();
    bool color = mode == Mode::color;
    if (color && !h.grading) throw DomainError("color mode needs a grading and a bicharacter");
    const std::size_t d = h.dim;
    const long long n = h.conductor();
    AntipodeReport rep;
    auto left = solve_side(h, true);
    auto right = solve_side(h, false);
    if (!left || !right) return rep;
    rep.exists = true;
    rep.antipode = *left;
    rep.sides_agree = true;
    for (std::size_t j = 0; j < d; ++j)
        if (!combo_equal((*left)[j], (*right)[j])) rep.sides_agree = false;
    const auto& s = rep.antipode;
    auto twist = [&](std::size_t a, std::size_t b) {
        Rational01 r = color ? h.braid(a, b) : Rational01();
        return r.is_zero() ? Cyclotomic::one(n) : Cyclotomic::embed(r, n);
    };
    rep.antimultiplicative = true;
    for (std::size_t i = 0; i < d && rep.antimultiplicative; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            LinearCombo lhs = apply_columns(s, h.mult[i * d + j]);
            LinearCombo rhs = scaled(h.multiply(s[j], s[i]), twist(i, j));
            if (!combo_equal(lhs, rhs)) {
                rep.antimultiplicative = false;
                rep.counterexample = {i, j};
                break;
            }
        }
    rep.anticomultiplicative = true;
    for (std::size_t i = 0; i < d; ++i) {
        LinearCombo lhs = h.coproduct(s[i]);
        ComboBuilder rhs;
        for (auto& t : h.comult[i]) {
            std::size_t a = t.index / d, b = t.index % d;
            Cyclotomic c = t.coeff * twist(a, b);
            for (auto& p : s[b])
                for (auto& q : s[a]) rhs.add(p.index * d + q.index, c * p.coeff * q.coeff);
        }
        if (!combo_equal(lhs, rhs.take())) {
            rep.anticomultiplicative = false;
            if (rep.counterexample.empty()) rep.counterexample = {i};
            break;
        }
    }
    rep.bijective = rank_of(s) == d;
    return rep;
}

bool check_flip(const StructBialgebra& h, std::vector<std::size_t>* counterexample) {
    if (!h.grading) throw DomainError("flip check needs a grading and a bicharacter");
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = 0; j < h.dim; ++j)
            if (!h.braid(i, j).is_zero()) {
                if (counterexample) *counterexample = {i, j};
                return false;
            }
    return true;
}

StructBialgebra bosonize(const StructBialgebra& h) {
    if (!h.grading) throw DomainError("bosonization needs a grading and a bicharacter");
    h.validate_shape();
    const FinAbGroup& g = h.grading->beta.group();
    const auto& deg = h.grading->degrees;
    const std::size_t d = h.dim;
    const std::size_t m = static_cast<std::size_t>(g.size());
    const long long n = h.conductor();
    auto root = [n](const Rational01& r) { return r.is_zero() ? Cyclotomic::one(n) : Cyclotomic::embed(r, n); };
    auto elems = g.elements();
    StructBialgebra out;
    out.dim = d * m;
    out.mult.resize(out.dim * out.dim);
    // (x # g)(y # k) = beta(g, |y|) xy # gk
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t gi = 0; gi < m; ++gi)
            for (std::size_t y = 0; y < d; ++y)
                for (std::size_t ki = 0; ki < m; ++ki) {
                    Cyclotomic c = root(h.grading->beta.eval(elems[gi], deg[y]));
                    std::size_t gk = static_cast<std::size_t>(g.index(g.mul(elems[gi], elems[ki])));
                    LinearCombo v;
                    for (auto& t : h.mult[x * d + y]) v.push_back(Term{t.index * m + gk, t.coeff * c});
                    out.mult[(x * m + gi) * out.dim + (y * m + ki)] = std::move(v);
                }
    // Delta(c # g) = sum c1 # |c2| g (x) c2 # g
    out.comult.resize(out.dim);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t gi = 0; gi < m; ++gi) {
            ComboBuilder b;
            for (auto& t : h.comult[x]) {
                std::size_t a = t.index / d, c = t.index % d;
                std::size_t shifted = static_cast<std::size_t>(g.index(g.mul(deg[c], elems[gi])));
                b.add((a * m + shifted) * out.dim + (c * m + gi), t.coeff);
            }
            out.comult[x * m + gi] = b.take();
        }
    std::size_t e = static_cast<std::size_t>(g.index(g.identity()));
    for (auto& t : h.unit) out.unit.push_back(Term{t.index * m + e, t.coeff});
    out.counit.resize(out.dim);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t gi = 0; gi < m; ++gi) out.counit[x * m + gi] = h.counit[x];
    return out;
}

std::vector<LinearCombo> bosonization_antipode(const StructBialgebra& h, const std::vector<LinearCombo>& s) {
    if (!h.grading) throw DomainError("bosonization needs a grading and a bicharacter");
    const FinAbGroup& g = h.grading->beta.group();
    const auto& deg = h.grading->degrees;
    const std::size_t d = h.dim;
    const std::size_t m = static_cast<std::size_t>(g.size());
    const long long n = h.conductor();
    auto elems = g.elements();
    std::vector<LinearCombo> out(d * m);
    // S(x # g) = beta(g^-1 |x|^-1, |x|) S(x) # g^-1 |x|^-1
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t gi = 0; gi < m; ++gi) {
            Element k = g.inv(g.mul(elems[gi], deg[x]));
            Rational01 r = h.grading->beta.eval(k, deg[x]);
            Cyclotomic c = r.is_zero() ? Cyclotomic::one(n) : Cyclotomic::embed(r, n);
            std::size_t ki = static_cast<std::size_t>(g.index(k));
            LinearCombo v;
            for (auto& t : s[x]) v.push_back(Term{t.index * m + ki, t.coeff * c});
            out[x * m + gi] = std::move(v);
        }
    return out;
}

AxiomReport check_morphism(const StructBialgebra& src, const StructBialgebra& dst, const std::vector<LinearCombo>& f) {
    if (f.size() != src.dim) throw DimensionMismatch("morphism must give an image for every basis vector");
    const std::size_t d = src.dim, e = dst.dim;
    AxiomReport rep;
    rep.results.push_back(first_failure("multiplicative", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        for (std::size_t j = 0; j < d; ++j)
            if (!combo_equal(apply_columns(f, src.mult[i * d + j]), dst.multiply(f[i], f[j]))) return std::vector<std::size_t>{i, j};
        return std::nullopt;
    }));
    rep.results.push_back(first_failure("comultiplicative", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        ComboBuilder ff;
        for (auto& t : src.comult[i]) {
            std::size_t a = t.index / d, b = t.index % d;
            for (auto& p : f[a])
                for (auto& q : f[b]) ff.add(p.index * e + q.index, t.coeff * p.coeff * q.coeff);
        }
        if (!combo_equal(dst.coproduct(f[i]), ff.take())) return std::vector<std::size_t>{i};
        return std::nullopt;
    }));
    {
        AxiomResult r{"unital", combo_equal(apply_columns(f, src.unit), dst.unit), {}};
        rep.results.push_back(r);
    }
    rep.results.push_back(first_failure("counital", d, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
        if (!(dst.epsilon(f[i]) == src.counit[i])) return std::vector<std::size_t>{i};
        return std::nullopt;
    }));
    {
        AxiomResult r{"bijective", rank_of(f) == e && d == e, {}};
        rep.results.push_back(r);
    }
    return rep;
}

StructBialgebra change_basis(const StructBialgebra& h, const std::vector<LinearCombo>& columns) {
    const std::size_t d = h.dim;
    auto inv = inverse_columns(columns, d);
    if (!inv) throw DomainError("change of basis matrix is singular");
    StructBialgebra out;
    out.dim = d;
    out.mult.resize(d * d);
    parallel_for(d, [&](std::size_t i) {
        for (std::size_t j = 0; j < d; ++j) out.mult[i * d + j] = apply_columns(*inv, h.multiply(columns[i], columns[j]));
    });
    out.comult.resize(d);
    parallel_for(d, [&](std::size_t i) {
        ComboBuilder b;
        for (auto& t : h.coproduct(columns[i])) {
            std::size_t a = t.index / d, c = t.index % d;
            for (auto& p : (*inv)[a])
                for (auto& q : (*inv)[c]) b.add(p.index * d + q.index, t.coeff * p.coeff * q.coeff);
        }
        out.comult[i] = b.take();
    });
    out.unit = apply_columns(*inv, h.unit);
    out.counit.resize(d);
    for (std::size_t i = 0; i < d; ++i) out.counit[i] = h.epsilon(columns[i]);
    if (h.antipode) {
        std::vector<LinearCombo> s(d);
        for (std::size_t i = 0; i < d; ++i) s[i] = apply_columns(*inv, apply_columns(*h.antipode, columns[i]));
        out.antipode = std::move(s);
    }
    return out;
}

}  // namespace chroma
