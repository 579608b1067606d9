#include "chroma_cli/json_io.hpp"

#include "chroma/errors.hpp"

namespace chroma::cli {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t index_of(const json& j, std::size_t bound, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<std::size_t>() >= bound)
        throw ValidationError(std::string(what) + " index out of range");
    return j.get<std::size_t>();
}

std::vector<std::vector<std::size_t>> index_table(const json& j, std::size_t rows, std::size_t cols, std::size_t bound,
                                                  const char* what) {
    if (!j.is_array() || j.size() != rows) throw DimensionMismatch(std::string(what) + " table has the wrong number of rows");
    std::vector<std::vector<std::size_t>> t(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw DimensionMismatch(std::string(what) + " table has the wrong number of columns");
        for (std::size_t k = 0; k < cols; ++k) t[i].push_back(index_of(j[i][k], bound, what));
    }
    return t;
}

std::vector<std::vector<Rational01>> rational_matrix(const json& j, std::size_t rows, std::size_t cols, const char* what) {
    if (!j.is_array() || j.size() != rows) throw DimensionMismatch(std::string(what) + " has the wrong number of rows");
    std::vector<std::vector<Rational01>> t(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw DimensionMismatch(std::string(what) + " has the wrong number of columns");
        for (auto& x : j[i]) t[i].push_back(Rational01::parse(x.get<std::string>()));
    }
    return t;
}

Cyclotomic coeff_from_json(const json& j) {
    if (j.is_number_integer()) return Cyclotomic(Rational(j.get<long long>()), 1);
    return Cyclotomic::parse(j.get<std::string>());
}

LinearCombo combo_from_terms(const json& terms, std::size_t bound) {
    ComboBuilder b;
    for (auto& t : terms) {
        if (!t.is_array() || t.size() != 2) throw ValidationError("expected [index, coefficient]");
        b.add(index_of(t[0], bound, "basis"), coeff_from_json(t[1]));
    }
    return b.take();
}

}  // namespace

Scalar parse_scalar(const std::string& text) { return Scalar::parse(text); }

json group_to_json(const FinAbGroup& g) { return json{{"orders", g.orders()}}; }

FinAbGroup group_from_json(const json& j) {
    auto orders = need(j, "orders").get<std::vector<long long>>();
    for (auto o : orders)
        if (o < 1) throw ValidationError("group orders must be positive");
    return FinAbGroup(orders);
}

json element_to_json(const Element& e) { return e.r; }

Element element_from_json(const FinAbGroup& g, const json& j) {
    auto r = j.get<std::vector<long long>>();
    if (r.size() != g.rank()) throw DimensionMismatch("element has the wrong number of coordinates");
    return g.make(r);
}

json bicharacter_to_json(const Bicharacter& b) {
    json m = json::array();
    for (auto& row : b.matrix()) {
        json r = json::array();
        for (auto& x : row) r.push_back(x.to_string());
        m.push_back(r);
    }
    return m;
}

Bicharacter bicharacter_from_json(const FinAbGroup& g, const json& j) {
    return Bicharacter(g, rational_matrix(j, g.rank(), g.rank(), "bicharacter"));
}

json matrix_to_json(const BraidingMatrix& q) {
    json m = json::array();
    for (auto& row : q) {
        json r = json::array();
        for (auto& x : row) r.push_back(x.to_string());
        m.push_back(r);
    }
    return m;
}

BraidingMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("matrix must be an array of rows");
    BraidingMatrix q;
    for (auto& row : j) {
        if (!row.is_array()) throw ValidationError("matrix must be an array of rows");
        std::vector<Scalar> r;
        for (auto& x : row) r.push_back(parse_scalar(x.get<std::string>()));
        q.push_back(std::move(r));
    }
    check_square(q);
    return q;
}

json datum_to_json(const Datum& e) {
    json t = json::array();
    for (auto& x : e.t()) t.push_back(element_to_json(x));
    return json{{"q", matrix_to_json(e.q())}, {"group", group_to_json(e.group())}, {"beta", bicharacter_to_json(e.beta())}, {"t", t}};
}

Datum datum_from_json(const json& j) {
    FinAbGroup g = group_from_json(need(j, "group"));
    Bicharacter beta = bicharacter_from_json(g, need(j, "beta"));
    std::vector<Element> t;
    for (auto& x : need(j, "t")) t.push_back(element_from_json(g, x));
    if (j.contains("qt")) return datum_from_twisted(matrix_from_json(j.at("qt")), beta, t);
    return Datum(matrix_from_json(need(j, "q")), beta, t);
}

json diagram_to_json(const Diagram& d) {
    bool colored = d.kind == Diagram::Kind::colored;
    json out{{"kind", colored ? "colored" : "generalized"}};
    if (colored) out["group"] = group_to_json(d.group);
    json vs = json::array();
    for (auto& v : d.vertices) {
        json x{{"label", v.label.to_string()}};
        if (v.degree) x["degree"] = element_to_json(*v.degree);
        vs.push_back(x);
    }
    json es = json::array();
    for (auto& e : d.edges) es.push_back(json{{"i", e.i}, {"j", e.j}, {"label", e.label ? json(e.label->to_string()) : json(nullptr)}});
    out["vertices"] = vs;
    out["edges"] = es;
    return out;
}

Diagram diagram_from_json(const json& j) {
    Diagram d;
    std::string kind = need(j, "kind").get<std::string>();
    if (kind != "colored" && kind != "generalized") throw ValidationError("unknown diagram kind " + kind);
    d.kind = kind == "colored" ? Diagram::Kind::colored : Diagram::Kind::generalized;
    if (d.kind == Diagram::Kind::colored) d.group = group_from_json(need(j, "group"));
    for (auto& v : need(j, "vertices")) {
        DiagramVertex x{parse_scalar(need(v, "label").get<std::string>()), std::nullopt};
        if (v.contains("degree")) x.degree = element_from_json(d.group, v.at("degree"));
        d.vertices.push_back(std::move(x));
    }
    for (auto& e : need(j, "edges")) {
        DiagramEdge x{index_of(need(e, "i"), d.vertices.size(), "vertex"), index_of(need(e, "j"), d.vertices.size(), "vertex"), std::nullopt};
        if (e.contains("label") && !e.at("label").is_null()) x.label = parse_scalar(e.at("label").get<std::string>());
        d.edges.push_back(std::move(x));
    }
    return d;
}

json combo_to_json(const LinearCombo& v) {
    json out = json::array();
    for (auto& t : v) out.push_back(json::array({t.index, t.coeff.to_string()}));
    return out;
}

json bialgebra_to_json(const StructBialgebra& h) {
    const std::size_t d = h.dim;
    json mult = json::array(), comult = json::array(), unit = json::array(), counit = json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (auto& t : h.mult[i * d + k]) mult.push_back(json::array({i, k, t.index, t.coeff.to_string()}));
    for (std::size_t i = 0; i < d; ++i)
        for (auto& t : h.comult[i]) comult.push_back(json::array({i, t.index / d, t.index % d, t.coeff.to_string()}));
    for (auto& t : h.unit) unit.push_back(json::array({t.index, t.coeff.to_string()}));
    for (std::size_t i = 0; i < d; ++i)
        if (!h.counit[i].is_zero()) counit.push_back(json::array({i, h.counit[i].to_string()}));
    json out{{"dim", d}, {"mult", mult}, {"comult", comult}, {"unit", unit}, {"counit", counit}};
    if (h.antipode) {
        json s = json::array();
        for (std::size_t k = 0; k < d; ++k)
            for (auto& t : (*h.antipode)[k]) s.push_back(json::array({k, t.index, t.coeff.to_string()}));
        out["antipode"] = s;
    }
    if (h.grading) {
        json deg = json::array();
        for (auto& x : h.grading->degrees) deg.push_back(element_to_json(x));
        out["grading"] = json{{"group", group_to_json(h.grading->beta.group())}, {"beta", bicharacter_to_json(h.grading->beta)}, {"degrees", deg}};
    }
    return out;
}

StructBialgebra bialgebra_from_json(const json& j) {
    StructBialgebra h;
    h.dim = need(j, "dim").get<std::size_t>();
    if (h.dim == 0) throw ValidationError("dimension must be positive");
    const std::size_t d = h.dim;
    std::vector<ComboBuilder> mult(d * d), comult(d);
    for (auto& e : need(j, "mult")) {
        if (!e.is_array() || e.size() != 4) throw ValidationError("mult entries are [i, j, k, coefficient]");
        std::size_t a = index_of(e[0], d, "basis"), b = index_of(e[1], d, "basis"), c = index_of(e[2], d, "basis");
        mult[a * d + b].add(c, coeff_from_json(e[3]));
    }
    for (auto& e : need(j, "comult")) {
        if (!e.is_array() || e.size() != 4) throw ValidationError("comult entries are [i, j, k, coefficient]");
        std::size_t a = index_of(e[0], d, "basis"), b = index_of(e[1], d, "basis"), c = index_of(e[2], d, "basis");
        comult[a].add(b * d + c, coeff_from_json(e[3]));
    }
    for (auto& b : mult) h.mult.push_back(b.take());
    for (auto& b : comult) h.comult.push_back(b.take());
    h.unit = combo_from_terms(need(j, "unit"), d);
    h.counit.assign(d, Cyclotomic());
    for (auto& e : need(j, "counit")) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("counit entries are [i, coefficient]");
        h.counit[index_of(e[0], d, "basis")] += coeff_from_json(e[1]);
    }
    if (j.contains("antipode")) {
        std::vector<ComboBuilder> s(d);
        for (auto& e : j.at("antipode")) {
            if (!e.is_array() || e.size() != 3) throw ValidationError("antipode entries are [j, i, coefficient]");
            s[index_of(e[0], d, "basis")].add(index_of(e[1], d, "basis"), coeff_from_json(e[2]));
        }
        std::vector<LinearCombo> cols;
        for (auto& b : s) cols.push_back(b.take());
        h.antipode = std::move(cols);
    }
    if (j.contains("grading")) {
        const json& g = j.at("grading");
        FinAbGroup grp = group_from_json(need(g, "group"));
        ColorGrading cg{bicharacter_from_json(grp, need(g, "beta")), {}};
        for (auto& x : need(g, "degrees")) cg.degrees.push_back(element_from_json(grp, x));
        h.grading = std::move(cg);
    }
    h.validate_shape();
    return h;
}

FiniteGroup finite_group_from_json(const json& j) {
    if (j.contains("cyclic")) return FiniteGroup::cyclic(j.at("cyclic").get<std::size_t>());
    if (j.contains("abelian")) return FiniteGroup::from_abelian(FinAbGroup(j.at("abelian").get<std::vector<long long>>()));
    if (j.contains("table")) return FiniteGroup(j.at("table").get<std::vector<std::vector<std::size_t>>>());
    throw ValidationError("group must be given as {\"cyclic\": n}, {\"abelian\": [...]} or {\"table\": [[...]]}");
}

json finite_group_to_json(const FiniteGroup& g) { return json{{"table", g.table()}}; }

json rational_table(const std::vector<std::vector<Rational01>>& t) {
    json out = json::array();
    for (auto& row : t) {
        json r = json::array();
        for (auto& x : row) r.push_back(x.to_string());
        out.push_back(r);
    }
    return out;
}

json ext_automorphism_to_json(const ExtAutomorphism& f) {
    return json{{"g", f.g}, {"h", f.h}, {"ftilde", rational_table(f.ftilde)}};
}

ExtAutomorphism ext_automorphism_from_json(const MatchedPair& mp, const json& j) {
    ExtAutomorphism f;
    const std::size_t nl = mp.L.size(), ng = mp.Gamma.size();
    for (auto& x : need(j, "g")) f.g.push_back(index_of(x, nl, "L"));
    for (auto& x : need(j, "h")) f.h.push_back(index_of(x, ng, "Gamma"));
    if (f.g.size() != nl || f.h.size() != ng) throw DimensionMismatch("automorphism images have the wrong length");
    if (j.contains("ftilde")) f.ftilde = rational_matrix(j.at("ftilde"), ng, nl, "ftilde");
    else f.ftilde.assign(ng, std::vector<Rational01>(nl));
    return f;
}

namespace {

SigmaTable sigma_from_json(const MatchedPair& mp, const json& j) {
    const std::size_t nl = mp.L.size(), ng = mp.Gamma.size();
    if (!j.is_array() || j.size() != nl) throw DimensionMismatch("sigma must have |L| slices");
    SigmaTable s;
    for (auto& slice : j) s.push_back(rational_matrix(slice, ng, ng, "sigma slice"));
    return s;
}

TauTable tau_from_json(const MatchedPair& mp, const json& j) {
    const std::size_t nl = mp.L.size(), ng = mp.Gamma.size();
    if (!j.is_array() || j.size() != ng) throw DimensionMismatch("tau must have |Gamma| slices");
    TauTable t;
    for (auto& slice : j) t.push_back(rational_matrix(slice, nl, nl, "tau slice"));
    return t;
}

std::vector<Element> elements_from_json(const FinAbGroup& g, const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) throw DimensionMismatch(std::string(what) + " has the wrong length");
    std::vector<Element> out;
    for (auto& x : j) out.push_back(element_from_json(g, x));
    return out;
}

}  // namespace

ExtensionInput extension_from_json(const json& j) {
    if (j.contains("sommer")) return extension_from_json(j.at("sommer"));
    ExtensionInput in;
    if (j.contains("ring")) {
        const json& r = j.at("ring");
        SommerInput s;
        s.ring = FinAbGroup(need(r, "orders").get<std::vector<long long>>());
        s.Gamma = finite_group_from_json(need(j, "Gamma"));
        const std::size_t ng = s.Gamma.size();
        s.nu = elements_from_json(s.ring, need(j, "nu"), ng, "nu");
        s.psi = elements_from_json(s.ring, need(j, "psi"), ng, "psi");
        if (j.contains("phi")) {
            const json& p = j.at("phi");
            if (!p.is_array() || p.size() != ng) throw DimensionMismatch("phi must have |Gamma| rows");
            for (auto& row : p) s.phi.push_back(elements_from_json(s.ring, row, ng, "phi row"));
        } else {
            s.phi.assign(ng, std::vector<Element>(ng, s.ring.identity()));
        }
        s.eta = Character{j.contains("eta") ? j.at("eta").get<std::vector<long long>>() : std::vector<long long>(s.ring.rank(), 0)};
        s.theta = Character{need(j, "theta").get<std::vector<long long>>()};
        SommerData data = sommer_family(s);
        in.mp = data.mp;
        in.sigma = data.sigma;
        in.tau = j.contains("tau") ? tau_from_json(in.mp, j.at("tau")) : trivial_tau(in.mp);
        in.grading_beta = data.beta;
        in.z = data.z;
        in.from_ring = true;
        return in;
    }
    FiniteGroup L = finite_group_from_json(need(j, "L"));
    FiniteGroup G = finite_group_from_json(need(j, "Gamma"));
    in.mp = MatchedPair::trivial(L, G);
    if (j.contains("lact")) in.mp.lact = index_table(j.at("lact"), L.size(), G.size(), L.size(), "right action");
    if (j.contains("ract")) in.mp.ract = index_table(j.at("ract"), L.size(), G.size(), G.size(), "left action");
    in.sigma = j.contains("sigma") ? sigma_from_json(in.mp, j.at("sigma")) : trivial_sigma(in.mp);
    in.tau = j.contains("tau") ? tau_from_json(in.mp, j.at("tau")) : trivial_tau(in.mp);
    if (j.contains("grading")) {
        const json& g = j.at("grading");
        FinAbGroup grp = group_from_json(need(g, "group"));
        in.grading_beta = bicharacter_from_json(grp, need(g, "beta"));
        const json& z = need(g, "z");
        if (!z.is_array() || z.size() != L.size()) throw DimensionMismatch("z must have |L| rows");
        ZTable t;
        for (auto& row : z) t.push_back(elements_from_json(grp, row, G.size(), "z row"));
        in.z = std::move(t);
    }
    if (j.contains("action")) {
        const json& a = j.at("action");
        FinAbGroup grp = group_from_json(need(a, "group"));
        ExtAction rho{bicharacter_from_json(grp, need(a, "beta")), {}};
        for (auto& f : need(a, "generators")) rho.generators.push_back(ext_automorphism_from_json(in.mp, f));
        in.action = std::move(rho);
    }
    if (j.contains("g")) {
        std::vector<std::size_t> g;
        for (auto& x : j.at("g")) g.push_back(index_of(x, L.size(), "L"));
        in.g = g;
    }
    if (j.contains("h")) {
        std::vector<std::size_t> h;
        for (auto& x : j.at("h")) h.push_back(index_of(x, G.size(), "Gamma"));
        in.h = h;
    }
    return in;
}

}  // namespace chroma::cli
