#include "chroma/doubles.hpp"

#include "chroma/errors.hpp"

#include <regex>
#include <sstream>

namespace chroma {

namespace {

std::string residues(const std::vector<long long>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s;
}

std::string idx(const char* name, std::size_t i) { return name + std::to_string(i + 1); }
std::string group_name(const Element& g) { return "t[" + residues(g.r) + "]"; }
std::string char_name(const Character& c) { return "x[" + residues(c.r) + "]"; }

// s with chi^o_s = xi, for nondegenerate beta
Element chi_o_inverse(const Bicharacter& beta, const Character& xi) {
    for (auto& s : beta.group().elements())
        if (beta.chi_o(s) == xi) return s;
    throw DegenerateBeta();
}

}  // namespace

std::string DoublePresentation::to_text() const {
    std::ostringstream out;
    out << "rank " << rank << (central_quotient ? " quotient" : "") << "\n";
    out << "generators";
    for (auto& g : generators) out << " " << g;
    out << "\n";
    for (auto& c : conjugations) out << c.actor << " " << c.target << " " << c.actor << "^-1 = " << c.coeff.to_string() << " " << c.target << "\n";
    for (auto& c : commutators) out << c << "\n";
    for (auto& c : coproducts) out << c << "\n";
    for (auto& c : central) out << c << "\n";
    return out.str();
}

std::uint64_t DoublePresentation::digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : to_text()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

DoublePresentation presentation(const Datum& e, bool central_quotient) {
    DoublePresentation p;
    p.rank = e.rank();
    p.central_quotient = central_quotient;
    const FinAbGroup& g = e.group();
    const BraidingMatrix& qt = e.qt();
    std::size_t n = e.rank();
    for (const char* s : {"E", "F", "K", "L"})
        for (std::size_t i = 0; i < n; ++i) p.generators.push_back(idx(s, i));
    std::vector<Element> gens;
    std::vector<Character> chars;
    for (std::size_t k = 0; k < g.rank(); ++k) {
        gens.push_back(g.generator(k));
        Character c = g.trivial_character();
        c.r[k] = 1;
        chars.push_back(c);
    }
    for (auto& t : gens) p.generators.push_back(group_name(t));
    for (auto& c : chars) p.generators.push_back(char_name(c));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            p.conjugations.push_back({idx("K", i), idx("E", j), qt[i][j]});
            p.conjugations.push_back({idx("K", i), idx("F", j), qt[i][j].inverse()});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            p.conjugations.push_back({idx("L", i), idx("E", j), qt[j][i].inverse()});
            p.conjugations.push_back({idx("L", i), idx("F", j), qt[j][i]});
        }
    for (auto& t : gens)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar b(e.beta().eval(t, e.t()[j]));
            p.conjugations.push_back({group_name(t), idx("E", j), b});
            p.conjugations.push_back({group_name(t), idx("F", j), b.inverse()});
        }
    for (auto& c : chars)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar v(g.eval(c, e.t()[j]));
            p.conjugations.push_back({char_name(c), idx("E", j), v.inverse()});
            p.conjugations.push_back({char_name(c), idx("F", j), v});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string lhs = idx("E", i) + " " + idx("F", j) + " - " + idx("F", j) + " " + idx("E", i) + " = ";
            if (i == j)
                p.commutators.push_back(lhs + group_name(e.t()[i]) + " " + idx("K", i) + " - " + char_name(e.xi()[i]) + " " + idx("L", i));
            else
                p.commutators.push_back(lhs + "0");
        }
    for (std::size_t i = 0; i < n; ++i) {
        p.coproducts.push_back("D(" + idx("E", i) + ") = " + idx("E", i) + " (x) 1 + " + idx("K", i) + " " + group_name(e.t()[i]) + " (x) " + idx("E", i));
        p.coproducts.push_back("D(" + idx("F", i) + ") = " + idx("F", i) + " (x) " + idx("L", i) + " " + char_name(e.xi()[i]) + " + 1 (x) " + idx("F", i));
    }
    if (central_quotient)
        for (auto& t : gens) p.central.push_back(group_name(t) + " " + char_name(e.beta().chi_o(t)) + " = 1");
    return p;
}

std::optional<Scalar> pairing(const Datum& e, const std::string& left, const std::string& right) {
    static const std::regex indexed(R"re(^([EFKL])(\d+)$)re");
    static const std::regex grouped(R"re(^([tx])\[([0-9,-]*)\]$)re");
    struct Sym {
        char kind;
        std::size_t i = 0;
        std::vector<long long> r;
    };
    const FinAbGroup& g = e.group();
    auto parse = [&](const std::string& s) {
        std::smatch m;
        Sym out{};
        if (std::regex_match(s, m, indexed)) {
            out.kind = m[1].str()[0];
            out.i = std::stoul(m[2]);
            if (out.i < 1 || out.i > e.rank()) throw DomainError("generator index out of range: " + s);
            --out.i;
        } else if (std::regex_match(s, m, grouped)) {
            out.kind = m[1].str()[0];
            std::stringstream in(m[2].str());
            std::string item;
            while (std::getline(in, item, ',')) out.r.push_back(std::stoll(item));
            if (out.r.size() != g.rank()) throw DomainError("residue vector does not fit the group: " + s);
        } else {
            throw ParseError("unknown generator symbol " + s, 0);
        }
        return out;
    };
    Sym a = parse(left), b = parse(right);
    bool a_group = a.kind == 'K' || a.kind == 't';
    bool b_group = b.kind == 'L' || b.kind == 'x';
    if (a.kind == 'E' && b.kind == 'F') {
        if (a.i == b.i) return Scalar::minus_one();
        return std::nullopt;
    }
    if (a.kind == 'E' || b.kind == 'F') {
        if (b_group || a_group) return std::nullopt;
    }
    if (!a_group || !b_group) throw DomainError("pairing is defined on (upper, lower) generator pairs");
    // mu-bar((K_i, t), (L_j, alpha)) = q~_ij alpha(t)
    if (a.kind == 'K' && b.kind == 'L') return e.qt()[a.i][b.i];
    if (a.kind == 't' && b.kind == 'x') return Scalar(g.eval(Character{b.r}, g.make(a.r)));
    return Scalar::one();
}

std::vector<Retraction> retractions(const Datum& e) {
    const FinAbGroup& g = e.group();
    if (!e.beta().is_nondegenerate()) throw DegenerateBeta();
    std::size_t n = e.rank();
    long double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(g.size());
    if (total > 1e6) throw SizeLimit("too many retraction candidates");
    std::vector<Element> s_of(n);
    for (std::size_t i = 0; i < n; ++i) s_of[i] = chi_o_inverse(e.beta(), e.xi()[i]);
    std::vector<Retraction> out;
    std::vector<long long> counter(n, 0);
    for (;;) {
        Retraction r;
        for (std::size_t i = 0; i < n; ++i) r.images.push_back(g.element(counter[i]));
        bool trivial = true;
        for (std::size_t i = 0; i < n; ++i) {
            r.pi_L.push_back(g.mul(g.mul(e.t()[i], r.images[i]), s_of[i]));
            trivial = trivial && g.is_identity(r.images[i]);
            // t_i K_i - xi_i L_i must map to zero, with pi(xi) = (chi^o)^{-1}(xi)^{-1}
            Element lhs = g.mul(e.t()[i], r.images[i]);
            Element rhs = g.mul(g.inv(s_of[i]), r.pi_L[i]);
            if (lhs != rhs) throw Error("retraction violates the E-F commutation relation");
        }
        r.color = trivial;
        out.push_back(std::move(r));
        std::size_t k = 0;
        while (k < n && ++counter[k] == g.size()) counter[k++] = 0;
        if (k == n) break;
    }
    return out;
}

bool is_color_coinvariants(const Retraction& r) {
    for (auto& x : r.images)
        for (long long v : x.r)
            if (v != 0) return false;
    return true;
}

SingleCopyReport single_copy_color_check(const Datum& e) {
    SingleCopyReport rep;
    const BraidingMatrix& qt = e.qt();
    rep.symmetric = true;
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < e.rank(); ++j)
            if (qt[i][j] != qt[j][i]) rep.symmetric = false;
    if (!rep.symmetric) return rep;
    const FinAbGroup& g = e.group();
    // x^2 = t_i^{-2} always has the solution t_i^{-1}; the solution set is a coset of G[2].
    long long two_torsion = 0;
    for (auto& x : g.elements())
        if (g.is_identity(g.mul(x, x))) ++two_torsion;
    std::vector<Element> witness;
    long long count = 1;
    bool color = true;
    for (std::size_t i = 0; i < e.rank(); ++i) {
        Element w = g.inv(e.t()[i]);
        if (g.mul(w, w) != g.pow(e.t()[i], -2)) throw Error("witness check failed");
        witness.push_back(w);
        count *= two_torsion;
        if (!g.is_identity(g.mul(e.t()[i], e.t()[i]))) color = false;
    }
    rep.retraction_exists = true;
    rep.witness = witness;
    rep.retraction_count = count;
    rep.color = color;
    return rep;
}

}  // namespace chroma
