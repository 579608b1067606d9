#include "chroma/dynkin.hpp"

#include "chroma/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

namespace chroma {

Diagram generalized_diagram(const BraidingMatrix& q) {
    check_square(q);
    Diagram d;
    for (std::size_t i = 0; i < q.size(); ++i) d.vertices.push_back({q[i][i], std::nullopt});
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j) {
            Scalar prod = q[i][j] * q[j][i];
            if (!prod.is_one()) d.edges.push_back({i, j, prod});
        }
    return d;
}

Diagram colored_diagram(const Datum& e) {
    const BraidingMatrix& qt = e.qt();
    Diagram d;
    d.kind = Diagram::Kind::colored;
    d.group = e.group();
    for (std::size_t i = 0; i < e.rank(); ++i) d.vertices.push_back({qt[i][i], e.t()[i]});
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = i + 1; j < e.rank(); ++j) {
            Scalar prod = qt[i][j] * qt[j][i];
            if (!prod.is_one()) {
                d.edges.push_back({i, j, prod});
            } else {
                Rational01 b = e.beta().eval(e.t()[i], e.t()[j]) + e.beta().eval(e.t()[j], e.t()[i]);
                if (!b.is_zero()) d.edges.push_back({i, j, std::nullopt});
            }
        }
    return d;
}

namespace {

// 0 = no edge, 1 = unlabeled, 2 = labeled
using EdgeMap = std::map<std::pair<std::size_t, std::size_t>, std::optional<Scalar>>;

EdgeMap edge_map(const Diagram& d) {
    EdgeMap m;
    for (auto& e : d.edges) {
        m[{e.i, e.j}] = e.label;
        m[{e.j, e.i}] = e.label;
    }
    return m;
}

}  // namespace

bool isomorphic(const Diagram& a, const Diagram& b) {
    if (a.vertices.size() > 10 || b.vertices.size() > 10) throw SizeLimit("diagram isomorphism is limited to 10 vertices");
    if (a.kind != b.kind || a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    EdgeMap ea = edge_map(a), eb = edge_map(b);
    std::size_t n = a.vertices.size();
    std::vector<std::size_t> image(n);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || !(a.vertices[i] == b.vertices[c])) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) {
                auto x = ea.find({i, k});
                auto y = eb.find({c, image[k]});
                if ((x == ea.end()) != (y == eb.end())) ok = false;
                else if (x != ea.end() && x->second != y->second) ok = false;
            }
            if (!ok) continue;
            used[c] = 1;
            image[i] = c;
            if (extend(i + 1)) return true;
            used[c] = 0;
        }
        return false;
    };
    return extend(0);
}

std::vector<std::size_t> distinct_diagrams(const std::vector<Diagram>& ds) {
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        bool fresh = true;
        for (std::size_t r : reps)
            if (isomorphic(ds[r], ds[i])) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(i);
    }
    return reps;
}

namespace {

std::string residues(const std::vector<long long>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s;
}

std::vector<long long> parse_residues(const std::string& s) {
    std::vector<long long> r;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) r.push_back(std::stoll(item));
    return r;
}

const char* const palette[] = {"white", "black", "gray", "lightblue", "orange", "palegreen", "pink", "gold"};

}  // namespace

std::string emit_dot(const Diagram& d) {
    std::ostringstream out;
    bool colored = d.kind == Diagram::Kind::colored;
    out << "graph " << (colored ? "colored" : "generalized") << " {\n";
    if (colored) out << "  group=\"" << residues(d.group.orders()) << "\";\n";
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        const auto& v = d.vertices[i];
        out << "  v" << i << " [label=\"" << v.label.to_string() << "\"";
        if (v.degree) {
            long long idx = d.group.index(*v.degree);
            out << ", degree=\"" << residues(v.degree->r) << "\", class=\"d" << idx << "\", style=filled, fillcolor="
                << palette[idx % 8];
        }
        out << "];\n";
    }
    for (auto& e : d.edges)
        out << "  v" << e.i << " -- v" << e.j << " [label=\"" << (e.label ? e.label->to_string() : "") << "\"];\n";
    out << "}\n";
    return out.str();
}

Diagram parse_dot(const std::string& text) {
    Diagram d;
    std::istringstream in(text);
    std::string line;
    static const std::regex header(R"re(^\s*graph\s+(generalized|colored)\s*\{\s*$)re");
    static const std::regex group_re(R"re(^\s*group="([0-9,]*)";\s*$)re");
    static const std::regex node_re(R"re(^\s*v(\d+)\s*\[label="([^"]*)"(?:,\s*degree="([0-9,]*)")?.*\];\s*$)re");
    static const std::regex edge_re(R"re(^\s*v(\d+)\s*--\s*v(\d+)\s*\[label="([^"]*)"\];\s*$)re");
    std::smatch m;
    bool seen_header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!seen_header) {
            if (!std::regex_match(line, m, header)) throw ParseError("expected graph header", lineno);
            d.kind = m[1] == "colored" ? Diagram::Kind::colored : Diagram::Kind::generalized;
            seen_header = true;
        } else if (std::regex_match(line, m, group_re)) {
            d.group = FinAbGroup(parse_residues(m[1]));
        } else if (std::regex_match(line, m, node_re)) {
            if (std::stoul(m[1]) != d.vertices.size()) throw ParseError("vertices out of order", lineno);
            DiagramVertex v{Scalar::parse(m[2]), std::nullopt};
            if (m[3].matched) v.degree = d.group.make(parse_residues(m[3]));
            d.vertices.push_back(std::move(v));
        } else if (std::regex_match(line, m, edge_re)) {
            DiagramEdge e{std::stoul(m[1]), std::stoul(m[2]), std::nullopt};
            if (m[3].length() > 0) e.label = Scalar::parse(m[3]);
            d.edges.push_back(std::move(e));
        } else if (line.find('}') != std::string::npos) {
            break;
        } else {
            throw ParseError("unrecognized line", lineno);
        }
    }
    if (!seen_header) throw ParseError("missing graph header", 0);
    return d;
}

namespace {

const char* const glyphs[] = {"○", "●", "⊗", "⊙"};

std::string vertex_text(const Diagram& d, std::size_t i) {
    const auto& v = d.vertices[i];
    std::string g = "○";
    if (v.degree) {
        if (d.group.size() <= 4) g = glyphs[d.group.index(*v.degree)];
        else g = "(" + residues(v.degree->r) + ")";
    }
    return g + "^" + v.label.pretty();
}

std::string edge_text(const DiagramEdge& e) { return e.label ? "—" + e.label->pretty() + "—" : "——"; }

// Vertex order along a simple path covering the whole diagram, or empty.
std::vector<std::size_t> chain_order(const Diagram& d) {
    std::size_t n = d.vertices.size();
    if (n == 0 || d.edges.size() != n - 1) return {};
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto& e : d.edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() > 2) return {};
        if (adj[i].size() <= 1 && start == n) start = i;
    }
    if (start == n) return {};
    std::vector<std::size_t> order{start};
    std::size_t prev = n, cur = start;
    while (order.size() < n) {
        std::size_t nxt = n;
        for (std::size_t x : adj[cur])
            if (x != prev) nxt = x;
        if (nxt == n) return {};
        prev = cur;
        cur = nxt;
        order.push_back(cur);
    }
    return order;
}

}  // namespace

std::string render_text(const Diagram& d) {
    std::ostringstream out;
    std::map<std::pair<std::size_t, std::size_t>, const DiagramEdge*> em;
    for (auto& e : d.edges) {
        em[{e.i, e.j}] = &e;
        em[{e.j, e.i}] = &e;
    }
    auto order = chain_order(d);
    if (!order.empty()) {
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k) out << " " << edge_text(*em[{order[k - 1], order[k]}]) << " ";
            out << vertex_text(d, order[k]);
        }
        out << "\n";
    } else {
        out << "vertices:";
        for (std::size_t i = 0; i < d.vertices.size(); ++i) out << " " << i + 1 << ":" << vertex_text(d, i);
        out << "\nedges:";
        for (auto& e : d.edges) out << " " << e.i + 1 << edge_text(e) << e.j + 1;
        out << "\n";
    }
    if (d.kind == Diagram::Kind::colored && d.group.size() <= 4) {
        out << "legend:";
        for (long long k = 0; k < d.group.size(); ++k) out << " " << glyphs[k] << "=(" << residues(d.group.element(k).r) << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace chroma
