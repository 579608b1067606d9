#include "chroma/weyl.hpp"

#include "chroma/errors.hpp"
#include "chroma/parallel.hpp"

#include <map>

namespace chroma {

std::optional<long long> cartan_entry(const BraidingMatrix& q, std::size_t p, std::size_t j) {
    check_square(q);
    if (p >= q.size() || j >= q.size()) throw DomainError("vertex index out of range");
    if (p == j) return 2;
    const Scalar& qpp = q[p][p];
    std::optional<long long> best = solve_power(qpp, (q[p][j] * q[j][p]).inverse());
    std::optional<long long> ord = order_of(qpp);
    if (ord && *ord > 1 && (!best || *ord - 1 < *best)) best = *ord - 1;
    if (!best) return std::nullopt;
    return -*best;
}

std::optional<std::vector<long long>> cartan_row(const BraidingMatrix& q, std::size_t p) {
    std::vector<long long> row(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
        auto a = cartan_entry(q, p, j);
        if (!a) return std::nullopt;
        row[j] = *a;
    }
    return row;
}

namespace {

BraidingMatrix reflect_with(const BraidingMatrix& q, std::size_t p, const std::vector<long long>& a) {
    BraidingMatrix r = q;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            r[i][j] = q[i][j] * q[p][j].pow(-a[i]) * q[i][p].pow(-a[j]) * q[p][p].pow(a[i] * a[j]);
    return r;
}

}  // namespace

std::optional<BraidingMatrix> reflect_matrix(const BraidingMatrix& q, std::size_t p) {
    auto a = cartan_row(q, p);
    if (!a) return std::nullopt;
    BraidingMatrix r = reflect_with(q, p, *a);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i][i].is_one()) throw DiagonalOne(static_cast<int>(i));
    return r;
}

std::optional<Datum> reflect_datum(const Datum& e, std::size_t p) {
    auto a = cartan_row(e.q(), p);
    if (!a) return std::nullopt;
    auto q2 = reflect_matrix(e.q(), p);
    const FinAbGroup& g = e.group();
    std::vector<Element> t2;
    for (std::size_t i = 0; i < e.rank(); ++i) t2.push_back(g.mul(e.t()[i], g.pow(e.t()[p], -(*a)[i])));
    Datum d(std::move(*q2), e.beta(), std::move(t2));
    if (d.qt() != reflect_with(e.qt(), p, *a)) throw Error("reflected twisted matrix violates the reflection identity");
    return d;
}

OrbitGraph weyl_orbit(const Datum& e, std::size_t max_nodes) {
    if (max_nodes < 1) throw DomainError("max_nodes must be at least 1");
    using Key = std::pair<BraidingMatrix, std::vector<Element>>;
    OrbitGraph g;
    std::map<Key, std::size_t> seen;
    g.nodes.push_back(e);
    seen.emplace(Key{e.q(), e.t()}, 0);
    std::vector<std::size_t> frontier{0};
    std::size_t n = e.rank();
    while (!frontier.empty()) {
        // results[k * n + p] for frontier node k and vertex p
        std::vector<std::optional<Datum>> results(frontier.size() * n);
        std::vector<char> degenerate(frontier.size() * n, 0);
        parallel_for(frontier.size() * n, [&](std::size_t idx) {
            try {
                results[idx] = reflect_datum(g.nodes[frontier[idx / n]], idx % n);
            } catch (const DiagonalOne&) {
                degenerate[idx] = 1;
            }
        });
        std::vector<std::size_t> next;
        for (std::size_t idx = 0; idx < results.size(); ++idx) {
            if (degenerate[idx]) ++g.degenerate_reflections;
            if (!results[idx]) continue;
            std::size_t from = frontier[idx / n];
            Key key{results[idx]->q(), results[idx]->t()};
            auto it = seen.find(key);
            std::size_t to;
            if (it != seen.end()) {
                to = it->second;
            } else {
                if (g.nodes.size() >= max_nodes) {
                    g.truncated = true;
                    continue;
                }
                to = g.nodes.size();
                seen.emplace(std::move(key), to);
                g.nodes.push_back(std::move(*results[idx]));
                next.push_back(to);
            }
            g.edges.push_back(OrbitEdge{from, idx % n, to});
        }
        frontier = std::move(next);
    }
    return g;
}

bool check_consistent_coloring(const OrbitGraph& orbit) {
    for (auto& edge : orbit.edges) {
        if (edge.from >= orbit.nodes.size() || edge.to >= orbit.nodes.size()) return false;
        try {
            auto d = reflect_datum(orbit.nodes[edge.from], edge.vertex);
            if (!d || !(*d == orbit.nodes[edge.to])) return false;
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

}  // namespace chroma
