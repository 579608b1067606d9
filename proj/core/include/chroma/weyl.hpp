#pragma once

#include "chroma/datum.hpp"

#include <optional>
#include <vector>

namespace chroma {

// a_pj for p != j (2 when p == j); nullopt when the vertex is not reflectable.
std::optional<long long> cartan_entry(const BraidingMatrix& q, std::size_t p, std::size_t j);
std::optional<std::vector<long long>> cartan_row(const BraidingMatrix& q, std::size_t p);

// s_p^* q; nullopt when some a_pj is infinite. Throws DiagonalOne if a
// reflected diagonal entry becomes 1.
std::optional<BraidingMatrix> reflect_matrix(const BraidingMatrix& q, std::size_t p);

// Reflected datum (q', t') with t'_i = t_i t_p^{-a_pi}.
std::optional<Datum> reflect_datum(const Datum& e, std::size_t p);

struct OrbitEdge {
    std::size_t from;
    std::size_t vertex;
    std::size_t to;
    friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

struct OrbitGraph {
    std::vector<Datum> nodes;
    std::vector<OrbitEdge> edges;
    bool truncated = false;
    // Reflections skipped because a diagonal entry would become 1.
    std::size_t degenerate_reflections = 0;
};

constexpr std::size_t default_max_nodes = 1024;

// Breadth-first closure under all reflectable vertices; node 0 is the input.
OrbitGraph weyl_orbit(const Datum& e, std::size_t max_nodes = default_max_nodes);

// Every stored edge (b, p, d) satisfies reflect_datum(b, p) == d.
bool check_consistent_coloring(const OrbitGraph& orbit);

}  // namespace chroma
