#pragma once

#include "chroma/datum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chroma {

struct DiagramVertex {
    Scalar label;
    std::optional<Element> degree;  // colored diagrams only
    friend bool operator==(const DiagramVertex&, const DiagramVertex&) = default;
};

struct DiagramEdge {
    std::size_t i, j;             // i < j
    std::optional<Scalar> label;  // unlabeled edges occur only in colored diagrams
    friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

struct Diagram {
    enum class Kind { generalized, colored };
    Kind kind = Kind::generalized;
    FinAbGroup group;  // grading group of the degrees (colored only)
    std::vector<DiagramVertex> vertices;
    std::vector<DiagramEdge> edges;  // sorted by (i, j)
    friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram generalized_diagram(const BraidingMatrix& q);
Diagram colored_diagram(const Datum& e);

// Labeled isomorphism by backtracking over vertex bijections; SizeLimit above 10 vertices.
bool isomorphic(const Diagram& a, const Diagram& b);

// Indices of pairwise non-isomorphic representatives, in first-seen order.
std::vector<std::size_t> distinct_diagrams(const std::vector<Diagram>& ds);

std::string emit_dot(const Diagram& d);
Diagram parse_dot(const std::string& text);

// Text rendering with the glyphs ○ ● ⊗ ⊙ for degrees in groups of order <= 4.
std::string render_text(const Diagram& d);

}  // namespace chroma
