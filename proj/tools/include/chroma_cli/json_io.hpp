#pragma once

#include "chroma/datum.hpp"
#include "chroma/dynkin.hpp"
#include "chroma/extensions.hpp"
#include "chroma/hopf.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace chroma::cli {

using json = nlohmann::json;

Scalar parse_scalar(const std::string& text);

json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const json& j);
json element_to_json(const Element& e);
Element element_from_json(const FinAbGroup& g, const json& j);
json bicharacter_to_json(const Bicharacter& b);
Bicharacter bicharacter_from_json(const FinAbGroup& g, const json& j);
json matrix_to_json(const BraidingMatrix& q);
BraidingMatrix matrix_from_json(const json& j);

// {"q": [[...]], "group": {"orders": [...]}, "beta": [[...]], "t": [[...]]};
// "qt" may replace "q" to give the twisted matrix instead.
json datum_to_json(const Datum& e);
Datum datum_from_json(const json& j);

json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json combo_to_json(const LinearCombo& v);
json bialgebra_to_json(const StructBialgebra& h);
StructBialgebra bialgebra_from_json(const json& j);

// {"cyclic": n}, {"abelian": [orders]} or {"table": [[...]]}
FiniteGroup finite_group_from_json(const json& j);
json finite_group_to_json(const FiniteGroup& g);

struct ExtensionInput {
    MatchedPair mp;
    SigmaTable sigma;
    TauTable tau;
    std::optional<Bicharacter> grading_beta;
    std::optional<ZTable> z;
    std::optional<ExtAction> action;
    std::optional<std::vector<std::size_t>> g, h;  // for aut-ext
    bool from_ring = false;
};

ExtensionInput extension_from_json(const json& j);
json ext_automorphism_to_json(const ExtAutomorphism& f);
ExtAutomorphism ext_automorphism_from_json(const MatchedPair& mp, const json& j);
json rational_table(const std::vector<std::vector<Rational01>>& t);

}  // namespace chroma::cli
