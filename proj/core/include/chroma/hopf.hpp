#pragma once

#include "chroma/groups.hpp"
#include "chroma/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chroma {

// Degrees of a homogeneous basis together with the commutation data.
struct ColorGrading {
    Bicharacter beta;
    std::vector<Element> degrees;
};

// Finite-dimensional bialgebra given by structure constants in a fixed basis.
// Tensor squares are flattened as a * dim + b.
struct StructBialgebra {
    std::size_t dim = 0;
    std::vector<LinearCombo> mult;    // index i * dim + j: e_i e_j
    std::vector<LinearCombo> comult;  // index i: Delta(e_i)
    LinearCombo unit;
    std::vector<Cyclotomic> counit;
    std::optional<std::vector<LinearCombo>> antipode;  // antipode[j] = S(e_j)
    std::optional<ColorGrading> grading;

    LinearCombo multiply(const LinearCombo& x, const LinearCombo& y) const;
    LinearCombo coproduct(const LinearCombo& x) const;
    Cyclotomic epsilon(const LinearCombo& x) const;
    // beta(|e_a|, |e_b|), zero without a grading
    Rational01 braid(std::size_t a, std::size_t b) const;

    // lcm of all coefficient conductors and of the denominators of beta
    long long conductor() const;
    // Lifts every stored coefficient to conductor().
    void unify_conductor();
    // Table sizes agree with dim.
    void validate_shape() const;
};

enum class Mode { plain, color };

struct AxiomResult {
    std::string name;
    bool pass = true;
    std::vector<std::size_t> counterexample;  // basis indices of the first failure
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_pass() const;
    const AxiomResult* find(const std::string& name) const;
};

AxiomReport check_axioms(const StructBialgebra& h, Mode mode);

struct AntipodeReport {
    bool exists = false;
    std::vector<LinearCombo> antipode;  // columns
    bool sides_agree = false;
    bool antimultiplicative = false;    // S(xy) = beta(|x|,|y|) S(y) S(x)
    bool anticomultiplicative = false;  // Delta S(x) = beta(|x1|,|x2|) S(x2) (x) S(x1)
    bool bijective = false;
    std::vector<std::size_t> counterexample;
    bool ok() const { return exists && sides_agree && antimultiplicative && anticomultiplicative && bijective; }
};

AntipodeReport solve_antipode(const StructBialgebra& h, Mode mode);

// Verifies that the given columns are a convolution inverse of the identity.
bool is_antipode(const StructBialgebra& h, const std::vector<LinearCombo>& s);

// The braiding c(x (x) y) = beta(|x|,|y|) y (x) x is the flip on every basis pair.
bool check_flip(const StructBialgebra& h, std::vector<std::size_t>* counterexample = nullptr);

// H # kG with basis index x * |G| + index(g).
StructBialgebra bosonize(const StructBialgebra& h);
// Closed-form antipode of H # kG from an antipode of H.
std::vector<LinearCombo> bosonization_antipode(const StructBialgebra& h, const std::vector<LinearCombo>& s);

// f given by the images of basis vectors of src, expressed in dst.
AxiomReport check_morphism(const StructBialgebra& src, const StructBialgebra& dst, const std::vector<LinearCombo>& f);

// Same bialgebra in the basis b_i = columns[i] (columns must be invertible).
StructBialgebra change_basis(const StructBialgebra& h, const std::vector<LinearCombo>& columns);

}  // namespace chroma
