#pragma once

#include "chroma/cyclotomic.hpp"

#include <map>
#include <optional>
#include <vector>

namespace chroma {

struct Term {
    std::size_t index;
    Cyclotomic coeff;
};

// Sparse vector: terms sorted by index, no zero coefficients.
using LinearCombo = std::vector<Term>;

bool combo_equal(const LinearCombo& a, const LinearCombo& b);
LinearCombo basis_vector(std::size_t i, long long conductor = 1);

// Accumulates c * e_index and produces a normalized LinearCombo.
class ComboBuilder {
public:
    void add(std::size_t index, const Cyclotomic& c);
    void add(const LinearCombo& v, const Cyclotomic& c);
    void add(const LinearCombo& v);
    LinearCombo take();
    bool empty() const { return terms_.empty(); }

private:
    std::map<std::size_t, Cyclotomic> terms_;
};

using DenseMatrix = std::vector<std::vector<Cyclotomic>>;

// Online sparse row reduction for a linear system A x = b over a cyclotomic field.
class SparseSystem {
public:
    explicit SparseSystem(std::size_t unknowns) : n_(unknowns) {}

    // Returns false once the system has become inconsistent.
    bool add_equation(const LinearCombo& row, const Cyclotomic& rhs);
    bool consistent() const { return consistent_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t unknowns() const { return n_; }
    bool unique() const { return consistent_ && rank() == n_; }
    // A solution with free variables set to zero.
    std::optional<std::vector<Cyclotomic>> solve() const;

private:
    struct Row {
        LinearCombo coeffs;  // leading coefficient is 1
        Cyclotomic rhs;
    };
    std::size_t n_;
    bool consistent_ = true;
    std::map<std::size_t, Row> pivots_;
};

// Rank of a set of sparse vectors.
std::size_t rank_of(const std::vector<LinearCombo>& vectors);

// Indices of a maximal linearly independent prefix-greedy subset.
std::vector<std::size_t> independent_subset(const std::vector<LinearCombo>& vectors);

// Inverse of a square matrix given by its columns; nullopt when singular.
std::optional<std::vector<LinearCombo>> inverse_columns(const std::vector<LinearCombo>& columns, std::size_t dim);

// Applies the matrix with the given columns to a vector.
LinearCombo apply_columns(const std::vector<LinearCombo>& columns, const LinearCombo& v);

}  // namespace chroma
