#include "chroma/linalg.hpp"

#include "chroma/errors.hpp"

#include <algorithm>

namespace chroma {

bool combo_equal(const LinearCombo& a, const LinearCombo& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].index != b[k].index || !(a[k].coeff == b[k].coeff)) return false;
    return true;
}

LinearCombo basis_vector(std::size_t i, long long conductor) { return {Term{i, Cyclotomic::one(conductor)}}; }

void ComboBuilder::add(std::size_t index, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(index);
    if (it == terms_.end()) {
        terms_.emplace(index, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void ComboBuilder::add(const LinearCombo& v, const Cyclotomic& c) {
    for (auto& t : v) add(t.index, t.coeff * c);
}

void ComboBuilder::add(const LinearCombo& v) {
    for (auto& t : v) add(t.index, t.coeff);
}

LinearCombo ComboBuilder::take() {
    LinearCombo out;
    out.reserve(terms_.size());
    for (auto& [i, c] : terms_) out.push_back(Term{i, c});
    terms_.clear();
    return out;
}

bool SparseSystem::add_equation(const LinearCombo& row, const Cyclotomic& rhs) {
    if (!consistent_) return false;
    std::map<std::size_t, Cyclotomic> acc;
    for (auto& t : row) {
        if (t.index >= n_) throw DomainError("unknown index out of range");
        if (!t.coeff.is_zero()) acc.emplace(t.index, t.coeff);
    }
    Cyclotomic b = rhs;
    while (!acc.empty()) {
        auto first = acc.begin();
        auto piv = pivots_.find(first->first);
        if (piv == pivots_.end()) break;
        Cyclotomic f = first->second;
        for (auto& t : piv->second.coeffs) {
            auto it = acc.find(t.index);
            Cyclotomic d = t.coeff * f;
            if (it == acc.end()) {
                acc.emplace(t.index, -d);
            } else {
                it->second -= d;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        b -= piv->second.rhs * f;
    }
    if (acc.empty()) {
        if (!b.is_zero()) consistent_ = false;
        return consistent_;
    }
    Cyclotomic inv = acc.begin()->second.inverse();
    Row r;
    for (auto& [i, c] : acc) r.coeffs.push_back(Term{i, c * inv});
    r.rhs = b * inv;
    std::size_t lead = acc.begin()->first;
    pivots_.emplace(lead, std::move(r));
    return true;
}

std::optional<std::vector<Cyclotomic>> SparseSystem::solve() const {
    if (!consistent_) return std::nullopt;
    std::vector<Cyclotomic> x(n_);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Cyclotomic v = it->second.rhs;
        for (auto& t : it->second.coeffs)
            if (t.index != it->first && !x[t.index].is_zero()) v -= t.coeff * x[t.index];
        x[it->first] = v;
    }
    return x;
}

std::vector<std::size_t> independent_subset(const std::vector<LinearCombo>& vectors) {
    std::size_t n = 0;
    for (auto& v : vectors)
        for (auto& t : v) n = std::max(n, t.index + 1);
    SparseSystem sys(n);
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        std::size_t before = sys.rank();
        sys.add_equation(vectors[k], Cyclotomic());
        if (sys.rank() > before) keep.push_back(k);
    }
    return keep;
}

std::size_t rank_of(const std::vector<LinearCombo>& vectors) { return independent_subset(vectors).size(); }

LinearCombo apply_columns(const std::vector<LinearCombo>& columns, const LinearCombo& v) {
    ComboBuilder b;
    for (auto& t : v) b.add(columns.at(t.index), t.coeff);
    return b.take();
}

std::optional<std::vector<LinearCombo>> inverse_columns(const std::vector<LinearCombo>& columns, std::size_t dim) {
    if (columns.size() != dim) throw DimensionMismatch("inverse needs a square matrix");
    // Gauss-Jordan on rows of [M | I]
    DenseMatrix m(dim, std::vector<Cyclotomic>(2 * dim));
    for (std::size_t j = 0; j < dim; ++j) {
        for (auto& t : columns[j]) m.at(t.index)[j] = t.coeff;
        m[j][dim + j] = Cyclotomic::one();
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = col;
        while (piv < dim && m[piv][col].is_zero()) ++piv;
        if (piv == dim) return std::nullopt;
        std::swap(m[piv], m[col]);
        Cyclotomic inv = m[col][col].inverse();
        for (auto& x : m[col])
            if (!x.is_zero()) x *= inv;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Cyclotomic f = m[r][col];
            for (std::size_t c = col; c < 2 * dim; ++c)
                if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<LinearCombo> out(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        ComboBuilder b;
        for (std::size_t i = 0; i < dim; ++i) b.add(i, m[i][dim + j]);
        out[j] = b.take();
    }
    return out;
}

}  // namespace chroma
