#include "chroma/datum.hpp"

#include "chroma/errors.hpp"

namespace chroma {

void check_square(const BraidingMatrix& q) {
    for (auto& row : q)
        if (row.size() != q.size()) throw DimensionMismatch("braiding matrix is not square");
}

namespace {

BraidingMatrix scale(const BraidingMatrix& q, const std::vector<Element>& t, const Bicharacter& beta, bool inverse) {
    check_square(q);
    if (t.size() != q.size()) throw DimensionMismatch("number of degrees differs from the rank");
    BraidingMatrix r = q;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) {
            Rational01 b = beta.eval(t[i], t[j]);
            r[i][j] = Scalar(inverse ? -b : b) * q[i][j];
        }
    return r;
}

}  // namespace

BraidingMatrix twist(const BraidingMatrix& q, const std::vector<Element>& t, const Bicharacter& beta) {
    return scale(q, t, beta, true);
}

BraidingMatrix untwist(const BraidingMatrix& qt, const std::vector<Element>& t, const Bicharacter& beta) {
    return scale(qt, t, beta, false);
}

Datum::Datum(BraidingMatrix q, Bicharacter beta, std::vector<Element> t)
    : q_(std::move(q)), beta_(std::move(beta)), t_(std::move(t)) {
    check_square(q_);
    if (t_.size() != q_.size()) throw DimensionMismatch("number of degrees differs from the rank");
    for (auto& x : t_) {
        if (x.r.size() != group().rank()) throw DimensionMismatch("degree does not belong to the grading group");
        x = group().make(x.r);
    }
    if (!beta_.is_nondegenerate()) throw DegenerateBeta();
    for (std::size_t i = 0; i < q_.size(); ++i)
        if (q_[i][i].is_one()) throw DiagonalOne(static_cast<int>(i));
    qt_ = twist(q_, t_, beta_);
    for (auto& x : t_) xi_.push_back(beta_.chi(x));
}

Datum datum_from_twisted(const BraidingMatrix& qt, Bicharacter beta, std::vector<Element> t) {
    BraidingMatrix q = untwist(qt, t, beta);
    return Datum(std::move(q), std::move(beta), std::move(t));
}

}  // namespace chroma
