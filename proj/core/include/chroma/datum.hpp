#pragma once

#include "chroma/groups.hpp"
#include "chroma/scalar.hpp"

#include <vector>

namespace chroma {

using BraidingMatrix = std::vector<std::vector<Scalar>>;

// Braiding matrix together with a colored grading (G, beta) and degrees t_i.
// The twisted matrix qt and the characters xi_i = chi_{t_i} are derived.
class Datum {
public:
    Datum(BraidingMatrix q, Bicharacter beta, std::vector<Element> t);

    std::size_t rank() const { return q_.size(); }
    const BraidingMatrix& q() const { return q_; }
    const BraidingMatrix& qt() const { return qt_; }
    const Bicharacter& beta() const { return beta_; }
    const FinAbGroup& group() const { return beta_.group(); }
    const std::vector<Element>& t() const { return t_; }
    const std::vector<Character>& xi() const { return xi_; }

    // Two data are equal when matrix, grading and degrees agree exactly.
    friend bool operator==(const Datum& a, const Datum& b) {
        return a.q_ == b.q_ && a.t_ == b.t_ && a.beta_ == b.beta_;
    }

private:
    BraidingMatrix q_;
    Bicharacter beta_;
    std::vector<Element> t_;
    BraidingMatrix qt_;
    std::vector<Character> xi_;
};

// q~_ij = beta(t_i,t_j)^{-1} q_ij
BraidingMatrix twist(const BraidingMatrix& q, const std::vector<Element>& t, const Bicharacter& beta);
// q_ij = beta(t_i,t_j) q~_ij
BraidingMatrix untwist(const BraidingMatrix& qt, const std::vector<Element>& t, const Bicharacter& beta);

// Datum with the given twisted matrix.
Datum datum_from_twisted(const BraidingMatrix& qt, Bicharacter beta, std::vector<Element> t);

void check_square(const BraidingMatrix& q);

}  // namespace chroma
