#pragma once

// Worked examples shared by the unit tests, the acceptance runner and the benchmarks.

#include "chroma/datum.hpp"
#include "chroma/dynkin.hpp"
#include "chroma/extensions.hpp"

#include <string>
#include <vector>

namespace corpus {

chroma::Scalar S(const std::string& text);
chroma::Element el(std::vector<long long> r);

// C2 x C2 grading, generalized diagram "q —q^-1— -1 —(-1)— -1 —(-q)— -q^-1".
chroma::Datum c2xc2();

struct TableRow {
    chroma::Diagram generalized;
    chroma::Diagram colored;
};
// The six rows of the consistently colored family of c2xc2().
std::vector<TableRow> c2xc2_table();

// C3 grading with twisted matrix [[1, q^-1], [1, q]], t = (sigma, e).
chroma::Datum nuestro();
chroma::Diagram nuestro_generalized(bool reflected);
chroma::Diagram nuestro_colored(bool reflected);

// Symmetric twisted matrix [[1, q^-1], [q^-1, q^2]] over C3, t = (sigma, e).
chroma::Datum yamane();

// Gamma = C3, L = C7, trivial |>, l <| gamma = l^2.
chroma::MatchedPair forpro();
// g(l) = l^-1, h = id, ftilde_gamma(l) = xi, ftilde_{gamma^2}(l) = xi^3 with xi = zeta_7^k.
chroma::ExtAutomorphism forpro_auto(long long k);

// Gamma = C3, L = C12 with the mixed odd/even actions.
chroma::MatchedPair forpro1();
// g(l) = l^7, h = id, ftilde_gamma(odd) = xi, ftilde_{gamma^2}(odd) = xi^2 with xi = zeta_3^k.
chroma::ExtAutomorphism forpro1_auto(long long k);

struct ColorExample {
    chroma::MatchedPair mp;
    chroma::ExtAction rho;
    std::vector<chroma::Element> expected_support;
    bool expected_color = true;
};

// k Gamma for Gamma = C2 x C2 under the dual of C4.
ColorExample colorgroup1();
// k Gamma for Gamma = C2 x C2 under the dual of C2 x C4.
ColorExample colorgroup2();
// k^C12 # k C3 under the dual of C2 x C2, both generators acting by forpro1_auto(0).
ColorExample matchedpair();
// Same action with beta(g,g) = beta(g,h) = beta(h,h) = -1, beta(h,g) = 1.
ColorExample matchedpair_mutated();

// R = Z/3, Gamma = C2 acting by -1, psi(gamma) = 1, phi = 0, theta(x) = zeta_3^x, eta = 1.
chroma::SommerInput sommer_z3();

}  // namespace corpus
