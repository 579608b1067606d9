#pragma once

#include "chroma/groups.hpp"

#include <vector>

namespace chroma {

// Table over a group indexed by element indices: table[index(x)][index(y)].
using CocycleTable = std::vector<std::vector<Rational01>>;

struct TriangularData {
    std::vector<Rational01> u;  // by element index of G, values in {0, 1/2}
    Bicharacter kappa;
    Bicharacter beta_kappa;
    Subgroup radical;           // ker of chi-bar for beta*kappa
    Quotient g_prime;           // G' = G / radical with projection
    Bicharacter beta_prime;     // on G'
    Subgroup K;                 // perp of the radical, inside the dual of G
    CocycleTable gamma_prime;   // on G'
};

std::vector<Rational01> drinfeld_u(const Bicharacter& beta);

// kappa(g,h) = -1 iff u(g) = u(h) = -1, with u a character of order <= 2.
Bicharacter kappa_of(const FinAbGroup& g, const std::vector<Rational01>& u);

// Pointwise product of two bicharacters on the same group.
Bicharacter product(const Bicharacter& a, const Bicharacter& b);

TriangularData reduce(const Bicharacter& beta);

// gamma(x,y) = prod_{i>j} beta(e_i,e_j)^{x_i y_j}; needs a commutation factor with trivial diagonal.
CocycleTable scheunert_cocycle(const Bicharacter& beta_prime);

bool satisfies_trick(const Bicharacter& beta, const CocycleTable& gamma);
bool is_two_cocycle(const FinAbGroup& g, const CocycleTable& gamma);
bool is_normalized(const FinAbGroup& g, const CocycleTable& gamma);

}  // namespace chroma
