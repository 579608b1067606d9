#pragma once

// Random instances for property tests. Every generator is driven by an
// explicit engine so failures reproduce from the seed.

#include "chroma/datum.hpp"
#include "chroma/extensions.hpp"

#include <random>

namespace gen {

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi);  // inclusive

chroma::Rational01 root(Rng& rng, long long max_den = 12);
// zeta * q^a * r^b with small exponents; variables may be absent.
chroma::Scalar monomial(Rng& rng, long long max_den = 12, long long max_exp = 3);

// Product of cyclic groups of total order <= max_order (not necessarily invariant-factor form).
chroma::FinAbGroup group(Rng& rng, long long max_order);
chroma::Element element(Rng& rng, const chroma::FinAbGroup& g);
chroma::Bicharacter bicharacter(Rng& rng, const chroma::FinAbGroup& g);
chroma::Bicharacter nondegenerate_bicharacter(Rng& rng, const chroma::FinAbGroup& g);

// Datum of rank 1..max_rank over a group of order <= max_order, with q_ii != 1.
chroma::Datum datum(Rng& rng, std::size_t max_rank, long long max_order);

// Cyclotomic linear combination of roots of unity of order dividing n.
chroma::Cyclotomic cyclotomic(Rng& rng, long long n, int terms = 4);

// Input for the ring family: R = Z/n (n <= 7) with Gamma cyclic acting by units.
chroma::SommerInput sommer(Rng& rng);

// tau_gamma(l, t) = B(l, t) - B(l <| gamma, t <| gamma) for a bicharacter B on the abelian L.
chroma::TauTable twisting_tau(Rng& rng, const chroma::MatchedPair& mp, const chroma::FinAbGroup& l_abelian);

}  // namespace gen
