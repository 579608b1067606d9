#pragma once

#include "chroma/finite_group.hpp"
#include "chroma/groups.hpp"
#include "chroma/hopf.hpp"

#include <cstddef>
#include <vector>

namespace chroma {

// Matched pair (Gamma, L): lact[l][gamma] = l <| gamma in L, ract[l][gamma] = l |> gamma in Gamma.
struct MatchedPair {
    FiniteGroup L;
    FiniteGroup Gamma;
    std::vector<std::vector<std::size_t>> lact;
    std::vector<std::vector<std::size_t>> ract;

    static MatchedPair trivial(FiniteGroup l, FiniteGroup gamma);
    bool lact_trivial() const;
    bool ract_trivial() const;
    // Basis index of delta_l e_gamma.
    std::size_t index(std::size_t l, std::size_t gamma) const { return l * Gamma.size() + gamma; }
    std::size_t dim() const { return L.size() * Gamma.size(); }
    // Throws DimensionMismatch when a table has the wrong shape or entries out of range.
    void check_shape() const;
};

// Both matched-pair identities over all triples, plus identity fixing.
bool validate_matched_pair(const MatchedPair& mp);

using SigmaTable = std::vector<std::vector<std::vector<Rational01>>>;  // sigma[l][gamma][eta]
using TauTable = std::vector<std::vector<std::vector<Rational01>>>;    // tau[gamma][l][t]

SigmaTable trivial_sigma(const MatchedPair& mp);
TauTable trivial_tau(const MatchedPair& mp);
void check_shape(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau);

// sigma_l(g,h) sigma_l(gh,k) = sigma_{l<|g}(h,k) sigma_l(g,hk)
bool sigma_is_cocycle(const MatchedPair& mp, const SigmaTable& sigma);
// tau_{c|>g}(a,b) tau_g(ab,c) = tau_g(b,c) tau_g(a,bc)
bool tau_is_cocycle(const MatchedPair& mp, const TauTable& tau);
bool cocycles_normalized(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau);

bool kac_condition(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau);

struct Bicrossed {
    StructBialgebra algebra;
    bool kac = false;  // false: the tables are built but the result is not a Hopf algebra
};

Bicrossed build_bicrossed(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau);

// f(delta_l e_gamma) = ftilde[gamma][g(l)] delta_{g(l)} e_{h(gamma)}
struct ExtAutomorphism {
    std::vector<std::size_t> g;
    std::vector<std::size_t> h;
    std::vector<std::vector<Rational01>> ftilde;  // [gamma][l]
    friend bool operator==(const ExtAutomorphism&, const ExtAutomorphism&) = default;
};

ExtAutomorphism ext_identity(const MatchedPair& mp);
// The automorphism x -> f(f2(x)).
ExtAutomorphism compose(const MatchedPair& mp, const ExtAutomorphism& f, const ExtAutomorphism& f2);
ExtAutomorphism ext_power(const MatchedPair& mp, const ExtAutomorphism& f, long long k);

// g(l) <| h(gamma) = g(l <| gamma) and g(l) |> h(gamma) = h(l |> gamma).
bool actions_compatible(const MatchedPair& mp, const std::vector<std::size_t>& g, const std::vector<std::size_t>& h);
// Normalization and the two multiplicativity rules for ftilde.
bool ftilde_conditions(const MatchedPair& mp, const ExtAutomorphism& f);
// Columns of f on the basis of k^L # k Gamma.
std::vector<LinearCombo> ext_matrix(const MatchedPair& mp, const ExtAutomorphism& f);

long long default_root_bound(const MatchedPair& mp);

struct AutExtResult {
    std::vector<ExtAutomorphism> solutions;
    long long solution_count = 0;  // size of the full solution group
    bool compatible = false;       // the action condition on (g, h)
    bool truncated = false;        // solutions holds only the first `cap` of them
    bool bound_too_small = false;  // N is not a multiple of default_root_bound
    bool all_certified = true;     // each listed solution passed the morphism check
};

// All ftilde with values in the N-th roots of unity, for trivial cocycles.
AutExtResult aut_ext_solve(const MatchedPair& mp, const std::vector<std::size_t>& g, const std::vector<std::size_t>& h,
                           long long n, std::size_t cap = 4096);

struct AutExtPair {
    std::vector<std::size_t> g, h;
    long long solution_count = 0;
};
// Every compatible (g, h) with its number of solutions; |L|, |Gamma| <= 12.
std::vector<AutExtPair> aut_ext_enumerate(const MatchedPair& mp, long long n);

// Permutation with root-of-unity scalars: e_x -> scale[x] e_{target[x]}.
struct MonomialMap {
    std::vector<std::size_t> target;
    std::vector<Rational01> scale;
    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

MonomialMap monomial_from_columns(const std::vector<LinearCombo>& columns);
std::vector<LinearCombo> monomial_columns(const MonomialMap& m);

// Action of the dual group A of G on H; maps[k] is the image of the k-th character.
struct GradedAction {
    Bicharacter beta;
    std::vector<MonomialMap> maps;
};

// Images of the standard generators of A; checks orders, commutation and that
// every image is a Hopf automorphism of h.
GradedAction make_action(const StructBialgebra& h, const Bicharacter& beta,
                         const std::vector<std::vector<LinearCombo>>& generators);

std::vector<Element> support(const StructBialgebra& h, const GradedAction& action);
bool is_color(const StructBialgebra& h, const GradedAction& action);
// h rewritten in a basis of homogeneous components, with the grading attached.
StructBialgebra homogenize(const StructBialgebra& h, const GradedAction& action);

// Action of A by extension automorphisms of k^L # k Gamma (trivial cocycles).
struct ExtAction {
    Bicharacter beta;
    std::vector<ExtAutomorphism> generators;
};

// Image of every character, indexed like FinAbGroup::character; throws on invalid input.
std::vector<ExtAutomorphism> expand_ext_action(const MatchedPair& mp, const ExtAction& rho);
GradedAction graded_action(const MatchedPair& mp, const ExtAction& rho);

struct ColorPairReport {
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool color_pair = false;  // all three conditions
    bool is_color = false;    // beta trivial on the support
    bool direct_color = false;  // homogenized algebra passes the color axioms and has an antipode
    bool agrees = false;
    std::vector<Element> support;
};

ColorPairReport check_color_matched_pair_def(const MatchedPair& mp, const ExtAction& rho);

// z[l][gamma] in G
using ZTable = std::vector<std::vector<Element>>;

bool validate_z(const MatchedPair& mp, const FinAbGroup& g, const ZTable& z);
bool braided_compat(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau, const ZTable& z,
                    const Bicharacter& beta);
// Bicrossed product with degrees z(l, gamma).
StructBialgebra graded_bicrossed(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau, const ZTable& z,
                                 const Bicharacter& beta);

struct Thm317Report {
    bool z_cocycle = false;      // each z(., gamma) a homomorphism and the 1-cocycle rule in gamma
    bool compatibility = false;  // sigma_{lt} = beta(z(t,g), z(l<|g,h)) sigma_l sigma_t
    bool tau_cocycle = false;    // tau in Z^1(Gamma, Z^2(L))
    bool holds = false;
    bool checked_hopf = false;   // whether the axiom cross-check ran
    bool color_hopf = false;     // graded bicrossed passes the color axioms and has an antipode
    bool agrees = true;
};

// Requires |> trivial (RactNotTrivial otherwise).
Thm317Report thm317_check(const MatchedPair& mp, const SigmaTable& sigma, const TauTable& tau, const ZTable& z,
                          const Bicharacter& beta, bool cross_check = true);

bool color_hopf(const StructBialgebra& graded);

// R = Z/n_1 x ... x Z/n_k with componentwise product; L = G = (R, +).
struct SommerInput {
    FinAbGroup ring;
    FiniteGroup Gamma;
    std::vector<Element> nu;                // units, by Gamma index
    std::vector<Element> psi;               // 1-cocycle Gamma -> L
    std::vector<std::vector<Element>> phi;  // 2-cocycle Gamma x Gamma -> L
    Character eta;                          // additive characters of R
    Character theta;
};

struct SommerData {
    MatchedPair mp;
    SigmaTable sigma;
    Bicharacter beta;
    ZTable z;
};

Element ring_mul(const FinAbGroup& ring, const Element& a, const Element& b);
SommerData sommer_family(const SommerInput& in);

}  // namespace chroma
