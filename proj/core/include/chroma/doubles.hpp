#pragma once

#include "chroma/datum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chroma {

// actor * target * actor^{-1} = coeff * target
struct ConjugationRule {
    std::string actor;
    std::string target;
    Scalar coeff;
};

// Formal presentation of the double: generators E_i, F_i, K_i, L_i, the
// generators of G (named t[r]) and of its dual A (named x[r]).
struct DoublePresentation {
    std::size_t rank = 0;
    bool central_quotient = false;  // relations t chi^o_t = 1 imposed
    std::vector<std::string> generators;
    std::vector<ConjugationRule> conjugations;
    std::vector<std::string> commutators;  // E_iF_j - F_jE_i = ...
    std::vector<std::string> coproducts;
    std::vector<std::string> central;      // t chi^o_t = 1, when flagged

    std::string to_text() const;
    std::uint64_t digest() const;  // FNV-1a of to_text()
};

DoublePresentation presentation(const Datum& e, bool central_quotient = false);

// Value of the skew pairing on a pair of generator symbols; nullopt means 0.
// Accepts E<i>, F<i>, K<i>, L<i>, t[r], x[r] (1-based indices, residues comma separated).
std::optional<Scalar> pairing(const Datum& e, const std::string& left, const std::string& right);

struct Retraction {
    std::vector<Element> images;  // pi-bar(K_i)
    std::vector<Element> pi_L;    // pi(L_i)
    bool color = false;           // coinvariants form a color Hopf algebra
};

// Every homomorphism Z^theta -> G, with the induced values on L_i.
std::vector<Retraction> retractions(const Datum& e);
bool is_color_coinvariants(const Retraction& r);

struct SingleCopyReport {
    bool symmetric = false;
    std::optional<bool> retraction_exists;
    std::optional<std::vector<Element>> witness;  // pi-bar(K_i)
    std::optional<long long> retraction_count;
    std::optional<bool> color;
};

SingleCopyReport single_copy_color_check(const Datum& e);

}  // namespace chroma
