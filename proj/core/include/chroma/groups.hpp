#pragma once

#include "chroma/scalar.hpp"

#include <compare>
#include <string>
#include <vector>

namespace chroma {

// Element of a product of cyclic groups, as a residue vector.
struct Element {
    std::vector<long long> r;
    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

// Character of a product of cyclic groups: chi(g) = sum r_i g_i / o_i (mod 1).
struct Character {
    std::vector<long long> r;
    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;
};

// Finite abelian group Z/o_1 x ... x Z/o_n, written multiplicatively.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<long long> orders);

    const std::vector<long long>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    long long size() const { return size_; }
    long long exponent() const;

    Element identity() const;
    Element generator(std::size_t i) const;
    Element make(std::vector<long long> residues) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    Element pow(const Element& a, long long k) const;
    long long order(const Element& a) const;
    bool is_identity(const Element& a) const;

    // Mixed-radix index, first coordinate fastest.
    long long index(const Element& a) const;
    Element element(long long idx) const;
    std::vector<Element> elements() const;

    // The dual group has the same invariants; characters are indexed alike.
    Rational01 eval(const Character& chi, const Element& g) const;
    Character char_mul(const Character& a, const Character& b) const;
    Character char_inv(const Character& a) const;
    Character trivial_character() const;
    Character character(long long idx) const;
    long long char_index(const Character& a) const;
    std::vector<Character> characters() const;

    // Invariant-factor form: o_1 | o_2 | ... with trivial factors dropped.
    bool is_invariant_factor_form() const;
    std::string to_string() const;

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

private:
    std::vector<long long> orders_;
    long long size_ = 1;
    void check(const Element& a) const;
};

// Homomorphism between products of cyclic groups, given by images of generators.
struct GroupHom {
    FinAbGroup src, dst;
    std::vector<Element> images;
    Element apply(const Element& a) const;
};

// Subgroup stored as its sorted element list plus a generating set.
class Subgroup {
public:
    Subgroup(FinAbGroup g, std::vector<Element> generators);
    static Subgroup from_elements(FinAbGroup g, std::vector<Element> elems);

    const FinAbGroup& group() const { return g_; }
    const std::vector<Element>& generators() const { return gens_; }
    const std::vector<Element>& elements() const { return elems_; }
    long long size() const { return static_cast<long long>(elems_.size()); }
    bool contains(const Element& a) const;
    bool is_trivial() const { return elems_.size() == 1; }

private:
    FinAbGroup g_;
    std::vector<Element> gens_;
    std::vector<Element> elems_;
    std::vector<char> member_;
};

// beta(g_i, g_j) = exp(2 pi i B[i][j]) on the standard generators.
class Bicharacter {
public:
    Bicharacter() = default;
    Bicharacter(FinAbGroup g, std::vector<std::vector<Rational01>> b);
    static Bicharacter trivial(const FinAbGroup& g);

    const FinAbGroup& group() const { return g_; }
    const std::vector<std::vector<Rational01>>& matrix() const { return b_; }

    Rational01 eval(const Element& g, const Element& h) const;
    // chi_g(h) = beta(h, g)
    Character chi(const Element& g) const;
    // chi^o_g(h) = beta(g, h)
    Character chi_o(const Element& g) const;
    GroupHom chi_map() const;
    GroupHom chi_o_map() const;

    Subgroup radical() const;
    bool is_nondegenerate() const;
    bool is_commutation_factor() const;
    bool is_symmetric() const;

    friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

private:
    FinAbGroup g_;
    std::vector<std::vector<Rational01>> b_;
};

// Characters of g trivial on s, as a subgroup of the dual (same invariants).
Subgroup perp(const Subgroup& s);

struct Quotient {
    FinAbGroup group;   // invariant-factor form
    GroupHom projection;
};
Quotient quotient(const FinAbGroup& g, const Subgroup& s);

// Invariant-factor normalization of an arbitrary product of cyclic groups.
Quotient normalize(const FinAbGroup& g);

// All bicharacters B with B_ij in (1/gcd(o_i,o_j))Z, enumerated lazily by index.
long long bicharacter_count(const FinAbGroup& g);
Bicharacter bicharacter_by_index(const FinAbGroup& g, long long idx);

}  // namespace chroma
