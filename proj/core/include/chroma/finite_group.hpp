#pragma once

#include "chroma/groups.hpp"

#include <cstddef>
#include <vector>

namespace chroma {

// Finite group given by its Cayley table on elements 0..n-1.
class FiniteGroup {
public:
    FiniteGroup();  // trivial group
    // Validates the group law; throws ValidationError.
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);
    static FiniteGroup cyclic(std::size_t n);
    // Elements indexed as in FinAbGroup::index.
    static FiniteGroup from_abelian(const FinAbGroup& g);

    std::size_t size() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    std::size_t pow(std::size_t a, long long k) const;
    std::size_t order(std::size_t a) const;
    std::size_t exponent() const;
    bool is_abelian() const;
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    // A small generating set, chosen greedily by element index.
    std::vector<std::size_t> generators() const;
    // Every automorphism as an image table; throws SizeLimit above order 12.
    std::vector<std::vector<std::size_t>> automorphisms() const;
    bool is_automorphism(const std::vector<std::size_t>& f) const;
    bool is_homomorphism_to(const FiniteGroup& dst, const std::vector<std::size_t>& f) const;

    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
};

}  // namespace chroma
