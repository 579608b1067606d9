#include "chroma/finite_group.hpp"

#include "chroma/errors.hpp"

#include <functional>
#include <numeric>

namespace chroma {

FiniteGroup::FiniteGroup() : table_{{0}}, inverse_{0} {}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw ValidationError("group table is empty");
    for (auto& row : table_) {
        if (row.size() != n) throw ValidationError("group table is not square");
        for (auto x : row)
            if (x >= n) throw ValidationError("group table entry out of range");
    }
    identity_ = n;
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) identity_ = e;
    }
    if (identity_ == n) throw ValidationError("group table has no identity");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (auto x : inverse_)
        if (x == n) throw ValidationError("group table has an element without inverse");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw ValidationError("group table is not associative");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw ValidationError("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_abelian(const FinAbGroup& g) {
    auto n = static_cast<std::size_t>(g.size());
    auto elems = g.elements();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::size_t>(g.index(g.mul(elems[a], elems[b])));
    return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::pow(std::size_t a, long long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    std::size_t r = identity_;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::size_t FiniteGroup::order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

std::size_t FiniteGroup::exponent() const {
    std::size_t e = 1;
    for (std::size_t a = 0; a < size(); ++a) e = std::lcm(e, order(a));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::size_t> FiniteGroup::generators() const {
    std::vector<std::size_t> gens;
    std::vector<char> in(size(), 0);
    in[identity_] = 1;
    std::size_t covered = 1;
    for (std::size_t a = 0; a < size() && covered < size(); ++a) {
        if (in[a]) continue;
        gens.push_back(a);
        // closure of the current span under right multiplication by all generators
        std::vector<std::size_t> stack;
        for (std::size_t x = 0; x < size(); ++x)
            if (in[x]) stack.push_back(x);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (auto s : gens) {
                std::size_t y = mul(x, s);
                if (!in[y]) {
                    in[y] = 1;
                    ++covered;
                    stack.push_back(y);
                }
            }
        }
    }
    return gens;
}

bool FiniteGroup::is_homomorphism_to(const FiniteGroup& dst, const std::vector<std::size_t>& f) const {
    if (f.size() != size()) return false;
    for (auto x : f)
        if (x >= dst.size()) return false;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (f[mul(a, b)] != dst.mul(f[a], f[b])) return false;
    return true;
}

bool FiniteGroup::is_automorphism(const std::vector<std::size_t>& f) const {
    if (!is_homomorphism_to(*this, f)) return false;
    std::vector<char> hit(size(), 0);
    for (auto x : f) hit[x] = 1;
    for (auto h : hit)
        if (!h) return false;
    return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::automorphisms() const {
    if (size() > 12) throw SizeLimit("automorphism enumeration is limited to groups of order 12");
    auto gens = generators();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> images(gens.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == gens.size()) {
            // extend along words in the generators
            std::vector<std::size_t> f(size(), size());
            f[identity_] = identity_;
            std::vector<std::size_t> stack{identity_};
            bool ok = true;
            while (!stack.empty() && ok) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    std::size_t y = mul(x, gens[i]);
                    std::size_t fy = mul(f[x], images[i]);
                    if (f[y] == size()) {
                        f[y] = fy;
                        stack.push_back(y);
                    } else if (f[y] != fy) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok && is_automorphism(f)) out.push_back(f);
            return;
        }
        for (std::size_t c = 0; c < size(); ++c)
            if (order(c) == order(gens[k])) {
                images[k] = c;
                rec(k + 1);
            }
    };
    rec(0);
    return out;
}

}  // namespace chroma
