#include "chroma/groups.hpp"

#include "chroma/errors.hpp"
#include "chroma/smith.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

namespace chroma {

FinAbGroup::FinAbGroup(std::vector<long long> orders) : orders_(std::move(orders)) {
    size_ = 1;
    for (long long o : orders_) {
        if (o < 1) throw DomainError("cyclic factor orders must be >= 1");
        if (size_ > std::numeric_limits<long long>::max() / o) throw SizeLimit("group too large");
        size_ *= o;
    }
}

long long FinAbGroup::exponent() const {
    long long e = 1;
    for (long long o : orders_) e = std::lcm(e, o);
    return e;
}

void FinAbGroup::check(const Element& a) const {
    if (a.r.size() != orders_.size())
        throw DomainError("element " + std::to_string(a.r.size()) + "-vector does not belong to group " + to_string());
}

Element FinAbGroup::identity() const { return Element{std::vector<long long>(orders_.size(), 0)}; }

Element FinAbGroup::generator(std::size_t i) const {
    Element e = identity();
    e.r.at(i) = orders_[i] == 1 ? 0 : 1;
    return e;
}

Element FinAbGroup::make(std::vector<long long> residues) const {
    Element e{std::move(residues)};
    check(e);
    for (std::size_t i = 0; i < orders_.size(); ++i) e.r[i] = mod_ll(e.r[i], orders_[i]);
    return e;
}

Element FinAbGroup::mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element c = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) c.r[i] = (a.r[i] + b.r[i]) % orders_[i];
    return c;
}

Element FinAbGroup::inv(const Element& a) const {
    check(a);
    Element c = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) c.r[i] = (orders_[i] - a.r[i]) % orders_[i];
    return c;
}

Element FinAbGroup::pow(const Element& a, long long k) const {
    check(a);
    Element c = a;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        c.r[i] = static_cast<long long>(mod_ll(static_cast<long long>(static_cast<__int128>(a.r[i]) * mod_ll(k, orders_[i]) % orders_[i]), orders_[i]));
    return c;
}

long long FinAbGroup::order(const Element& a) const {
    check(a);
    long long o = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) o = std::lcm(o, orders_[i] / std::gcd(a.r[i], orders_[i]));
    return o;
}

bool FinAbGroup::is_identity(const Element& a) const {
    return std::all_of(a.r.begin(), a.r.end(), [](long long x) { return x == 0; });
}

long long FinAbGroup::index(const Element& a) const {
    check(a);
    long long idx = 0, mult = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        idx += mod_ll(a.r[i], orders_[i]) * mult;
        mult *= orders_[i];
    }
    return idx;
}

Element FinAbGroup::element(long long idx) const {
    if (idx < 0 || idx >= size_) throw DomainError("element index out of range");
    Element e = identity();
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        e.r[i] = idx % orders_[i];
        idx /= orders_[i];
    }
    return e;
}

std::vector<Element> FinAbGroup::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (long long i = 0; i < size_; ++i) out.push_back(element(i));
    return out;
}

Rational01 FinAbGroup::eval(const Character& chi, const Element& g) const {
    check(g);
    if (chi.r.size() != orders_.size()) throw DomainError("character does not belong to dual of " + to_string());
    Rational01 acc;
    for (std::size_t i = 0; i < orders_.size(); ++i) acc += Rational01(chi.r[i] * g.r[i] % orders_[i], orders_[i]);
    return acc;
}

Character FinAbGroup::char_mul(const Character& a, const Character& b) const {
    return Character{mul(Element{a.r}, Element{b.r}).r};
}

Character FinAbGroup::char_inv(const Character& a) const { return Character{inv(Element{a.r}).r}; }

Character FinAbGroup::trivial_character() const { return Character{identity().r}; }

Character FinAbGroup::character(long long idx) const { return Character{element(idx).r}; }

long long FinAbGroup::char_index(const Character& a) const { return index(Element{a.r}); }

std::vector<Character> FinAbGroup::characters() const {
    std::vector<Character> out;
    for (long long i = 0; i < size_; ++i) out.push_back(character(i));
    return out;
}

bool FinAbGroup::is_invariant_factor_form() const {
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (orders_[i] == 1) return false;
        if (i + 1 < orders_.size() && orders_[i + 1] % orders_[i] != 0) return false;
    }
    return true;
}

std::string FinAbGroup::to_string() const {
    if (orders_.empty()) return "C1";
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += "xC";
        else s += "C";
        s += std::to_string(orders_[i]);
    }
    return s;
}

Element GroupHom::apply(const Element& a) const {
    Element acc = dst.identity();
    for (std::size_t i = 0; i < src.rank(); ++i) acc = dst.mul(acc, dst.pow(images.at(i), a.r.at(i)));
    return acc;
}

Subgroup::Subgroup(FinAbGroup g, std::vector<Element> generators) : g_(std::move(g)), gens_(std::move(generators)) {
    member_.assign(static_cast<std::size_t>(g_.size()), 0);
    std::deque<Element> queue{g_.identity()};
    member_[static_cast<std::size_t>(g_.index(g_.identity()))] = 1;
    while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        elems_.push_back(x);
        for (auto& s : gens_) {
            Element y = g_.mul(x, s);
            auto k = static_cast<std::size_t>(g_.index(y));
            if (!member_[k]) {
                member_[k] = 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(elems_.begin(), elems_.end(), [this](const Element& a, const Element& b) { return g_.index(a) < g_.index(b); });
}

Subgroup Subgroup::from_elements(FinAbGroup g, std::vector<Element> elems) {
    std::set<Element> given(elems.begin(), elems.end());
    given.insert(g.identity());
    Subgroup s(g, elems);
    if (s.size() != static_cast<long long>(given.size())) throw ValidationError("element list is not closed under the group law");
    return s;
}

bool Subgroup::contains(const Element& a) const { return member_.at(static_cast<std::size_t>(g_.index(a))) != 0; }

Bicharacter::Bicharacter(FinAbGroup g, std::vector<std::vector<Rational01>> b) : g_(std::move(g)), b_(std::move(b)) {
    std::size_t n = g_.rank();
    if (b_.size() != n) throw DimensionMismatch("bicharacter matrix has wrong number of rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (b_[i].size() != n) throw DimensionMismatch("bicharacter matrix has wrong number of columns");
        for (std::size_t j = 0; j < n; ++j) {
            long long g = std::gcd(g_.orders()[i], g_.orders()[j]);
            if (g % b_[i][j].den() != 0)
                throw ValidationError("entry " + b_[i][j].to_string() + " at (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not compatible with the cyclic orders");
        }
    }
}

Bicharacter Bicharacter::trivial(const FinAbGroup& g) {
    return Bicharacter(g, std::vector<std::vector<Rational01>>(g.rank(), std::vector<Rational01>(g.rank())));
}

Rational01 Bicharacter::eval(const Element& g, const Element& h) const {
    if (g.r.size() != g_.rank() || h.r.size() != g_.rank()) throw DomainError("element does not belong to the bicharacter's group");
    Rational01 acc;
    for (std::size_t i = 0; i < g_.rank(); ++i) {
        if (g.r[i] == 0) continue;
        for (std::size_t j = 0; j < g_.rank(); ++j) {
            if (h.r[j] == 0) continue;
            acc += b_[i][j] * (g.r[i] * h.r[j]);
        }
    }
    return acc;
}

Character Bicharacter::chi(const Element& g) const {
    Character c{std::vector<long long>(g_.rank(), 0)};
    for (std::size_t i = 0; i < g_.rank(); ++i) {
        Rational01 x;
        for (std::size_t j = 0; j < g_.rank(); ++j) x += b_[i][j] * g.r.at(j);
        c.r[i] = x.num() * (g_.orders()[i] / x.den()) % g_.orders()[i];
    }
    return c;
}

Character Bicharacter::chi_o(const Element& g) const {
    Character c{std::vector<long long>(g_.rank(), 0)};
    for (std::size_t j = 0; j < g_.rank(); ++j) {
        Rational01 x;
        for (std::size_t i = 0; i < g_.rank(); ++i) x += b_[i][j] * g.r.at(i);
        c.r[j] = x.num() * (g_.orders()[j] / x.den()) % g_.orders()[j];
    }
    return c;
}

GroupHom Bicharacter::chi_map() const {
    GroupHom h{g_, g_, {}};
    for (std::size_t i = 0; i < g_.rank(); ++i) h.images.push_back(Element{chi(g_.generator(i)).r});
    return h;
}

GroupHom Bicharacter::chi_o_map() const {
    GroupHom h{g_, g_, {}};
    for (std::size_t i = 0; i < g_.rank(); ++i) h.images.push_back(Element{chi_o(g_.generator(i)).r});
    return h;
}

Subgroup Bicharacter::radical() const {
    std::vector<Element> rad;
    for (auto& g : g_.elements()) {
        bool trivial = true;
        for (std::size_t j = 0; j < g_.rank() && trivial; ++j) trivial = eval(g, g_.generator(j)).is_zero();
        if (trivial) rad.push_back(g);
    }
    return Subgroup(g_, rad);
}

bool Bicharacter::is_nondegenerate() const { return radical().is_trivial(); }

bool Bicharacter::is_commutation_factor() const {
    for (std::size_t i = 0; i < g_.rank(); ++i) {
        if (!(b_[i][i] * 2).is_zero()) return false;
        for (std::size_t j = 0; j < g_.rank(); ++j)
            if (!(b_[i][j] + b_[j][i]).is_zero()) return false;
    }
    return true;
}

bool Bicharacter::is_symmetric() const {
    for (std::size_t i = 0; i < g_.rank(); ++i)
        for (std::size_t j = 0; j < g_.rank(); ++j)
            if (b_[i][j] != b_[j][i]) return false;
    return true;
}

Subgroup perp(const Subgroup& s) {
    const FinAbGroup& g = s.group();
    std::vector<Element> out;
    for (auto& c : g.characters()) {
        bool ok = true;
        for (auto& x : s.generators())
            if (!g.eval(c, x).is_zero()) {
                ok = false;
                break;
            }
        if (ok) out.push_back(Element{c.r});
    }
    return Subgroup(g, out);
}

Quotient quotient(const FinAbGroup& g, const Subgroup& s) {
    std::size_t n = g.rank();
    IntMatrix rel;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> row(n, 0);
        row[i] = g.orders()[i];
        rel.push_back(row);
    }
    for (auto& x : s.generators()) rel.push_back(x.r);
    std::vector<long long> invariants;
    std::vector<std::size_t> kept;
    SmithForm f;
    if (n > 0) {
        f = smith_normal_form(rel);
        for (std::size_t k = 0; k < n; ++k) {
            long long d = f.diagonal[k];
            if (d == 0) throw DomainError("quotient is infinite");
            if (d != 1) {
                invariants.push_back(d);
                kept.push_back(k);
            }
        }
    }
    FinAbGroup q(invariants);
    GroupHom p{g, q, {}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> img;
        for (std::size_t k = 0; k < kept.size(); ++k) img.push_back(mod_ll(f.V[i][kept[k]], invariants[k]));
        p.images.push_back(Element{img});
    }
    return Quotient{q, p};
}

Quotient normalize(const FinAbGroup& g) { return quotient(g, Subgroup(g, {})); }

long long bicharacter_count(const FinAbGroup& g) {
    long long c = 1;
    for (long long a : g.orders())
        for (long long b : g.orders()) c *= std::gcd(a, b);
    return c;
}

Bicharacter bicharacter_by_index(const FinAbGroup& g, long long idx) {
    std::size_t n = g.rank();
    std::vector<std::vector<Rational01>> b(n, std::vector<Rational01>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long d = std::gcd(g.orders()[i], g.orders()[j]);
            b[i][j] = Rational01(idx % d, d);
            idx /= d;
        }
    return Bicharacter(g, b);
}

}  // namespace chroma
