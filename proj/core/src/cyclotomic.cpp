#include "chroma/cyclotomic.hpp"

#include "chroma/errors.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <mutex>
#include <numbers>

namespace chroma {

namespace {

std::mutex& poly_mutex() {
    static std::mutex m;
    return m;
}

std::vector<long long> compute_cyclotomic(long long n, const std::map<long long, std::vector<long long>>& known) {
    // x^n - 1 divided by Phi_d for every proper divisor d of n
    std::vector<long long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& q = known.at(d);
        long long dq = static_cast<long long>(q.size()) - 1;
        long long dp = static_cast<long long>(p.size()) - 1;
        std::vector<long long> quot(dp - dq + 1, 0);
        for (long long k = dp; k >= dq; --k) {
            long long c = p[k];
            quot[k - dq] = c;
            if (c == 0) continue;
            for (long long j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
        }
        p = quot;
    }
    return p;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) {
    if (n <= 0) throw DomainError("cyclotomic polynomial needs a positive index");
    static std::map<long long, std::vector<long long>> cache;
    std::lock_guard<std::mutex> lock(poly_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        cache.emplace(d, compute_cyclotomic(d, cache));
    }
    return cache.at(n);
}

long long euler_phi(long long n) {
    long long r = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

Cyclotomic::Cyclotomic(long long conductor) : n_(conductor) {
    if (conductor <= 0) throw DomainError("conductor must be positive");
    c_.assign(static_cast<std::size_t>(euler_phi(conductor)), Rational(0));
}

Cyclotomic::Cyclotomic(const Rational& r, long long conductor) : Cyclotomic(conductor) { c_[0] = r; }

std::vector<Rational> Cyclotomic::reduce(std::vector<Rational> poly, long long n) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t d = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > d;) {
        if (poly[k].is_zero()) continue;
        Rational c = poly[k];
        for (std::size_t j = 0; j < d; ++j)
            if (phi[j] != 0) poly[k - d + j] -= c * Rational(phi[j]);
        poly[k] = Rational(0);
    }
    poly.resize(d, Rational(0));
    return poly;
}

Cyclotomic Cyclotomic::embed(const Rational01& r, long long n) {
    if (n % r.den() != 0) throw DomainError("root order " + std::to_string(r.den()) + " does not divide conductor " + std::to_string(n));
    long long k = r.num() * (n / r.den());
    Cyclotomic out(n);
    std::vector<Rational> poly(static_cast<std::size_t>(std::max<long long>(k + 1, static_cast<long long>(out.c_.size()))), Rational(0));
    poly[k] = Rational(1);
    out.c_ = reduce(std::move(poly), n);
    return out;
}

bool Cyclotomic::is_zero() const {
    for (auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

std::optional<Rational01> Cyclotomic::as_root() const {
    long long m = n_ % 2 == 0 ? n_ : 2 * n_;
    for (long long k = 0; k < m; ++k) {
        Rational01 r(k, m);
        if (*this == embed(r, m)) return r;
    }
    return std::nullopt;
}

std::complex<double> Cyclotomic::eval() const {
    std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(n_));
    std::complex<double> acc = 0, p = 1;
    for (auto& c : c_) {
        acc += c.to_double() * p;
        p *= z;
    }
    return acc;
}

Cyclotomic Cyclotomic::lifted(long long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw DomainError("cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(m));
    long long step = m / n_;
    std::vector<Rational> poly(static_cast<std::size_t>(std::max<long long>((static_cast<long long>(c_.size()) - 1) * step + 1,
                                                                            euler_phi(m))),
                               Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) poly[k * step] = c_[k];
    Cyclotomic out(m);
    out.c_ = reduce(std::move(poly), m);
    return out;
}

void Cyclotomic::unify(const Cyclotomic& o) {
    if (o.n_ == n_ || o.n_ == 1 || o.n_ == 2) return;
    long long m = std::lcm(n_, o.n_);
    if (m != n_) *this = lifted(m);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.n_ == n_ || o.c_.size() == 1) {
        if (o.n_ == n_) {
            for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        } else {
            c_[0] += o.c_[0];
        }
        return *this;
    }
    unify(o);
    Cyclotomic b = o.lifted(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.c_.size() == 1 && o.n_ != n_) return *this *= o.c_[0];
    if (c_.size() == 1 && o.n_ != n_) {
        Rational r = c_[0];
        *this = o;
        return *this *= r;
    }
    unify(o);
    const Cyclotomic b = o.n_ == n_ ? o : o.lifted(n_);
    std::vector<Rational> poly(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            poly[i + j] += c_[i] * b.c_[j];
        }
    }
    c_ = reduce(std::move(poly), n_);
    return *this;
}

Cyclotomic& Cyclotomic::mul_root(const Rational01& r) {
    if (r.is_zero()) return *this;
    if (n_ % r.den() != 0) *this = lifted(std::lcm(n_, r.den()));
    long long k = r.num() * (n_ / r.den());
    std::vector<Rational> poly(c_.size() + static_cast<std::size_t>(k), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i + k] = c_[i];
    c_ = reduce(std::move(poly), n_);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero();
    std::size_t d = c_.size();
    // columns: this * x^j reduced
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> poly(2 * d, Rational(0));
        for (std::size_t i = 0; i < d; ++i) poly[i + j] = c_[i];
        auto col = reduce(std::move(poly), n_);
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    }
    m[0][d] = Rational(1);
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col].is_zero()) ++piv;
        if (piv == d) throw DivisionByZero();
        std::swap(m[piv], m[col]);
        Rational inv = Rational(1) / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c <= d; ++c) m[r][c] -= f * m[col][c];
        }
    }
    Cyclotomic out(n_);
    for (std::size_t i = 0; i < d; ++i) out.c_[i] = m[i][d];
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    long long m = std::lcm(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

std::string Cyclotomic::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        std::string mag = (c.sign() < 0 ? -c : c).to_string();
        std::string sign = c.sign() < 0 ? "-" : (out.empty() ? "" : "+");
        if (k == 0) {
            out += sign + mag;
        } else {
            std::string z = "zeta(" + std::to_string(n_) + "," + std::to_string(k) + ")";
            out += sign + (mag == "1" ? z : mag + "*" + z);
        }
    }
    return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty number", 0);
    Cyclotomic acc(1);
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t start = i;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (start != 0) {
            throw ParseError("expected '+' or '-'", i);
        }
        std::size_t end = i;
        int depth = 0;
        while (end < s.size()) {
            if (s[end] == '(') ++depth;
            if (s[end] == ')') --depth;
            if (depth == 0 && (s[end] == '+' || s[end] == '-') && end > i) break;
            ++end;
        }
        std::string term = s.substr(i, end - i);
        if (term.empty()) throw ParseError("empty term", i);
        Rational coef(sign);
        Cyclotomic value = Cyclotomic::one();
        auto z = term.find("zeta(");
        std::string num = term;
        if (z != std::string::npos) {
            num = term.substr(0, z);
            if (!num.empty()) {
                if (num.back() != '*') throw ParseError("expected '*' before zeta", i + z);
                num.pop_back();
            }
            auto close = term.find(')', z);
            auto comma = term.find(',', z);
            if (close == std::string::npos || comma == std::string::npos || close != term.size() - 1)
                throw ParseError("malformed zeta term", i + z);
            long long n, k;
            try {
                n = std::stoll(term.substr(z + 5, comma - z - 5));
                k = std::stoll(term.substr(comma + 1, close - comma - 1));
            } catch (const std::logic_error&) {
                throw ParseError("malformed zeta term", i + z);
            }
            if (n <= 0) throw ParseError("zeta order must be positive", i + z);
            value = Cyclotomic::embed(Rational01(k, n), n);
        }
        if (!num.empty()) {
            try {
                coef *= Rational::parse(num);
            } catch (const ParseError&) {
                throw ParseError("invalid coefficient '" + num + "'", i);
            }
        }
        value *= coef;
        acc += value;
        i = end;
    }
    return acc;
}

}  // namespace chroma
