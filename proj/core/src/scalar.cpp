#include "chroma/scalar.hpp"

#include "chroma/errors.hpp"

#include <cctype>
#include <numeric>

namespace chroma {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

Rational01::Rational01(long long num, long long den) {
    if (den <= 0) throw DomainError("root of unity needs a positive denominator");
    num = mod_ll(num, den);
    long long g = std::gcd(num, den);
    if (g == 0) g = den;
    num_ = num / g;
    den_ = den / g;
    if (num_ == 0) den_ = 1;
}

Rational01 Rational01::operator+(const Rational01& o) const {
    long long d = std::lcm(den_, o.den_);
    __int128 n = static_cast<__int128>(num_) * (d / den_) + static_cast<__int128>(o.num_) * (d / o.den_);
    return Rational01(static_cast<long long>(n % d), d);
}

Rational01 Rational01::operator-() const { return Rational01(den_ - num_, den_); }

Rational01 Rational01::operator-(const Rational01& o) const { return *this + (-o); }

Rational01 Rational01::operator*(long long k) const {
    __int128 n = static_cast<__int128>(num_) * (k % den_);
    long long r = static_cast<long long>(n % den_);
    return Rational01(r, den_);
}

std::string Rational01::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational01 Rational01::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(text, &used);
            if (used != text.size()) throw ParseError("invalid root exponent '" + text + "'", used);
            return Rational01(n, 1);
        }
        long long n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw ParseError("invalid root exponent '" + text + "'", used);
        std::string dpart = text.substr(slash + 1);
        long long d = std::stoll(dpart, &used);
        if (used != dpart.size()) throw ParseError("invalid root exponent '" + text + "'", slash + 1 + used);
        if (d <= 0) throw ParseError("nonpositive denominator in '" + text + "'", slash + 1);
        return Rational01(n, d);
    } catch (const std::logic_error&) {
        throw ParseError("invalid root exponent '" + text + "'", 0);
    }
}

Scalar::Scalar(Rational01 root, std::map<std::string, long long> exps) : root_(root) {
    for (auto& [k, v] : exps)
        if (v != 0) exps_.emplace(k, v);
}

Scalar Scalar::var(const std::string& name, long long e) {
    Scalar s;
    if (e != 0) s.exps_[name] = e;
    return s;
}

long long Scalar::exponent(const std::string& v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    r.root_ = root_ + o.root_;
    r.exps_ = exps_;
    for (auto& [k, v] : o.exps_) {
        long long e = (r.exps_[k] += v);
        if (e == 0) r.exps_.erase(k);
    }
    return r;
}

Scalar Scalar::inverse() const { return pow(-1); }

Scalar Scalar::pow(long long n) const {
    Scalar r;
    r.root_ = root_ * n;
    if (n != 0)
        for (auto& [k, v] : exps_) r.exps_[k] = v * n;
    return r;
}

std::string Scalar::to_string() const {
    std::string out;
    if (root_.num() != 0) {
        if (root_.den() == 2)
            out = "-1";
        else
            out = "zeta(" + std::to_string(root_.den()) + "," + std::to_string(root_.num()) + ")";
    }
    for (auto& [k, v] : exps_) {
        if (!out.empty()) out += "*";
        out += k;
        if (v != 1) out += "^" + std::to_string(v);
    }
    return out.empty() ? "1" : out;
}

std::string Scalar::pretty() const {
    std::string sign;
    std::string sym;
    long long n = root_.num(), d = root_.den();
    if (d == 2) {
        sign = "-";
    } else if (d == 3) {
        sym = n == 1 ? "ω" : "ω²";
    } else if (d == 6) {
        sign = "-";
        sym = n == 1 ? "ω²" : "ω";
    } else if (d == 4) {
        sign = n == 3 ? "-" : "";
        sym = "i";
    } else if (n != 0) {
        sym = "ζ(" + std::to_string(d) + "," + std::to_string(n) + ")";
    }
    std::string vars;
    bool first = true;
    for (auto& [k, v] : exps_) {
        if (!first) vars += "·";
        first = false;
        vars += k;
        if (v != 1) vars += "^" + std::to_string(v);
    }
    if (vars.empty() && sym.empty()) return sign + "1";
    return sign + vars + sym;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty scalar", pos_);
        Scalar acc = factor();
        skip();
        while (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            skip();
            acc *= factor();
            skip();
        }
        if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return acc;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(const std::string& lit) {
        if (s_.compare(pos_, lit.size(), lit) == 0) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    long long integer(bool allow_sign) {
        std::size_t start = pos_;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected integer", start);
        try {
            return std::stoll(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }

    Scalar factor() {
        std::size_t start = pos_;
        if (eat("-1")) return Scalar::minus_one();
        if (pos_ < s_.size() && s_[pos_] == '1' &&
            (pos_ + 1 == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            return Scalar::one();
        }
        if (eat("zeta(")) {
            skip();
            long long n = integer(false);
            skip();
            if (!eat(",")) throw ParseError("expected ','", pos_);
            skip();
            long long k = integer(true);
            skip();
            if (!eat(")")) throw ParseError("expected ')'", pos_);
            if (n <= 0) throw ParseError("zeta order must be positive", start);
            return Scalar::zeta(n, k);
        }
        if (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() &&
                   (std::islower(static_cast<unsigned char>(s_[pos_])) || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
                ++pos_;
            std::string name = s_.substr(b, pos_ - b);
            long long e = 1;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip();
                e = integer(true);
            }
            return Scalar::var(name, e);
        }
        throw ParseError("expected factor", start);
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).run(); }

std::optional<long long> order_of(const Scalar& a) {
    if (!a.exps().empty()) return std::nullopt;
    return a.root().den();
}

namespace {

// Solve k*x = c (mod m) for the least x >= 0.
std::optional<long long> solve_congruence(long long k, long long c, long long m) {
    k = mod_ll(k, m);
    c = mod_ll(c, m);
    long long g = std::gcd(k, m);
    if (g == 0) g = m;
    if (c % g != 0) return std::nullopt;
    long long mm = m / g;
    if (mm == 1) return 0;
    // extended Euclid for the inverse of k/g modulo mm
    long long a = (k / g) % mm, b = mm, x0 = 1, x1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    __int128 x = static_cast<__int128>(mod_ll(x0, mm)) * ((c / g) % mm);
    return static_cast<long long>(x % mm);
}

}  // namespace

std::optional<long long> solve_power(const Scalar& a, const Scalar& b) {
    std::optional<long long> forced;
    auto check_var = [&](long long ea, long long eb) -> bool {
        if (ea == 0) return eb == 0;
        if (eb % ea != 0) return false;
        long long n = eb / ea;
        if (n < 0) return false;
        if (forced && *forced != n) return false;
        forced = n;
        return true;
    };
    for (auto& [v, ea] : a.exps())
        if (!check_var(ea, b.exponent(v))) return std::nullopt;
    for (auto& [v, eb] : b.exps())
        if (a.exponent(v) == 0 && eb != 0) return std::nullopt;
    if (forced) {
        if (a.root() * *forced == b.root()) return forced;
        return std::nullopt;
    }
    // only the congruence n*ra = rb (mod 1) remains
    long long m = std::lcm(a.root().den(), b.root().den());
    long long k = a.root().num() * (m / a.root().den());
    long long c = b.root().num() * (m / b.root().den());
    return solve_congruence(k, c, m);
}

}  // namespace chroma
