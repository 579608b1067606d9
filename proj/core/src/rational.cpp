#include "chroma/rational.hpp"

#include "chroma/errors.hpp"

#include <limits>
#include <numeric>

namespace chroma {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 x) {
    return x >= std::numeric_limits<std::int64_t>::min() + 1 && x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DivisionByZero();
    *this = from128(n, d);
}

Rational::Rational(const mpq_class& q) : v_(q) {
    std::get<mpq_class>(v_).canonicalize();
    demote();
}

Rational Rational::from128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    if (fits64(n) && fits64(d)) {
        r.v_ = Small{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    } else {
        mpq_class q(to_mpz(n), to_mpz(d));
        q.canonicalize();
        r.v_ = q;
    }
    return r;
}

void Rational::demote() {
    auto* q = std::get_if<mpq_class>(&v_);
    if (!q) return;
    const mpz_class& n = q->get_num();
    const mpz_class& d = q->get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        long nn = n.get_si();
        long dd = d.get_si();
        if (nn != std::numeric_limits<long>::min()) v_ = Small{nn, dd};
    }
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpq_class(mpz_class(text)));
        mpq_class q(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
        if (q.get_den() == 0) throw DivisionByZero();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational '" + text + "'", 0);
    }
}

bool Rational::is_zero() const {
    if (auto* s = std::get_if<Small>(&v_)) return s->n == 0;
    return std::get<mpq_class>(v_) == 0;
}

bool Rational::is_one() const {
    if (auto* s = std::get_if<Small>(&v_)) return s->n == 1 && s->d == 1;
    return std::get<mpq_class>(v_) == 1;
}

int Rational::sign() const {
    if (auto* s = std::get_if<Small>(&v_)) return (s->n > 0) - (s->n < 0);
    return sgn(std::get<mpq_class>(v_));
}

mpq_class Rational::to_mpq() const {
    if (auto* s = std::get_if<Small>(&v_)) return mpq_class(static_cast<long>(s->n), static_cast<long>(s->d));
    return std::get<mpq_class>(v_);
}

double Rational::to_double() const {
    if (auto* s = std::get_if<Small>(&v_)) return static_cast<double>(s->n) / static_cast<double>(s->d);
    return std::get<mpq_class>(v_).get_d();
}

std::string Rational::to_string() const {
    if (auto* s = std::get_if<Small>(&v_)) {
        if (s->d == 1) return std::to_string(s->n);
        return std::to_string(s->n) + "/" + std::to_string(s->d);
    }
    return std::get<mpq_class>(v_).get_str();
}

Rational Rational::operator-() const {
    if (auto* s = std::get_if<Small>(&v_)) {
        Rational r;
        r.v_ = Small{-s->n, s->d};
        return r;
    }
    return Rational(mpq_class(-std::get<mpq_class>(v_)));
}

Rational& Rational::operator+=(const Rational& o) {
    auto* a = std::get_if<Small>(&v_);
    auto* b = std::get_if<Small>(&o.v_);
    if (a && b) {
        if (a->d == 1 && b->d == 1) {
            __int128 n = static_cast<__int128>(a->n) + b->n;
            if (fits64(n)) {
                a->n = static_cast<std::int64_t>(n);
                return *this;
            }
        }
        *this = from128(static_cast<__int128>(a->n) * b->d + static_cast<__int128>(b->n) * a->d,
                        static_cast<__int128>(a->d) * b->d);
        return *this;
    }
    *this = Rational(mpq_class(to_mpq() + o.to_mpq()));
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    auto* a = std::get_if<Small>(&v_);
    auto* b = std::get_if<Small>(&o.v_);
    if (a && b) {
        if (a->d == 1 && b->d == 1) {
            __int128 n = static_cast<__int128>(a->n) * b->n;
            if (fits64(n)) {
                a->n = static_cast<std::int64_t>(n);
                return *this;
            }
        }
        *this = from128(static_cast<__int128>(a->n) * b->n, static_cast<__int128>(a->d) * b->d);
        return *this;
    }
    *this = Rational(mpq_class(to_mpq() * o.to_mpq()));
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    auto* a = std::get_if<Small>(&v_);
    auto* b = std::get_if<Small>(&o.v_);
    if (a && b) {
        *this = from128(static_cast<__int128>(a->n) * b->d, static_cast<__int128>(a->d) * b->n);
        return *this;
    }
    *this = Rational(mpq_class(to_mpq() / o.to_mpq()));
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    auto* x = std::get_if<Rational::Small>(&a.v_);
    auto* y = std::get_if<Rational::Small>(&b.v_);
    if (x && y) return x->n == y->n && x->d == y->d;
    if (x || y) return false;  // both canonical: a big value never equals a small one
    return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

bool operator<(const Rational& a, const Rational& b) {
    auto* x = std::get_if<Rational::Small>(&a.v_);
    auto* y = std::get_if<Rational::Small>(&b.v_);
    if (x && y) return static_cast<__int128>(x->n) * y->d < static_cast<__int128>(y->n) * x->d;
    return a.to_mpq() < b.to_mpq();
}

}  // namespace chroma
