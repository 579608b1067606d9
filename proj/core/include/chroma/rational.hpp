#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>

namespace chroma {

// Exact rational number. Small values are kept as a reduced pair of 64-bit
// integers; anything that would overflow is promoted to a GMP rational.
class Rational {
public:
    Rational() : v_(Small{0, 1}) {}
    Rational(long long n) : v_(Small{n, 1}) {}  // NOLINT: implicit from integers is intended
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    static Rational parse(const std::string& text);

    bool is_zero() const;
    bool is_one() const;
    int sign() const;
    mpq_class to_mpq() const;
    double to_double() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);

private:
    struct Small {
        std::int64_t n;
        std::int64_t d;
    };
    std::variant<Small, mpq_class> v_;

    static Rational from128(__int128 n, __int128 d);
    void demote();
};

}  // namespace chroma
