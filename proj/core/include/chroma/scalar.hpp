#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace chroma {

// A rational number in [0,1), read as the root of unity exp(2*pi*i*num/den).
class Rational01 {
public:
    Rational01() = default;
    Rational01(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational01 operator+(const Rational01& o) const;
    Rational01 operator-(const Rational01& o) const;
    Rational01 operator-() const;
    Rational01 operator*(long long k) const;
    Rational01& operator+=(const Rational01& o) { return *this = *this + o; }

    // "num/den"
    std::string to_string() const;
    static Rational01 parse(const std::string& text);

    friend bool operator==(const Rational01&, const Rational01&) = default;
    friend auto operator<=>(const Rational01&, const Rational01&) = default;

private:
    long long num_ = 0;
    long long den_ = 1;
};

// Nonzero scalar: a root of unity times a Laurent monomial in generic variables.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Rational01 root) : root_(root) {}
    Scalar(Rational01 root, std::map<std::string, long long> exps);

    static Scalar one() { return Scalar(); }
    static Scalar minus_one() { return Scalar(Rational01(1, 2)); }
    static Scalar zeta(long long n, long long k) { return Scalar(Rational01(k, n)); }
    static Scalar var(const std::string& name, long long e = 1);

    const Rational01& root() const { return root_; }
    const std::map<std::string, long long>& exps() const { return exps_; }
    long long exponent(const std::string& v) const;
    bool is_one() const { return root_.is_zero() && exps_.empty(); }
    bool is_root_of_unity() const { return exps_.empty(); }

    Scalar operator*(const Scalar& o) const;
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;
    Scalar pow(long long n) const;

    // Grammar form, e.g. "-1*q^-1", "zeta(3,1)*q", "1".
    std::string to_string() const;
    // Compact human form used by diagram text, e.g. "-q^-1", "qω²".
    std::string pretty() const;
    static Scalar parse(const std::string& text);

    friend bool operator==(const Scalar&, const Scalar&) = default;
    friend auto operator<=>(const Scalar&, const Scalar&) = default;

private:
    Rational01 root_;
    std::map<std::string, long long> exps_;
};

// Multiplicative order; nullopt means infinite.
std::optional<long long> order_of(const Scalar& a);

// Least n >= 0 with a^n = b; nullopt when no such n exists.
std::optional<long long> solve_power(const Scalar& a, const Scalar& b);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
long long mod_ll(long long a, long long m);

}  // namespace chroma
