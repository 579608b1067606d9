#pragma once

#include "chroma/rational.hpp"
#include "chroma/scalar.hpp"

#include <complex>
#include <string>
#include <vector>

namespace chroma {

// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(long long n);
long long euler_phi(long long n);

// Element of Q(zeta_N), stored as a residue modulo the N-th cyclotomic
// polynomial in the power basis 1, zeta, ..., zeta^(phi(N)-1).
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(long long conductor);
    Cyclotomic(const Rational& r, long long conductor);

    static Cyclotomic zero(long long n = 1) { return Cyclotomic(n); }
    static Cyclotomic one(long long n = 1) { return Cyclotomic(Rational(1), n); }
    // zeta_N^(N*r); requires den(r) | N.
    static Cyclotomic embed(const Rational01& r, long long n);
    // Smallest-conductor embedding of a root of unity.
    static Cyclotomic root(const Rational01& r) { return embed(r, r.den()); }

    // Parse "a/b", "zeta(N,k)", "-2*zeta(12,5)", "1+zeta(3,1)" style sums.
    static Cyclotomic parse(const std::string& text);
    std::string to_string() const;

    long long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    // nullopt unless the value is exactly a root of unity.
    std::optional<Rational01> as_root() const;
    std::complex<double> eval() const;

    Cyclotomic lifted(long long m) const;
    Cyclotomic inverse() const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
    Cyclotomic& operator*=(const Rational& r);
    // Multiply in place by the root zeta^(N*r) of the current field (lifting if needed).
    Cyclotomic& mul_root(const Rational01& r);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

private:
    long long n_;
    std::vector<Rational> c_;

    void unify(const Cyclotomic& o);
    static std::vector<Rational> reduce(std::vector<Rational> poly, long long n);
};

}  // namespace chroma
