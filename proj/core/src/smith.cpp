#include "chroma/smith.hpp"

#include "chroma/errors.hpp"
#include "chroma/scalar.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

namespace chroma {

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

long long checked(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw SizeLimit("integer overflow in Smith normal form");
    return static_cast<long long>(v);
}

// rows a <- a - q*b
void row_sub(IntMatrix& m, std::size_t a, std::size_t b, long long q) {
    for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] = checked(static_cast<__int128>(m[a][j]) - static_cast<__int128>(q) * m[b][j]);
}

void col_sub(IntMatrix& m, std::size_t a, std::size_t b, long long q) {
    for (auto& row : m) row[a] = checked(static_cast<__int128>(row[a]) - static_cast<__int128>(q) * row[b]);
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    std::size_t r = a.size();
    std::size_t c = r ? a[0].size() : 0;
    SmithForm f{a, identity(r), identity(c), {}};
    IntMatrix& d = f.D;
    std::size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        for (;;) {
            // pivot: smallest nonzero absolute value in the trailing block
            std::size_t pi = r, pj = c;
            long long best = 0;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (d[i][j] != 0 && (best == 0 || std::llabs(d[i][j]) < best)) {
                        best = std::llabs(d[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == r) break;
            std::swap(d[t], d[pi]);
            std::swap(f.U[t], f.U[pi]);
            col_swap(d, t, pj);
            col_swap(f.V, t, pj);
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d[i][t] == 0) continue;
                long long q = floor_div(d[i][t], d[t][t]);
                row_sub(d, i, t, q);
                row_sub(f.U, i, t, q);
                if (d[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d[t][j] == 0) continue;
                long long q = floor_div(d[t][j], d[t][t]);
                col_sub(d, j, t, q);
                col_sub(f.V, j, t, q);
                if (d[t][j] != 0) dirty = true;
            }
            if (dirty) continue;
            // divisibility of the trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_sub(d, t, i, -1);
                        row_sub(f.U, t, i, -1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t < r && t < c && d[t][t] < 0) {
            for (auto& x : d[t]) x = -x;
            for (auto& x : f.U[t]) x = -x;
        }
    }
    for (std::size_t i = 0; i < std::min(r, c); ++i) f.diagonal.push_back(d[i][i]);
    return f;
}

long long ModKernel::size() const {
    long long s = 1;
    for (long long o : orders) {
        if (s > std::numeric_limits<long long>::max() / o) return std::numeric_limits<long long>::max();
        s *= o;
    }
    return s;
}

namespace {

// s*a + x*b = g = gcd(a,b) for a,b >= 0 not both zero
void ext_gcd(long long a, long long b, long long& g, long long& s, long long& x) {
    if (a != 0 && b % a == 0) {
        g = a;
        s = 1;
        x = 0;
        return;
    }
    long long old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s1;
        old_s = s1;
        s1 = tmp;
        tmp = old_t - q * t1;
        old_t = t1;
        t1 = tmp;
    }
    g = old_r;
    s = old_s;
    x = old_t;
}

}  // namespace

ModKernel kernel_mod(const IntMatrix& a_in, std::size_t cols, long long n) {
    if (n <= 0) throw DomainError("modulus must be positive");
    IntMatrix a;
    for (auto& row : a_in) {
        if (row.size() != cols) throw DimensionMismatch("row length differs from column count");
        std::vector<long long> rr(cols);
        bool nz = false;
        for (std::size_t j = 0; j < cols; ++j) {
            rr[j] = mod_ll(row[j], n);
            nz = nz || rr[j] != 0;
        }
        if (nz) a.push_back(std::move(rr));
    }
    std::size_t r = a.size();
    IntMatrix v = identity(cols);
    auto mulmod = [n](long long x, long long y) { return static_cast<long long>(static_cast<__int128>(x) * y % n); };
    // rows i,k <- (s*row_i + x*row_k, -b/g*row_i + a/g*row_k)
    auto row_mix = [&](std::size_t i, std::size_t k, long long s, long long x, long long p, long long q) {
        for (std::size_t j = 0; j < cols; ++j) {
            long long ai = a[i][j], ak = a[k][j];
            a[i][j] = mod_ll(mulmod(mod_ll(s, n), ai) + mulmod(mod_ll(x, n), ak), n);
            a[k][j] = mod_ll(mulmod(mod_ll(p, n), ai) + mulmod(mod_ll(q, n), ak), n);
        }
    };
    auto col_mix = [&](IntMatrix& m, std::size_t i, std::size_t k, long long s, long long x, long long p, long long q) {
        for (auto& row : m) {
            long long ai = row[i], ak = row[k];
            row[i] = mod_ll(mulmod(mod_ll(s, n), ai) + mulmod(mod_ll(x, n), ak), n);
            row[k] = mod_ll(mulmod(mod_ll(p, n), ai) + mulmod(mod_ll(q, n), ak), n);
        }
    };
    std::vector<long long> diag;
    std::size_t t = 0;
    for (; t < std::min(r, cols); ++t) {
        std::size_t pi = r, pj = cols;
        for (std::size_t i = t; i < r && pi == r; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == r) break;
        std::swap(a[t], a[pi]);
        col_mix(a, t, pj, 0, 1, 1, 0);
        col_mix(v, t, pj, 0, 1, 1, 0);
        for (bool again = true; again;) {
            again = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a[i][t] == 0) continue;
                long long g, s, x;
                ext_gcd(a[t][t], a[i][t], g, s, x);
                row_mix(t, i, s, x, -(a[i][t] / g), a[t][t] / g);
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                long long g, s, x;
                ext_gcd(a[t][t], a[t][j], g, s, x);
                long long p = -(a[t][j] / g), q = a[t][t] / g;
                col_mix(a, t, j, s, x, p, q);
                col_mix(v, t, j, s, x, p, q);
            }
            for (std::size_t i = t + 1; i < r; ++i)
                if (a[i][t] != 0) again = true;
        }
        diag.push_back(a[t][t]);
    }
    ModKernel k;
    for (std::size_t j = 0; j < cols; ++j) {
        long long g = j < diag.size() ? std::gcd(diag[j], n) : n;
        if (g == 0) g = n;
        if (g == 1) continue;
        long long step = n / g;
        std::vector<long long> gen(cols);
        for (std::size_t i = 0; i < cols; ++i) gen[i] = mulmod(v[i][j], step);
        k.generators.push_back(std::move(gen));
        k.orders.push_back(g);
    }
    return k;
}

}  // namespace chroma
