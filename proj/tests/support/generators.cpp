#include "generators.hpp"

#include "chroma/errors.hpp"

#include <numeric>

namespace gen {

using namespace chroma;

long long uniform(Rng& rng, long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

Rational01 root(Rng& rng, long long max_den) {
    long long d = uniform(rng, 1, max_den);
    return Rational01(uniform(rng, 0, d - 1), d);
}

Scalar monomial(Rng& rng, long long max_den, long long max_exp) {
    std::map<std::string, long long> e;
    if (uniform(rng, 0, 2) > 0) e["q"] = uniform(rng, -max_exp, max_exp);
    if (uniform(rng, 0, 3) == 0) e["r"] = uniform(rng, -max_exp, max_exp);
    return Scalar(root(rng, max_den), e);
}

FinAbGroup group(Rng& rng, long long max_order) {
    std::vector<long long> orders;
    long long size = 1;
    int factors = static_cast<int>(uniform(rng, 1, 3));
    for (int i = 0; i < factors; ++i) {
        long long cap = max_order / size;
        if (cap < 2) break;
        long long o = uniform(rng, 2, cap);
        orders.push_back(o);
        size *= o;
    }
    if (orders.empty()) orders.push_back(1);
    return FinAbGroup(orders);
}

Element element(Rng& rng, const FinAbGroup& g) { return g.element(uniform(rng, 0, g.size() - 1)); }

Bicharacter bicharacter(Rng& rng, const FinAbGroup& g) {
    return bicharacter_by_index(g, uniform(rng, 0, bicharacter_count(g) - 1));
}

Bicharacter nondegenerate_bicharacter(Rng& rng, const FinAbGroup& g) {
    for (;;) {
        Bicharacter b = bicharacter(rng, g);
        if (b.is_nondegenerate()) return b;
    }
}

Datum datum(Rng& rng, std::size_t max_rank, long long max_order) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_rank)));
    FinAbGroup g = group(rng, max_order);
    Bicharacter beta = nondegenerate_bicharacter(rng, g);
    BraidingMatrix q(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                do q[i][i] = monomial(rng, 6, 2);
                while (q[i][i].is_one());
            } else if (i < j || uniform(rng, 0, 1)) {
                q[i][j] = monomial(rng, 6, 2);
            }
        }
    std::vector<Element> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(element(rng, g));
    return Datum(q, beta, t);
}

Cyclotomic cyclotomic(Rng& rng, long long n, int terms) {
    Cyclotomic c(n);
    for (int i = 0; i < terms; ++i) {
        Cyclotomic x = Cyclotomic::embed(Rational01(uniform(rng, 0, n - 1), n), n);
        x *= Rational(uniform(rng, -3, 3), uniform(rng, 1, 3));
        c += x;
    }
    return c;
}

SommerInput sommer(Rng& rng) {
    SommerInput in;
    long long n = uniform(rng, 2, 7);
    in.ring = FinAbGroup({n});
    std::vector<long long> units;
    for (long long u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) units.push_back(u);
    long long u = units[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(units.size()) - 1))];
    long long ord = 1;
    for (long long x = u % n; x != 1 % n; x = x * u % n) ++ord;
    long long m = ord * uniform(rng, 1, 2);
    if (m > 6) m = ord;
    in.Gamma = FiniteGroup::cyclic(static_cast<std::size_t>(m));
    // nu(gamma^k) = u^k; psi(gamma^k) = (1 + u + ... + u^{k-1}) c is a 1-cocycle
    long long total = 0;
    for (long long k = 0, x = 1; k < m; ++k, x = x * u % n) total = (total + x) % n;
    long long step = n / std::gcd(total, n);
    long long c = step * uniform(rng, 0, n / step - 1);
    long long pw = 1, acc = 0;
    for (long long k = 0; k < m; ++k) {
        in.nu.push_back(in.ring.make({pw}));
        in.psi.push_back(in.ring.make({acc * c}));
        acc = (acc + pw) % n;
        pw = pw * u % n;
    }
    in.phi.assign(static_cast<std::size_t>(m), std::vector<Element>(static_cast<std::size_t>(m), in.ring.identity()));
    in.eta = Character{{uniform(rng, 0, n - 1)}};
    in.theta = Character{{uniform(rng, 0, n - 1)}};
    return in;
}

TauTable twisting_tau(Rng& rng, const MatchedPair& mp, const FinAbGroup& la) {
    Bicharacter b = bicharacter(rng, la);
    TauTable tau = trivial_tau(mp);
    for (std::size_t c = 0; c < mp.Gamma.size(); ++c)
        for (std::size_t l = 0; l < mp.L.size(); ++l)
            for (std::size_t t = 0; t < mp.L.size(); ++t)
                tau[c][l][t] = b.eval(la.element(static_cast<long long>(l)), la.element(static_cast<long long>(t))) -
                               b.eval(la.element(static_cast<long long>(mp.lact[l][c])),
                                      la.element(static_cast<long long>(mp.lact[t][c])));
    return tau;
}

}  // namespace gen
