#include "chroma/errors.hpp"
#include "chroma/extensions.hpp"

#include <numeric>

namespace chroma {

Element ring_mul(const FinAbGroup& ring, const Element& a, const Element& b) {
    std::vector<long long> r(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i) r[i] = a.r[i] * b.r[i];
    return ring.make(std::move(r));
}

namespace {

bool is_unit(const FinAbGroup& ring, const Element& a) {
    for (std::size_t i = 0; i < ring.rank(); ++i)
        if (std::gcd(a.r[i], ring.orders()[i]) != 1) return false;
    return true;
}

}  // namespace

SommerData sommer_family(const SommerInput& in) {
    const FinAbGroup& R = in.ring;
    const FiniteGroup& G = in.Gamma;
    const std::size_t ng = G.size();
    if (in.nu.size() != ng || in.psi.size() != ng || in.phi.size() != ng) throw DimensionMismatch("ring data must be tabulated on Gamma");
    for (auto& row : in.phi)
        if (row.size() != ng) throw DimensionMismatch("phi must be |Gamma| x |Gamma|");
    if (in.eta.r.size() != R.rank() || in.theta.r.size() != R.rank()) throw DimensionMismatch("characters have the wrong rank");
    std::vector<Element> nu, psi;
    for (auto& x : in.nu) nu.push_back(R.make(x.r));
    for (auto& x : in.psi) psi.push_back(R.make(x.r));
    std::vector<std::vector<Element>> phi(ng);
    for (std::size_t a = 0; a < ng; ++a)
        for (auto& x : in.phi[a]) phi[a].push_back(R.make(x.r));

    Element one = R.make(std::vector<long long>(R.rank(), 1));
    for (std::size_t a = 0; a < ng; ++a)
        if (!is_unit(R, nu[a])) throw ValidationError("nu takes a non-unit value");
    if (nu[G.identity()] != one) throw ValidationError("nu is not a homomorphism");
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < ng; ++b) {
            if (nu[G.mul(a, b)] != ring_mul(R, nu[a], nu[b])) throw ValidationError("nu is not a homomorphism");
            if (psi[G.mul(a, b)] != R.mul(psi[a], ring_mul(R, nu[a], psi[b]))) throw ValidationError("psi is not a 1-cocycle");
        }
    for (std::size_t a = 0; a < ng; ++a)
        if (!R.is_identity(phi[G.identity()][a]) || !R.is_identity(phi[a][G.identity()])) throw ValidationError("phi is not normalized");
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < ng; ++b)
            for (std::size_t c = 0; c < ng; ++c)
                if (R.mul(phi[a][b], phi[G.mul(a, b)][c]) != R.mul(ring_mul(R, nu[a], phi[b][c]), phi[a][G.mul(b, c)]))
                    throw ValidationError("phi is not a 2-cocycle");

    SommerData out;
    FiniteGroup L = FiniteGroup::from_abelian(R);
    out.mp = MatchedPair::trivial(L, G);
    auto elems = R.elements();
    for (std::size_t l = 0; l < elems.size(); ++l)
        for (std::size_t a = 0; a < ng; ++a) out.mp.lact[l][a] = static_cast<std::size_t>(R.index(ring_mul(R, elems[l], nu[a])));

    out.sigma = trivial_sigma(out.mp);
    for (std::size_t l = 0; l < elems.size(); ++l) {
        Element l2 = ring_mul(R, elems[l], elems[l]);
        for (std::size_t a = 0; a < ng; ++a)
            for (std::size_t b = 0; b < ng; ++b) {
                Element q = ring_mul(R, ring_mul(R, ring_mul(R, l2, nu[a]), psi[a]), psi[b]);
                out.sigma[l][a][b] = R.eval(in.eta, ring_mul(R, elems[l], phi[a][b])) + R.eval(in.theta, q);
            }
    }

    std::vector<std::vector<Rational01>> bm(R.rank(), std::vector<Rational01>(R.rank()));
    for (std::size_t i = 0; i < R.rank(); ++i) bm[i][i] = R.eval(in.theta, R.generator(i)) * 2;
    out.beta = Bicharacter(R, bm);
    for (auto& g : elems)
        for (auto& h : elems)
            if (out.beta.eval(g, h) != R.eval(in.theta, ring_mul(R, g, h)) * 2) throw Error("beta(g,h) differs from theta(gh)^2");

    out.z.assign(elems.size(), std::vector<Element>(ng));
    for (std::size_t l = 0; l < elems.size(); ++l)
        for (std::size_t a = 0; a < ng; ++a) out.z[l][a] = ring_mul(R, elems[l], psi[a]);

    auto rep = thm317_check(out.mp, out.sigma, trivial_tau(out.mp), out.z, out.beta, false);
    if (!rep.z_cocycle || !rep.compatibility) throw Error("ring data does not satisfy the sigma compatibility rule");
    return out;
}

}  // namespace chroma
