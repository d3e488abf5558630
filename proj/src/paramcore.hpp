#ifndef RM_PARAMCORE_HPP
#define RM_PARAMCORE_HPP

#include <optional>
#include <vector>

#include "polyalg.hpp"

namespace rm {

// Generic zero-dimensional parametrization over a coefficient field object
// F: monic squarefree modulus q, coordinate polynomials of degree < deg q,
// and a rational separating form with lambda(v) = T mod q. The same code
// serves Q (the concrete parametrizations) and truncated-series fields
// (fibers of curves, for the one-dimensional routines).
template <class F>
struct ZeroParamG {
    PolyV<F> q;
    std::vector<PolyV<F>> v;
    std::vector<Rat> lambda;
};

namespace pcore {

// Trace of h modulo monic q: sum of h over the roots, via the power sums
// of q. psums must hold at least deg q entries (palg::power_sums).
template <class F>
typename F::Elem trace_mod(const F& f, const PolyV<F>& h,
                           const std::vector<typename F::Elem>& psums) {
    typename F::Elem acc = f.zero();
    for (std::size_t j = 0; j < h.size(); ++j) acc = f.add(acc, f.mul(h[j], psums[j]));
    return acc;
}

// Characteristic polynomial of multiplication by ell on F[T]/<q> (monic of
// degree deg q): the monic polynomial whose roots are ell(root) with
// multiplicity.
template <class F>
PolyV<F> charpoly_of(const F& f, const PolyV<F>& ell, const PolyV<F>& q) {
    const int kappa = palg::degree(q);
    auto psums = palg::power_sums(f, q, kappa);
    std::vector<typename F::Elem> t(kappa + 1, f.zero());
    PolyV<F> pw = palg::one(f);
    t[0] = f.from_rat(Rat(kappa));
    for (int m = 1; m <= kappa; ++m) {
        pw = palg::mulmod(f, pw, ell, q);
        t[m] = trace_mod(f, pw, psums);
    }
    return palg::charpoly_from_power_sums(f, t, kappa);
}

// Core transport: given (q, coords) and a new separating candidate given by
// ell = lambda(coords) mod q, produce the parametrization of the image
// multiset under coordinate functions `coords` (first `keep` of them).
// Merges points with equal ell-values via the squarefree part; fails
// (nullopt) when merged points disagree on some kept coordinate, i.e. when
// lambda fails to separate. Throws what F's inversions throw.
template <class F>
std::optional<ZeroParamG<F>> transport(const F& f, const PolyV<F>& q,
                                       const std::vector<PolyV<F>>& coords, std::size_t keep,
                                       const std::vector<Rat>& lambda, const PolyV<F>& ell) {
    const int kappa = palg::degree(q);
    PolyV<F> w = charpoly_of(f, ell, q);
    PolyV<F> wt = palg::squarefree_part(f, w);
    const int d = palg::degree(wt);
    // Solve x_i(ell) = coord_i (mod q) for each kept coordinate, unknowns of
    // degree < d.
    std::vector<std::vector<typename F::Elem>> cols(d);
    PolyV<F> pw = palg::one(f);
    for (int j = 0; j < d; ++j) {
        cols[j].assign(kappa, f.zero());
        for (std::size_t k = 0; k < pw.size(); ++k) cols[j][k] = pw[k];
        pw = palg::mulmod(f, pw, ell, q);
    }
    std::vector<std::vector<typename F::Elem>> rhss(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        rhss[i].assign(kappa, f.zero());
        for (std::size_t k = 0; k < coords[i].size(); ++k) rhss[i][k] = coords[i][k];
    }
    auto sols = palg::solve_linear_multi(f, cols, rhss);
    if (!sols) return std::nullopt;
    ZeroParamG<F> out;
    out.q = wt;
    out.lambda = lambda;
    out.v.resize(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        PolyV<F> vi = (*sols)[i];
        palg::trim(f, vi);
        out.v[i] = std::move(vi);
    }
    // The transported parametrization must satisfy lambda(v) = T mod wt.
    PolyV<F> lam = palg::zero(f);
    for (std::size_t i = 0; i < keep && i < lambda.size(); ++i)
        lam = palg::add(f, lam, palg::scale(f, f.from_rat(lambda[i]), out.v[i]));
    if (!palg::is_zero(palg::rem(f, palg::sub(f, lam, palg::variable(f)), wt)))
        return std::nullopt;
    return out;
}

// Convenience: ell from a rational form applied to coordinates.
template <class F>
PolyV<F> form_apply(const F& f, const std::vector<Rat>& lambda,
                    const std::vector<PolyV<F>>& coords, const PolyV<F>& q) {
    PolyV<F> ell = palg::zero(f);
    for (std::size_t i = 0; i < lambda.size() && i < coords.size(); ++i)
        ell = palg::add(f, ell, palg::scale(f, f.from_rat(lambda[i]), coords[i]));
    return palg::rem(f, ell, q);
}

// Union of two parametrizations sharing the same separating form. Returns
// nullopt when the form collides on distinct points across the inputs.
template <class F>
std::optional<ZeroParamG<F>> union_same_lambda(const F& f, const ZeroParamG<F>& a,
                                               const ZeroParamG<F>& b) {
    PolyV<F> g = palg::gcd_monic(f, a.q, b.q);
    if (palg::degree(g) > 0) {
        PolyV<F> shared = g;
        for (std::size_t i = 0; i < a.v.size() && palg::degree(shared) > 0; ++i) {
            PolyV<F> d = palg::rem(f, palg::sub(f, a.v[i], b.v[i]), g);
            shared = palg::gcd_monic(f, shared, d);
        }
        if (palg::degree(shared) != palg::degree(g)) return std::nullopt;
    }
    PolyV<F> bq = palg::divrem(f, b.q, g).first;
    ZeroParamG<F> out;
    out.lambda = a.lambda;
    if (palg::degree(bq) == 0) {
        out.q = a.q;
        out.v = a.v;
        return out;
    }
    out.q = palg::mul(f, a.q, bq);
    out.v.resize(a.v.size());
    for (std::size_t i = 0; i < a.v.size(); ++i)
        out.v[i] = palg::crt_pair_g(f, a.q, a.v[i], bq, palg::rem(f, b.v[i], bq));
    return out;
}

// Part of q over which the point lies in Z(R), where R is a parametrization
// of a set in the first e coordinates with separating form nu: the monic
// factor s = gcd(q, r(nu . v)). Also verifies coordinate consistency; on
// failure (nu collides) returns nullopt so the caller can re-draw nu.
template <class F>
std::optional<PolyV<F>> fiber_part(const F& f, const PolyV<F>& q,
                                   const std::vector<PolyV<F>>& coords,
                                   const PolyV<F>& r, const std::vector<PolyV<F>>& rw,
                                   const std::vector<Rat>& nu) {
    PolyV<F> ellp = form_apply(f, nu, coords, q);
    PolyV<F> c = palg::compose_mod(f, r, ellp, q);
    PolyV<F> s = palg::gcd_monic(f, q, c);
    if (palg::degree(s) == 0) return s;
    for (std::size_t i = 0; i < rw.size(); ++i) {
        PolyV<F> lhs = palg::compose_mod(f, rw[i], palg::rem(f, ellp, s), s);
        PolyV<F> rhs = palg::rem(f, coords[i], s);
        if (!palg::is_zero(palg::sub(f, lhs, rhs))) return std::nullopt;
    }
    return s;
}

} // namespace pcore

} // namespace rm

#endif
