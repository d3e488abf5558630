#ifndef RM_ONEPARAM_HPP
#define RM_ONEPARAM_HPP

#include <optional>
#include <vector>

#include "bipoly.hpp"
#include "paramcore.hpp"
#include "rng.hpp"
#include "zeroparam.hpp"

namespace rm {

// One-dimensional parametrization over Q of an algebraic curve in C^n:
// q(U,T) squarefree with deg_U q = deg_T q = deg Z(Q), monic in T with a
// nonzero constant leading U-coefficient, coordinates with the dq/dT
// denominator convention:
//   lambda(v)  = T dq/dT mod q      (the T-side form)
//   lambda'(v) = U dq/dT mod q      (the U-side form)
// On the curve, x_i = v_i / (dq/dT) wherever the denominator is nonzero.
// q = 1 encodes the empty curve.
struct OneDimParam {
    int n = 0;
    BiPoly q = BiPoly::constant(Rat(1));
    std::vector<BiPoly> v;
    std::vector<Rat> lambda;        // T-side
    std::vector<Rat> lambda_prime;  // U-side

    static OneDimParam empty_set(int n);
    bool is_empty() const { return q.is_constant(); }
    int degree() const { return is_empty() ? 0 : q.deg_t(); }

    // Exact membership for a rational point with nonvanishing denominator.
    bool contains(const std::vector<Rat>& pt) const;
    // On-curve rational points found by scanning rational U-values.
    std::vector<std::vector<Rat>> sample_rational_points(int howmany) const;
};

void check_onedim(const OneDimParam& p);

// Exact check that every polynomial computed by slp vanishes on the curve
// (after clearing dq/dT denominators).
bool vanishes_on_curve(const Slp& slp, const OneDimParam& p);

OneDimParam change_vars_1(const OneDimParam& p, const LinearChange& a);

// Replace the T-side form; output degree is bounded by `budget` (used as
// series precision budget+1). Probabilistic, exact verification built in.
OneDimParam reparam_1_T(const OneDimParam& p, const std::vector<Rat>& new_lambda,
                        int budget, Rng rng);
// Replace the U-side form.
OneDimParam reparam_1_U(const OneDimParam& p, const std::vector<Rat>& new_lambda_prime,
                        int budget, Rng rng);

OneDimParam union_1(const OneDimParam& a, const OneDimParam& b, int budget, Rng rng);

// Zariski closure of the one-dimensional part of pi_e(Z(p)).
OneDimParam project_1(const OneDimParam& p, int e, int budget, Rng rng);

// Closure of Z(p) minus the fiber pi_e^{-1}(Z(r)): removes the components
// lying over the finite set Z(r).
OneDimParam discard_fiber_1(const OneDimParam& p, const ZeroDimParam& r, int budget, Rng rng);

// --- series-side helpers shared with the solvers ----------------------------

using SF = SeriesField<QField>;

// Truncated expansion of p(x0 + eps) to order ell.
std::vector<Rat> shift_series(const UniPoly& p, const Rat& x0, int ell);
// Inverse: sum c_k (X - x0)^k as a polynomial.
UniPoly unshift_series(const std::vector<Rat>& c, const Rat& x0);

// Fiber of the curve at lambda' = u0 + eps as a zero-dimensional
// parametrization over Q[[eps]]/(eps^ell), coordinates denominator-free.
// Throws BadExpansionPoint when u0 is unsuitable.
ZeroParamG<SF> fiber_at_u(const OneDimParam& p, const Rat& u0, int ell);
// Fiber at lambda = t0 + eps, with the roles of U and T exchanged (labels
// carry the lambda'-values).
ZeroParamG<SF> fiber_at_t(const OneDimParam& p, const Rat& t0, int ell);

// Rebuild a curve from a series fiber: the inverse of fiber_at_u/fiber_at_t.
// `uside == false` means the fiber was taken along T (fiber_at_t). When
// strip_vertical is set, components whose plane image is independent of the
// fiber parameter (projections of point-images) are removed. The lambda'
// (resp. lambda) of the result is supplied by the caller and verified.
OneDimParam reconstruct_curve(const ZeroParamG<SF>& zp, const Rat& x0, bool uside, int n,
                              const std::vector<Rat>& lambda_t,
                              const std::vector<Rat>& lambda_u, bool strip_vertical,
                              bool check_t_identity, bool check_u_identity);

} // namespace rm

#endif
