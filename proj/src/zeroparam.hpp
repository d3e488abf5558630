#ifndef RM_ZEROPARAM_HPP
#define RM_ZEROPARAM_HPP

#include <optional>
#include <vector>

#include "paramcore.hpp"
#include "rng.hpp"
#include "slp.hpp"
#include "upoly.hpp"

namespace rm {

// Zero-dimensional parametrization over Q of a finite subset of C^n:
// q monic squarefree, coordinates v_i of degree < deg q, rational
// separating form with lambda(v) = T mod q. q = 1 encodes the empty set;
// n = 0 with q = T encodes the one-point space of C^0.
struct ZeroDimParam {
    int n = 0;
    UniPoly q = UniPoly::constant(Rat(1));
    std::vector<UniPoly> v;
    std::vector<Rat> lambda;

    static ZeroDimParam empty_set(int n);
    static ZeroDimParam point_space(); // n = 0, q = T
    bool is_empty() const { return q.degree() == 0; }
    int degree() const { return is_empty() ? 0 : q.degree(); }

    // Exact membership test for a rational point.
    bool contains(const std::vector<Rat>& pt) const;
    // Enumerate the rational-coordinate points (roots of q that are
    // rational); irrational points are not reported.
    std::vector<std::vector<Rat>> rational_points() const;
};

// Structural invariants; throws MathError with a description on violation.
void check_zerodim(const ZeroDimParam& p);

// Build a parametrization of an explicit rational point set.
ZeroDimParam params_from_points(const std::vector<std::vector<Rat>>& pts, int n, Rng rng);

// Re-encode under a fresh separating form (probabilistic, verified).
ZeroDimParam reparam_0(const ZeroDimParam& p, Rng rng);

ZeroDimParam change_vars_0(const ZeroDimParam& p, const LinearChange& a);
ZeroDimParam union_0(const ZeroDimParam& a, const ZeroDimParam& b, Rng rng);
ZeroDimParam union_0(const std::vector<ZeroDimParam>& ps, int n, Rng rng);
ZeroDimParam discard_0(const ZeroDimParam& a, const ZeroDimParam& b, Rng rng);
ZeroDimParam intersect_0(const ZeroDimParam& p, const Slp& g);
ZeroDimParam project_0(const ZeroDimParam& p, int e, Rng rng);
ZeroDimParam lift_0(const ZeroDimParam& p, const ZeroDimParam& r, Rng rng);

// Z(a) subset of Z(b)? Exact, probabilistic inside (discard), verified.
bool subset_of(const ZeroDimParam& a, const ZeroDimParam& b, Rng rng);

} // namespace rm

#endif
