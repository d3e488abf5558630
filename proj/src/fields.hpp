#ifndef RM_FIELDS_HPP
#define RM_FIELDS_HPP

#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "upoly.hpp"

namespace rm {

// Thrown by AField::inv when the element is a zero divisor: carries a
// nontrivial monic factor of the current modulus. Dynamic evaluation
// catches it, splits the modulus and reruns per branch.
struct SplitSignal {
    UniPoly factor;
};

// The coefficient domains the generic polynomial algorithms run over. Each
// field object carries its context (modulus, truncation order, tangent
// count); elements are plain values. Required interface:
//   Elem zero/one(), add, sub, mul, neg, inv, is_zero, is_unit,
//   from_rat, from_residue, scale (by Rat).

struct QField {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    bool is_zero(const Elem& a) const { return rm::is_zero(a); }
    bool is_unit(const Elem& a) const { return !rm::is_zero(a); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem scale(const Rat& c, const Elem& a) const { return c * a; }
    Elem inv(const Elem& a) const {
        if (rm::is_zero(a)) throw MathError("inverse of zero");
        return Rat(1) / a;
    }
    Elem from_rat(const Rat& a) const { return a; }
    Elem from_residue(const UniPoly& p) const {
        if (p.degree() > 0) throw MathError("nonconstant residue used over Q");
        return p.coeff(0);
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

// A = Q[T]/<q> for monic squarefree q: a product of fields. Elements are
// reduced representatives. Inversion of a zero divisor raises SplitSignal.
struct AField {
    const UniPoly* q = nullptr;

    AField() = default;
    explicit AField(const UniPoly& modulus) : q(&modulus) {}

    using Elem = UniPoly;
    int kappa() const { return q->degree(); }
    Elem zero() const { return {}; }
    Elem one() const { return UniPoly::constant(Rat(1)); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_unit(const Elem& a) const {
        if (a.is_zero()) return false;
        return gcd(a, *q).degree() == 0;
    }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % *q; }
    Elem neg(const Elem& a) const { return -a; }
    Elem scale(const Rat& c, const Elem& a) const { return a * c; }
    Elem inv(const Elem& a) const {
        if (a.is_zero()) throw MathError("inverse of zero in A");
        UniPoly s, t;
        UniPoly g = ext_gcd(a % *q, *q, s, t);
        if (g.degree() == 0) return s % *q;
        throw SplitSignal{g};
    }
    Elem from_rat(const Rat& a) const { return UniPoly::constant(a); }
    Elem from_residue(const UniPoly& p) const { return p % *q; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

// Truncated power series over F in a local parameter eps, modulo eps^ell.
// Elements are coefficient vectors of length exactly ell.
template <class F>
struct SeriesField {
    F base;
    int ell = 1;

    SeriesField() = default;
    SeriesField(F base_, int ell_) : base(base_), ell(ell_) {}

    using BaseElem = typename F::Elem;
    using Elem = std::vector<BaseElem>;

    Elem make(const BaseElem& c0) const {
        Elem e(ell, base.zero());
        e[0] = c0;
        return e;
    }
    Elem zero() const { return Elem(ell, base.zero()); }
    Elem one() const { return make(base.one()); }
    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (!base.is_zero(c)) return false;
        return true;
    }
    // Unit in the truncated ring: unit constant term.
    bool is_unit(const Elem& a) const { return base.is_unit(a[0]); }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(ell);
        for (int i = 0; i < ell; ++i) r[i] = base.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(ell);
        for (int i = 0; i < ell; ++i) r[i] = base.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(ell);
        for (int i = 0; i < ell; ++i) r[i] = base.neg(a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r(ell, base.zero());
        for (int i = 0; i < ell; ++i) {
            if (base.is_zero(a[i])) continue;
            for (int j = 0; i + j < ell; ++j) {
                if (base.is_zero(b[j])) continue;
                r[i + j] = base.add(r[i + j], base.mul(a[i], b[j]));
            }
        }
        return r;
    }
    Elem scale(const Rat& c, const Elem& a) const {
        Elem r(ell);
        for (int i = 0; i < ell; ++i) r[i] = base.scale(c, a[i]);
        return r;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw MathError("inverse of zero series");
        if (!base.is_unit(a[0])) {
            // A nonzero zero-divisor constant term lets the base split first
            // (AField raises SplitSignal); otherwise the expansion point is bad.
            if (!base.is_zero(a[0])) (void)base.inv(a[0]);
            throw BadExpansionPoint();
        }
        // Newton iteration on x -> x(2 - a x).
        Elem x = zero();
        x[0] = base.inv(a[0]);
        int prec = 1;
        while (prec < ell) {
            prec = std::min(2 * prec, ell);
            Elem ax = mul_trunc(a, x, prec);
            Elem two_minus = zero();
            two_minus[0] = base.sub(base.add(base.one(), base.one()), ax[0]);
            for (int i = 1; i < prec; ++i) two_minus[i] = base.neg(ax[i]);
            x = mul_trunc(x, two_minus, prec);
        }
        return x;
    }
    Elem from_rat(const Rat& c) const { return make(base.from_rat(c)); }
    Elem from_residue(const UniPoly& p) const { return make(base.from_residue(p)); }
    bool equal(const Elem& a, const Elem& b) const {
        for (int i = 0; i < ell; ++i)
            if (!base.equal(a[i], b[i])) return false;
        return true;
    }

    int valuation(const Elem& a) const {
        for (int i = 0; i < ell; ++i)
            if (!base.is_zero(a[i])) return i;
        return ell;
    }

  private:
    Elem mul_trunc(const Elem& a, const Elem& b, int prec) const {
        Elem r(ell, base.zero());
        for (int i = 0; i < prec; ++i) {
            if (base.is_zero(a[i])) continue;
            for (int j = 0; i + j < prec; ++j) {
                if (base.is_zero(b[j])) continue;
                r[i + j] = base.add(r[i + j], base.mul(a[i], b[j]));
            }
        }
        return r;
    }
};

// First-order jets over F with a fixed number of tangent directions: the
// quotient F[t_1..t_m]/<(t_1..t_m)^2>.
template <class F>
struct JetField {
    F base;
    int ntan = 0;

    JetField() = default;
    JetField(F base_, int ntan_) : base(base_), ntan(ntan_) {}

    using BaseElem = typename F::Elem;
    struct Elem {
        BaseElem val;
        std::vector<BaseElem> tan;
    };

    Elem lift(const BaseElem& v) const { return {v, std::vector<BaseElem>(ntan, base.zero())}; }
    Elem zero() const { return lift(base.zero()); }
    Elem one() const { return lift(base.one()); }
    bool is_zero(const Elem& a) const {
        if (!base.is_zero(a.val)) return false;
        for (const auto& t : a.tan)
            if (!base.is_zero(t)) return false;
        return true;
    }
    bool is_unit(const Elem& a) const { return base.is_unit(a.val); }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r;
        r.val = base.add(a.val, b.val);
        r.tan.resize(ntan);
        for (int i = 0; i < ntan; ++i) r.tan[i] = base.add(a.tan[i], b.tan[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r;
        r.val = base.sub(a.val, b.val);
        r.tan.resize(ntan);
        for (int i = 0; i < ntan; ++i) r.tan[i] = base.sub(a.tan[i], b.tan[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r;
        r.val = base.neg(a.val);
        r.tan.resize(ntan);
        for (int i = 0; i < ntan; ++i) r.tan[i] = base.neg(a.tan[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r;
        r.val = base.mul(a.val, b.val);
        r.tan.resize(ntan);
        for (int i = 0; i < ntan; ++i)
            r.tan[i] = base.add(base.mul(a.val, b.tan[i]), base.mul(a.tan[i], b.val));
        return r;
    }
    Elem scale(const Rat& c, const Elem& a) const {
        Elem r;
        r.val = base.scale(c, a.val);
        r.tan.resize(ntan);
        for (int i = 0; i < ntan; ++i) r.tan[i] = base.scale(c, a.tan[i]);
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r;
        r.val = base.inv(a.val);
        r.tan.resize(ntan);
        BaseElem v2 = base.mul(r.val, r.val);
        for (int i = 0; i < ntan; ++i) r.tan[i] = base.neg(base.mul(v2, a.tan[i]));
        return r;
    }
    Elem from_rat(const Rat& c) const { return lift(base.from_rat(c)); }
    Elem from_residue(const UniPoly& p) const { return lift(base.from_residue(p)); }
    bool equal(const Elem& a, const Elem& b) const {
        if (!base.equal(a.val, b.val)) return false;
        for (int i = 0; i < ntan; ++i)
            if (!base.equal(a.tan[i], b.tan[i])) return false;
        return true;
    }
};

} // namespace rm

#endif
