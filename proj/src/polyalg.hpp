#ifndef RM_POLYALG_HPP
#define RM_POLYALG_HPP

#include <optional>
#include <vector>

#include "fields.hpp"

namespace rm {

// Dense univariate polynomials over an arbitrary coefficient field object F
// (see fields.hpp), lowest degree first, trailing zeros trimmed.
template <class F>
using PolyV = std::vector<typename F::Elem>;

namespace palg {

template <class F>
void trim(const F& f, PolyV<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class T>
int degree(const std::vector<T>& a) { return static_cast<int>(a.size()) - 1; }

template <class T>
bool is_zero(const std::vector<T>& a) { return a.empty(); }

template <class F>
PolyV<F> zero(const F&) { return {}; }

template <class F>
PolyV<F> constant(const F& f, const typename F::Elem& c) {
    PolyV<F> r;
    if (!f.is_zero(c)) r.push_back(c);
    return r;
}

template <class F>
PolyV<F> one(const F& f) { return constant(f, f.one()); }

template <class F>
PolyV<F> variable(const F& f) {
    PolyV<F> r(2, f.zero());
    r[1] = f.one();
    return r;
}

template <class F>
PolyV<F> add(const F& f, const PolyV<F>& a, const PolyV<F>& b) {
    PolyV<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    trim(f, r);
    return r;
}

template <class F>
PolyV<F> sub(const F& f, const PolyV<F>& a, const PolyV<F>& b) {
    PolyV<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    trim(f, r);
    return r;
}

template <class F>
PolyV<F> neg(const F& f, const PolyV<F>& a) {
    PolyV<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.neg(a[i]);
    return r;
}

template <class F>
PolyV<F> mul(const F& f, const PolyV<F>& a, const PolyV<F>& b) {
    if (a.empty() || b.empty()) return {};
    PolyV<F> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (f.is_zero(b[j])) continue;
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    trim(f, r);
    return r;
}

template <class F>
PolyV<F> scale(const F& f, const typename F::Elem& c, const PolyV<F>& a) {
    if (f.is_zero(c)) return {};
    PolyV<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    trim(f, r);
    return r;
}

template <class F>
PolyV<F> derivative(const F& f, const PolyV<F>& a) {
    if (a.size() <= 1) return {};
    PolyV<F> r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.scale(Rat((long)i), a[i]);
    trim(f, r);
    return r;
}

template <class F>
typename F::Elem eval(const F& f, const PolyV<F>& a, const typename F::Elem& x) {
    typename F::Elem acc = f.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

template <class F>
bool is_monic(const F& f, const PolyV<F>& a) {
    return !a.empty() && f.equal(a.back(), f.one());
}

// Division with a unit leading coefficient in the divisor. Throws whatever
// f.inv throws when lc(d) is not a unit.
template <class F>
std::pair<PolyV<F>, PolyV<F>> divrem(const F& f, const PolyV<F>& a, const PolyV<F>& d) {
    if (d.empty()) throw MathError("generic division by zero polynomial");
    if (degree(a) < degree(d)) return {PolyV<F>{}, a};
    const typename F::Elem invlc = f.inv(d.back());
    PolyV<F> rem = a;
    PolyV<F> quo(a.size() - d.size() + 1, f.zero());
    for (int k = degree(a); k >= degree(d); --k) {
        typename F::Elem q = f.mul(rem[k], invlc);
        if (f.is_zero(q)) continue;
        quo[k - degree(d)] = q;
        for (std::size_t i = 0; i < d.size(); ++i)
            rem[k - degree(d) + i] = f.sub(rem[k - degree(d) + i], f.mul(q, d[i]));
    }
    trim(f, rem);
    trim(f, quo);
    return {quo, rem};
}

template <class F>
PolyV<F> rem(const F& f, const PolyV<F>& a, const PolyV<F>& d) {
    return divrem(f, a, d).second;
}

template <class F>
PolyV<F> make_monic(const F& f, const PolyV<F>& a) {
    if (a.empty()) throw MathError("make_monic of zero");
    if (f.equal(a.back(), f.one())) return a;
    return scale(f, f.inv(a.back()), a);
}

// Monic Euclidean gcd; over a product of fields the inversion of a leading
// coefficient can raise SplitSignal, which is the dynamic-evaluation hook.
template <class F>
PolyV<F> gcd_monic(const F& f, const PolyV<F>& a, const PolyV<F>& b) {
    PolyV<F> x = a, y = b;
    while (!y.empty()) {
        y = make_monic(f, y);
        PolyV<F> r = rem(f, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    return make_monic(f, x);
}

template <class F>
PolyV<F> squarefree_part(const F& f, const PolyV<F>& a) {
    if (a.empty()) throw MathError("squarefree part of zero");
    if (degree(a) == 0) return one(f);
    PolyV<F> g = gcd_monic(f, a, derivative(f, a));
    return make_monic(f, divrem(f, a, g).first);
}

// Extended gcd restricted to what inversion mod a monic modulus needs:
// returns s with s*a = g mod m, g the monic gcd.
template <class F>
std::pair<PolyV<F>, PolyV<F>> half_ext_gcd(const F& f, const PolyV<F>& a, const PolyV<F>& m) {
    PolyV<F> r0 = a, r1 = m;
    PolyV<F> s0 = one(f), s1;
    while (!r1.empty()) {
        auto lcinv = f.inv(r1.back());
        PolyV<F> r1m = scale(f, lcinv, r1);
        PolyV<F> s1m = scale(f, lcinv, s1);
        auto [q, r] = divrem(f, r0, r1m);
        PolyV<F> s2 = sub(f, s0, mul(f, q, s1m));
        r0 = std::move(r1m);
        r1 = std::move(r);
        s0 = std::move(s1m);
        s1 = std::move(s2);
    }
    if (r0.empty()) return {r0, s0};
    auto lcinv = f.inv(r0.back());
    return {scale(f, lcinv, r0), scale(f, lcinv, s0)};
}

// Inverse of a modulo monic m; nullopt when gcd(a, m) is a nontrivial
// divisor g (returned through *obstruction when requested).
template <class F>
std::optional<PolyV<F>> invert_mod(const F& f, const PolyV<F>& a, const PolyV<F>& m,
                                   PolyV<F>* obstruction = nullptr) {
    auto [g, s] = half_ext_gcd(f, rem(f, a, m), m);
    if (degree(g) != 0) {
        if (obstruction) *obstruction = g;
        return std::nullopt;
    }
    return rem(f, s, m);
}

template <class F>
PolyV<F> mulmod(const F& f, const PolyV<F>& a, const PolyV<F>& b, const PolyV<F>& m) {
    return rem(f, mul(f, a, b), m);
}

// h(g) mod m by Horner.
template <class F>
PolyV<F> compose_mod(const F& f, const PolyV<F>& h, const PolyV<F>& g, const PolyV<F>& m) {
    PolyV<F> acc;
    for (int i = degree(h); i >= 0; --i) {
        acc = rem(f, add(f, mul(f, acc, g), constant(f, h[i])), m);
    }
    return acc;
}

// Power sums p_0..p_k of the roots of a monic polynomial via Newton's
// identities (ring operations and integer scalings only).
template <class F>
std::vector<typename F::Elem> power_sums(const F& f, const PolyV<F>& q, int k) {
    if (!is_monic(f, q)) throw MathError("power_sums needs a monic polynomial");
    const int n = degree(q);
    std::vector<typename F::Elem> p(k + 1, f.zero());
    p[0] = f.from_rat(Rat(n));
    // p_k + a_{n-1} p_{k-1} + ... + a_{n-k+1} p_1 + k a_{n-k} = 0 for monic q.
    for (int i = 1; i <= k; ++i) {
        typename F::Elem acc = f.zero();
        for (int j = 1; j < i; ++j) {
            if (i - j > n) continue;
            acc = f.add(acc, f.mul(q[n - (i - j)], p[j]));
        }
        typename F::Elem ai = (i <= n) ? q[n - i] : f.zero();
        p[i] = f.sub(f.neg(acc), f.scale(Rat(i), ai));
    }
    return p;
}

// Monic characteristic polynomial of degree n from power sums p_1..p_n.
template <class F>
PolyV<F> charpoly_from_power_sums(const F& f, const std::vector<typename F::Elem>& p, int n) {
    PolyV<F> c(n + 1, f.zero());
    c[n] = f.one();
    // e_k = -(p_k + sum_{i=1}^{k-1} e_i p_{k-i}) / k; coeff(n-k) = e_k with
    // sign convention q = T^n + sum (-1)^k e_k T^{n-k} ... use Newton:
    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i with e_0 = 1.
    std::vector<typename F::Elem> e(n + 1, f.zero());
    e[0] = f.one();
    for (int k = 1; k <= n; ++k) {
        typename F::Elem acc = f.zero();
        for (int i = 1; i <= k; ++i) {
            typename F::Elem term = f.mul(e[k - i], p[i]);
            if (i % 2 == 0) term = f.neg(term);
            acc = f.add(acc, term);
        }
        e[k] = f.scale(Rat(1, k), acc);
    }
    for (int k = 1; k <= n; ++k) {
        typename F::Elem ck = e[k];
        if (k % 2) ck = f.neg(ck);
        c[n - k] = ck;
    }
    trim(f, c);
    return c;
}

// Resultant by the Euclidean scheme over a ring: every nonzero leading
// coefficient met along the remainder sequence must be a unit; a nonzero
// non-unit raises SubresultantNotUnit (after letting f.inv signal a split
// first when it can).
template <class F>
typename F::Elem resultant(const F& f, const PolyV<F>& a, const PolyV<F>& b) {
    if (a.empty() || b.empty()) return f.zero();
    PolyV<F> x = a, y = b;
    typename F::Elem acc = f.one();
    bool negate = false;
    while (true) {
        const int m = degree(x), n = degree(y);
        if (n == 0) {
            typename F::Elem c = y[0];
            typename F::Elem pw = f.one();
            for (int i = 0; i < m; ++i) pw = f.mul(pw, c);
            acc = f.mul(acc, pw);
            break;
        }
        if (!f.is_unit(y.back())) {
            (void)f.inv(y.back()); // may raise SplitSignal
            throw SubresultantNotUnit();
        }
        PolyV<F> r = rem(f, x, y);
        if (r.empty()) return f.zero();
        const int c = degree(r);
        typename F::Elem pw = f.one();
        for (int i = 0; i < m - c; ++i) pw = f.mul(pw, y.back());
        acc = f.mul(acc, pw);
        if (m % 2 && n % 2) negate = !negate;
        x = std::move(y);
        y = std::move(r);
    }
    if (negate) acc = f.neg(acc);
    return acc;
}

// CRT over a generic field: value congruent to v1 mod m1 and v2 mod m2.
template <class F>
PolyV<F> crt_pair_g(const F& f, const PolyV<F>& m1, const PolyV<F>& v1,
                    const PolyV<F>& m2, const PolyV<F>& v2) {
    auto inv = invert_mod(f, m1, m2);
    if (!inv) throw ModuliNotCoprime();
    PolyV<F> h = mulmod(f, rem(f, sub(f, v2, v1), m2), *inv, m2);
    return rem(f, add(f, v1, mul(f, m1, h)), mul(f, m1, m2));
}

// Exact linear solve A x = rhs with A given by columns; Gauss-Jordan row
// reduction with unit pivots, then a verification of the candidate against
// the original system (which also detects inconsistency). Throws when no
// unit pivot is available but nonzero entries remain in a column (series:
// bad expansion point; product of fields: split).
template <class F>
std::optional<std::vector<typename F::Elem>> solve_linear(
    const F& f, const std::vector<std::vector<typename F::Elem>>& cols,
    const std::vector<typename F::Elem>& rhs) {
    const std::size_t ncols = cols.size();
    const std::size_t nrows = rhs.size();
    // Row-major augmented working copy.
    std::vector<std::vector<typename F::Elem>> m(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        m[r].resize(ncols + 1, f.zero());
        for (std::size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
        m[r][ncols] = rhs[r];
    }
    std::vector<int> pivot_row_of_col(ncols, -1);
    std::vector<bool> row_used(nrows, false);
    for (std::size_t c = 0; c < ncols; ++c) {
        int pr = -1;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (row_used[r]) continue;
            if (f.is_unit(m[r][c])) { pr = (int)r; break; }
        }
        if (pr < 0) {
            for (std::size_t r = 0; r < nrows; ++r) {
                if (row_used[r]) continue;
                if (!f.is_zero(m[r][c])) (void)f.inv(m[r][c]);
            }
            continue; // dependent column
        }
        row_used[pr] = true;
        pivot_row_of_col[c] = pr;
        const typename F::Elem piv = f.inv(m[pr][c]);
        for (std::size_t k = 0; k <= ncols; ++k) m[pr][k] = f.mul(m[pr][k], piv);
        for (std::size_t r = 0; r < nrows; ++r) {
            if ((int)r == pr || f.is_zero(m[r][c])) continue;
            const typename F::Elem factor = m[r][c];
            for (std::size_t k = 0; k <= ncols; ++k)
                m[r][k] = f.sub(m[r][k], f.mul(factor, m[pr][k]));
        }
    }
    std::vector<typename F::Elem> x(ncols, f.zero());
    for (std::size_t c = 0; c < ncols; ++c)
        if (pivot_row_of_col[c] >= 0) x[c] = m[pivot_row_of_col[c]][ncols];
    // Verify against the original system.
    for (std::size_t r = 0; r < nrows; ++r) {
        typename F::Elem acc = f.zero();
        for (std::size_t c = 0; c < ncols; ++c)
            acc = f.add(acc, f.mul(cols[c][r], x[c]));
        if (!f.is_zero(f.sub(acc, rhs[r]))) return std::nullopt;
    }
    return x;
}

// Same with several right-hand sides sharing one elimination. Returns
// nullopt when any of them is inconsistent.
template <class F>
std::optional<std::vector<std::vector<typename F::Elem>>> solve_linear_multi(
    const F& f, const std::vector<std::vector<typename F::Elem>>& cols,
    const std::vector<std::vector<typename F::Elem>>& rhss) {
    const std::size_t ncols = cols.size();
    const std::size_t nrhs = rhss.size();
    if (nrhs == 0) return std::vector<std::vector<typename F::Elem>>{};
    const std::size_t nrows = rhss[0].size();
    std::vector<std::vector<typename F::Elem>> m(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        m[r].resize(ncols + nrhs, f.zero());
        for (std::size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
        for (std::size_t k = 0; k < nrhs; ++k) m[r][ncols + k] = rhss[k][r];
    }
    std::vector<int> pivot_row_of_col(ncols, -1);
    std::vector<bool> row_used(nrows, false);
    for (std::size_t c = 0; c < ncols; ++c) {
        int pr = -1;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (row_used[r]) continue;
            if (f.is_unit(m[r][c])) { pr = (int)r; break; }
        }
        if (pr < 0) {
            for (std::size_t r = 0; r < nrows; ++r) {
                if (row_used[r]) continue;
                if (!f.is_zero(m[r][c])) (void)f.inv(m[r][c]);
            }
            continue;
        }
        row_used[pr] = true;
        pivot_row_of_col[c] = pr;
        const typename F::Elem piv = f.inv(m[pr][c]);
        for (std::size_t k = 0; k < ncols + nrhs; ++k) m[pr][k] = f.mul(m[pr][k], piv);
        for (std::size_t r = 0; r < nrows; ++r) {
            if ((int)r == pr || f.is_zero(m[r][c])) continue;
            const typename F::Elem factor = m[r][c];
            for (std::size_t k = 0; k < ncols + nrhs; ++k)
                m[r][k] = f.sub(m[r][k], f.mul(factor, m[pr][k]));
        }
    }
    std::vector<std::vector<typename F::Elem>> xs(nrhs,
                                                  std::vector<typename F::Elem>(ncols, f.zero()));
    for (std::size_t k = 0; k < nrhs; ++k)
        for (std::size_t c = 0; c < ncols; ++c)
            if (pivot_row_of_col[c] >= 0) xs[k][c] = m[pivot_row_of_col[c]][ncols + k];
    for (std::size_t k = 0; k < nrhs; ++k)
        for (std::size_t r = 0; r < nrows; ++r) {
            typename F::Elem acc = f.zero();
            for (std::size_t c = 0; c < ncols; ++c)
                acc = f.add(acc, f.mul(cols[c][r], xs[k][c]));
            if (!f.is_zero(f.sub(acc, rhss[k][r]))) return std::nullopt;
        }
    return xs;
}

} // namespace palg

} // namespace rm

#endif
