#include "oneparam.hpp"

#include <algorithm>

#include "slp.hpp"

namespace rm {

namespace {

const QField kQ{};

std::vector<Rat> draw_form(Rng& rng, int n) {
    std::vector<Rat> l(n);
    for (auto& c : l) c = Rat(rng.draw_nonzero(kCoeffBound));
    return l;
}

Rat draw_point(Rng& rng) { return Rat(rng.draw_int(-kExpansionBound, kExpansionBound)); }

// lambda(v) - m * dq/dT mod q, where m is T or U.
BiPoly form_identity_residue(const OneDimParam& p, const std::vector<Rat>& form, bool t_side) {
    BiPoly acc;
    for (int i = 0; i < p.n; ++i)
        if (!is_zero(form[i])) acc = acc + p.v[i] * form[i];
    BiPoly qt = p.q.derivative_t();
    BiPoly m = t_side ? BiPoly::from_T(UniPoly::variable()) : BiPoly::from_U(UniPoly::variable());
    return (acc - m * qt).rem_t(p.q);
}

} // namespace

OneDimParam OneDimParam::empty_set(int n) {
    OneDimParam p;
    p.n = n;
    p.q = BiPoly::constant(Rat(1));
    p.v.assign(n, BiPoly{});
    p.lambda.assign(n, Rat(0));
    p.lambda_prime.assign(n, Rat(0));
    return p;
}

bool OneDimParam::contains(const std::vector<Rat>& pt) const {
    if ((int)pt.size() != n) throw SizeMismatch("contains: wrong dimension");
    if (is_empty()) return false;
    Rat t(0), u(0);
    for (int i = 0; i < n; ++i) {
        t += lambda[i] * pt[i];
        u += lambda_prime[i] * pt[i];
    }
    if (!is_zero(q.eval(u, t))) return false;
    Rat den = q.derivative_t().eval(u, t);
    if (is_zero(den)) return false; // not decided at a critical plane point
    for (int i = 0; i < n; ++i)
        if (v[i].eval(u, t) != den * pt[i]) return false;
    return true;
}

std::vector<std::vector<Rat>> OneDimParam::sample_rational_points(int howmany) const {
    std::vector<std::vector<Rat>> pts;
    if (is_empty()) return pts;
    BiPoly qt = q.derivative_t();
    for (long uu = 0; (int)pts.size() < howmany && uu <= 50; ++uu) {
        for (long su : {1L, -1L}) {
            Rat u(su * uu);
            UniPoly fiber = q.eval_u(u);
            if (fiber.degree() <= 0) continue;
            for (const Rat& t : rational_roots(fiber)) {
                Rat den = qt.eval(u, t);
                if (is_zero(den)) continue;
                std::vector<Rat> pt(n);
                for (int i = 0; i < n; ++i) pt[i] = v[i].eval(u, t) / den;
                if (std::find(pts.begin(), pts.end(), pt) == pts.end()) pts.push_back(pt);
                if ((int)pts.size() >= howmany) break;
            }
            if (su == 1 && uu == 0) break; // 0 == -0
        }
    }
    return pts;
}

void check_onedim(const OneDimParam& p) {
    if ((int)p.v.size() != p.n || (int)p.lambda.size() != p.n ||
        (int)p.lambda_prime.size() != p.n)
        throw MathError("onedim: arity mismatch");
    if (p.q.is_zero()) throw MathError("onedim: zero modulus");
    if (p.is_empty()) return;
    UniPoly lct = p.q.lc_t();
    if (!lct.is_constant() || !lct.is_one()) throw MathError("onedim: q not monic in T");
    UniPoly lcu = p.q.lc_u();
    if (!lcu.is_constant()) throw MathError("onedim: leading U-coefficient not constant");
    if (p.q.deg_u() != p.q.deg_t()) throw MathError("onedim: deg_U != deg_T");
    for (const auto& vi : p.v)
        if (vi.deg_t() >= p.q.deg_t()) throw MathError("onedim: coordinate T-degree");
    // Squarefree: gcd with dq/dT trivial in Q(U)[T].
    BiPoly g = gcd_t(p.q, p.q.derivative_t());
    if (g.deg_t() > 0) throw MathError("onedim: q not squarefree");
    if (!form_identity_residue(p, p.lambda, true).is_zero())
        throw MathError("onedim: lambda identity fails");
    if (!form_identity_residue(p, p.lambda_prime, false).is_zero())
        throw MathError("onedim: lambda-prime identity fails");
}

bool vanishes_on_curve(const Slp& slp, const OneDimParam& p) {
    if (p.is_empty()) return true;
    if (slp.arity() != p.n) throw ArityMismatch("vanishes_on_curve: arity");
    // Evaluate with values tracked as pairs (numerator, power of s = dq/dT):
    // x_i = v_i / s. Addition aligns powers; everything stays reduced mod q.
    struct Frac {
        BiPoly num;
        long pow;
    };
    BiPoly s = p.q.derivative_t().rem_t(p.q);
    auto reduce = [&](const BiPoly& b) { return b.rem_t(p.q); };
    std::vector<Frac> inputs(p.n);
    for (int i = 0; i < p.n; ++i) inputs[i] = {reduce(p.v[i]), 1};
    std::vector<Frac> vals(slp.length());
    auto at = [&](int idx) -> const Frac& {
        return idx <= 0 ? inputs[idx + p.n - 1] : vals[idx - 1];
    };
    auto align = [&](const Frac& a, const Frac& b, bool subtract) {
        Frac r;
        long target = std::max(a.pow, b.pow);
        BiPoly na = a.num, nb = b.num;
        for (long k = a.pow; k < target; ++k) na = reduce(na * s);
        for (long k = b.pow; k < target; ++k) nb = reduce(nb * s);
        r.num = subtract ? na - nb : na + nb;
        r.pow = target;
        return r;
    };
    for (std::size_t i = 0; i < slp.length(); ++i) {
        const auto& ins = slp.instructions()[i];
        switch (ins.op) {
            case Slp::Op::Const: {
                if (ins.c.degree() > 0) throw MathError("vanishes_on_curve: nonrational constant");
                vals[i] = {BiPoly::constant(ins.c.coeff(0)), 0};
                break;
            }
            case Slp::Op::Add: vals[i] = align(at(ins.a), at(ins.b), false); break;
            case Slp::Op::Sub: vals[i] = align(at(ins.a), at(ins.b), true); break;
            case Slp::Op::Mul: {
                const Frac &a = at(ins.a), &b = at(ins.b);
                vals[i] = {reduce(a.num * b.num), a.pow + b.pow};
                break;
            }
            case Slp::Op::Scale: {
                if (ins.c.degree() > 0) throw MathError("vanishes_on_curve: nonrational constant");
                const Frac& a = at(ins.a);
                vals[i] = {a.num * ins.c.coeff(0), a.pow};
                break;
            }
        }
    }
    for (int o : slp.outputs())
        if (!at(o).num.is_zero()) return false;
    return true;
}

OneDimParam change_vars_1(const OneDimParam& p, const LinearChange& a) {
    if (a.size() != p.n) throw SizeMismatch("change_vars_1: matrix size");
    if (p.is_empty()) return p;
    OneDimParam out;
    out.n = p.n;
    out.q = p.q;
    out.v.assign(p.n, BiPoly{});
    const auto& inv = a.inverse();
    for (int i = 0; i < p.n; ++i) {
        for (int j = 0; j < p.n; ++j)
            if (!is_zero(inv[i][j])) out.v[i] = out.v[i] + p.v[j] * inv[i][j];
        out.v[i] = out.v[i].rem_t(p.q);
    }
    out.lambda.assign(p.n, Rat(0));
    out.lambda_prime.assign(p.n, Rat(0));
    const auto& m = a.matrix();
    for (int j = 0; j < p.n; ++j)
        for (int i = 0; i < p.n; ++i) {
            out.lambda[j] += p.lambda[i] * m[i][j];
            out.lambda_prime[j] += p.lambda_prime[i] * m[i][j];
        }
    check_onedim(out);
    return out;
}

// --- series-side helpers -----------------------------------------------------

std::vector<Rat> shift_series(const UniPoly& p, const Rat& x0, int ell) {
    // Coefficients of p(x0 + eps) by repeated Horner in eps.
    std::vector<Rat> out(ell, Rat(0));
    if (p.is_zero()) return out;
    // Synthetic division: p(x0 + eps) = sum r_k eps^k with r_k from repeated
    // division of p by (X - x0).
    std::vector<Rat> c(p.coeffs());
    for (int k = 0; k < ell && !c.empty(); ++k) {
        // divide c by (X - x0): remainder is value, quotient replaces c.
        Rat rem(0);
        for (int i = (int)c.size() - 1; i >= 0; --i) {
            Rat tmp = c[i] + rem * x0;
            rem = tmp;
            if (i > 0) c[i - 1] = c[i - 1]; // no-op, kept for clarity
        }
        // Proper synthetic division:
        std::vector<Rat> quo(c.size() > 1 ? c.size() - 1 : 0);
        Rat carry(0);
        for (int i = (int)c.size() - 1; i >= 1; --i) {
            carry = c[i] + carry * x0;
            quo[i - 1] = carry;
        }
        Rat value = c[0] + carry * x0;
        out[k] = value;
        c = std::move(quo);
    }
    return out;
}

UniPoly unshift_series(const std::vector<Rat>& c, const Rat& x0) {
    // sum c_k (X - x0)^k, Horner from the top.
    UniPoly acc;
    UniPoly lin(std::vector<Rat>{-x0, Rat(1)});
    for (int k = (int)c.size() - 1; k >= 0; --k)
        acc = acc * lin + UniPoly::constant(c[k]);
    return acc;
}

namespace {

// Shift a bivariate polynomial along U: rows become series coefficients of
// a polynomial in the other variable.
PolyV<SF> shift_bipoly_u(const BiPoly& b, const Rat& u0, int ell, const SF& K) {
    const int dt = b.deg_t();
    PolyV<SF> out(dt + 1, K.zero());
    for (int j = 0; j <= dt; ++j) {
        // coefficient of T^j as a polynomial in U
        std::vector<Rat> cu(b.deg_u() + 1, Rat(0));
        for (int i = 0; i <= b.deg_u(); ++i) cu[i] = b.coeff(i, j);
        out[j] = shift_series(UniPoly(std::move(cu)), u0, ell);
    }
    palg::trim(K, out);
    return out;
}

// Shift along T: polynomial in U with series-in-(T - t0) coefficients.
PolyV<SF> shift_bipoly_t(const BiPoly& b, const Rat& t0, int ell, const SF& K) {
    const int du = b.deg_u();
    PolyV<SF> out(du + 1, K.zero());
    for (int i = 0; i <= du; ++i) out[i] = shift_series(b.coeff_u(i), t0, ell);
    palg::trim(K, out);
    return out;
}

BiPoly assemble_bipoly(const PolyV<SF>& p, const Rat& x0, bool uside) {
    // uside: series parameter is U - x0 and the polynomial variable is T.
    std::vector<UniPoly> polys(p.size());
    int maxshift = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        polys[j] = unshift_series(p[j], x0);
        maxshift = std::max(maxshift, polys[j].degree());
    }
    if (uside) {
        // rows indexed by U-power.
        std::vector<UniPoly> rows(maxshift + 1);
        for (int i = 0; i <= maxshift; ++i) {
            std::vector<Rat> c(p.size(), Rat(0));
            for (std::size_t j = 0; j < p.size(); ++j) c[j] = polys[j][i];
            rows[i] = UniPoly(std::move(c));
        }
        return BiPoly(std::move(rows));
    }
    // tside: the polynomial variable is U, series parameter is T - x0:
    // rows[u-power] = poly in T.
    std::vector<UniPoly> rows(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) rows[j] = polys[j];
    return BiPoly(std::move(rows));
}

} // namespace

ZeroParamG<SF> fiber_at_u(const OneDimParam& p, const Rat& u0, int ell) {
    SF K(kQ, ell);
    ZeroParamG<SF> out;
    out.q = shift_bipoly_u(p.q, u0, ell, K);
    if (!palg::is_monic(K, out.q)) throw MathError("fiber_at_u: q not monic in T");
    PolyV<SF> dq = shift_bipoly_u(p.q.derivative_t(), u0, ell, K);
    auto inv = palg::invert_mod(K, dq, out.q);
    if (!inv) throw BadExpansionPoint("fiber_at_u: dq/dT not invertible");
    out.v.resize(p.n);
    for (int i = 0; i < p.n; ++i)
        out.v[i] = palg::mulmod(K, shift_bipoly_u(p.v[i], u0, ell, K), *inv, out.q);
    out.lambda = p.lambda;
    return out;
}

ZeroParamG<SF> fiber_at_t(const OneDimParam& p, const Rat& t0, int ell) {
    SF K(kQ, ell);
    ZeroParamG<SF> out;
    PolyV<SF> q = shift_bipoly_t(p.q, t0, ell, K);
    // Monic in U up to the constant leading coefficient.
    if (q.empty()) throw MathError("fiber_at_t: empty modulus");
    if (!K.is_unit(q.back())) throw BadExpansionPoint("fiber_at_t: leading coefficient");
    out.q = palg::make_monic(K, q);
    PolyV<SF> dq = shift_bipoly_t(p.q.derivative_t(), t0, ell, K);
    auto inv = palg::invert_mod(K, dq, out.q);
    if (!inv) throw BadExpansionPoint("fiber_at_t: dq/dT not invertible");
    out.v.resize(p.n);
    for (int i = 0; i < p.n; ++i)
        out.v[i] = palg::mulmod(K, shift_bipoly_t(p.v[i], t0, ell, K), *inv, out.q);
    out.lambda = p.lambda_prime;
    return out;
}

OneDimParam reconstruct_curve(const ZeroParamG<SF>& zp, const Rat& x0, bool uside, int n,
                              const std::vector<Rat>& lambda_t,
                              const std::vector<Rat>& lambda_u, bool strip_vertical,
                              bool check_t_identity, bool check_u_identity) {
    const SF K(kQ, (int)(zp.q.empty() ? 1 : zp.q[0].size()));
    if (palg::degree(zp.q) == 0) return OneDimParam::empty_set(n);
    // Assemble the modulus.
    BiPoly q = assemble_bipoly(zp.q, x0, uside);
    PolyV<SF> qK = zp.q;
    std::vector<PolyV<SF>> coords = zp.v;
    if (strip_vertical) {
        UniPoly content = uside ? q.content_in_t() : q.content_in_u();
        if (content.degree() > 0) {
            q = uside ? q.divide_by_t_poly(content) : q.divide_by_u_poly(content);
            // Divide the series modulus by the content's series image.
            PolyV<SF> cK(content.degree() + 1, K.zero());
            for (int i = 0; i <= content.degree(); ++i) cK[i] = K.from_rat(content[i]);
            auto [quo, rem] = palg::divrem(K, qK, cK);
            if (!palg::is_zero(rem)) throw MathError("reconstruct: vertical strip failed");
            qK = quo;
            for (auto& c : coords) c = palg::rem(K, c, qK);
            if (palg::degree(qK) == 0) return OneDimParam::empty_set(n);
        }
    }
    OneDimParam out;
    out.n = n;
    out.lambda = lambda_t;
    out.lambda_prime = lambda_u;
    if (uside) {
        out.q = q;
    } else {
        // Polynomial variable was U: normalize to the monic-in-T convention.
        UniPoly lct = q.lc_t();
        if (!lct.is_constant() || lct.is_zero())
            throw BadExpansionPoint("reconstruct: leading T-coefficient not constant");
        out.q = q * (Rat(1) / lct.coeff(0));
    }
    // Coordinates: v_i = x_i * dq/dT on the fiber, then reassemble.
    BiPoly dq = out.q.derivative_t();
    PolyV<SF> dqK = uside ? shift_bipoly_u(dq, x0, K.ell, K) : shift_bipoly_t(dq, x0, K.ell, K);
    dqK = palg::rem(K, dqK, qK);
    out.v.resize(n);
    for (int i = 0; i < n; ++i) {
        PolyV<SF> wi = palg::mulmod(K, coords[i], dqK, qK);
        out.v[i] = assemble_bipoly(wi, x0, uside).rem_t(out.q);
    }
    // Exact validation.
    if (out.q.deg_u() != out.q.deg_t())
        throw BadExpansionPoint("reconstruct: degree pattern broken");
    {
        UniPoly lcu = out.q.lc_u();
        if (!lcu.is_constant()) throw BadExpansionPoint("reconstruct: lc_U not constant");
        UniPoly lct = out.q.lc_t();
        if (!lct.is_constant()) throw BadExpansionPoint("reconstruct: lc_T not constant");
    }
    auto check_form = [&](const std::vector<Rat>& form, bool t_side) {
        BiPoly acc;
        for (int i = 0; i < n; ++i)
            if (!is_zero(form[i])) acc = acc + out.v[i] * form[i];
        BiPoly m = t_side ? BiPoly::from_T(UniPoly::variable())
                          : BiPoly::from_U(UniPoly::variable());
        BiPoly res = (acc - m * dq).rem_t(out.q);
        if (!res.is_zero()) throw BadExpansionPoint("reconstruct: form identity fails");
    };
    if (check_t_identity) check_form(out.lambda, true);
    if (check_u_identity) check_form(out.lambda_prime, false);
    return out;
}

// --- operations ----------------------------------------------------------------

OneDimParam reparam_1_T(const OneDimParam& p, const std::vector<Rat>& new_lambda,
                        int budget, Rng rng) {
    if (p.is_empty()) {
        OneDimParam out = p;
        out.lambda = new_lambda;
        return out;
    }
    const int ell = budget + 1;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        Rat u0 = draw_point(r);
        try {
            auto fb = fiber_at_u(p, u0, ell);
            SF K(kQ, ell);
            auto tp = pcore::transport(K, fb.q, fb.v, fb.v.size(), new_lambda,
                                       pcore::form_apply(K, new_lambda, fb.v, fb.q));
            if (!tp) throw BadExpansionPoint("reparam_1_T: form does not separate");
            auto out = reconstruct_curve(*tp, u0, true, p.n, new_lambda, p.lambda_prime,
                                         false, true, true);
            check_onedim(out);
            return out;
        } catch (const Fail&) {
            continue;
        }
    }
    throw RandomnessExhausted("reparam_1_T");
}

OneDimParam reparam_1_U(const OneDimParam& p, const std::vector<Rat>& new_lambda_prime,
                        int budget, Rng rng) {
    if (p.is_empty()) {
        OneDimParam out = p;
        out.lambda_prime = new_lambda_prime;
        return out;
    }
    const int ell = budget + 1;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        Rat t0 = draw_point(r);
        try {
            auto fb = fiber_at_t(p, t0, ell);
            SF K(kQ, ell);
            auto tp = pcore::transport(K, fb.q, fb.v, fb.v.size(), new_lambda_prime,
                                       pcore::form_apply(K, new_lambda_prime, fb.v, fb.q));
            if (!tp) throw BadExpansionPoint("reparam_1_U: form does not separate");
            auto out = reconstruct_curve(*tp, t0, false, p.n, p.lambda, new_lambda_prime,
                                         false, true, true);
            check_onedim(out);
            return out;
        } catch (const Fail&) {
            continue;
        }
    }
    throw RandomnessExhausted("reparam_1_U");
}

OneDimParam union_1(const OneDimParam& a, const OneDimParam& b, int budget, Rng rng) {
    if (a.n != b.n) throw SizeMismatch("union_1: dimension mismatch");
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        std::vector<Rat> mu = draw_form(r, a.n);
        std::vector<Rat> mup = draw_form(r, a.n);
        try {
            OneDimParam a1 = reparam_1_T(a, mu, budget, r.fork(1));
            a1 = reparam_1_U(a1, mup, budget, r.fork(2));
            OneDimParam b1 = reparam_1_T(b, mu, budget, r.fork(3));
            b1 = reparam_1_U(b1, mup, budget, r.fork(4));
            const int ell = budget + 1;
            Rat u0 = draw_point(r);
            SF K(kQ, ell);
            auto fa = fiber_at_u(a1, u0, ell);
            auto fb = fiber_at_u(b1, u0, ell);
            auto un = pcore::union_same_lambda(K, fa, fb);
            if (!un) continue; // mu collides across the inputs
            auto out = reconstruct_curve(*un, u0, true, a.n, mu, mup, false, true, true);
            check_onedim(out);
            return out;
        } catch (const Fail&) {
            continue;
        }
    }
    throw RandomnessExhausted("union_1");
}

OneDimParam project_1(const OneDimParam& p, int e, int budget, Rng rng) {
    if (e < 1 || e > p.n) throw RangeError("project_1: bad e");
    if (p.is_empty()) return OneDimParam::empty_set(e);
    if (e == p.n) return p;
    const int ell = budget + 1;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        std::vector<Rat> mu = draw_form(r, e);
        mu.resize(p.n, Rat(0));
        std::vector<Rat> mup = draw_form(r, e);
        mup.resize(p.n, Rat(0));
        try {
            // Stage 1: new T-side form in the first e variables; keep e coords.
            Rat u0 = draw_point(r);
            SF K(kQ, ell);
            auto fb = fiber_at_u(p, u0, ell);
            auto tp = pcore::transport(K, fb.q, fb.v, e, mu,
                                       pcore::form_apply(K, mu, fb.v, fb.q));
            if (!tp) continue;
            std::vector<Rat> mu_e(mu.begin(), mu.begin() + e);
            OneDimParam mid =
                reconstruct_curve(*tp, u0, true, e, mu_e, std::vector<Rat>(e, Rat(0)),
                                  true, true, false);
            if (mid.is_empty()) return OneDimParam::empty_set(e);
            // Stage 2: new U-side form in the first e variables.
            Rat t0 = draw_point(r);
            auto fb2 = fiber_at_t(mid, t0, ell);
            std::vector<Rat> mup_e(mup.begin(), mup.begin() + e);
            auto tp2 = pcore::transport(K, fb2.q, fb2.v, e, mup_e,
                                        pcore::form_apply(K, mup_e, fb2.v, fb2.q));
            if (!tp2) continue;
            auto out = reconstruct_curve(*tp2, t0, false, e, mu_e, mup_e, true, true, true);
            check_onedim(out);
            return out;
        } catch (const Fail&) {
            continue;
        }
    }
    throw RandomnessExhausted("project_1");
}

OneDimParam discard_fiber_1(const OneDimParam& p, const ZeroDimParam& rr, int budget, Rng rng) {
    if (rr.n > p.n) throw SizeMismatch("discard_fiber_1: fiber dimension");
    if (p.is_empty() || rr.n == 0) return p;
    if (rr.is_empty()) return p;
    const int ell = budget + 1;
    ZeroDimParam rcur = rr;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        Rat u0 = draw_point(r);
        try {
            SF K(kQ, ell);
            auto fb = fiber_at_u(p, u0, ell);
            std::vector<PolyV<SF>> slice(fb.v.begin(), fb.v.begin() + rcur.n);
            // Lift R into the series field.
            PolyV<SF> rK(rcur.q.degree() + 1, K.zero());
            for (int i = 0; i <= rcur.q.degree(); ++i) rK[i] = K.from_rat(rcur.q[i]);
            std::vector<PolyV<SF>> rwK(rcur.n);
            for (int i = 0; i < rcur.n; ++i) {
                rwK[i].assign(std::max(rcur.v[i].degree() + 1, 0), K.zero());
                for (int k = 0; k <= rcur.v[i].degree(); ++k)
                    rwK[i][k] = K.from_rat(rcur.v[i][k]);
                palg::trim(K, rwK[i]);
            }
            auto s = pcore::fiber_part(K, fb.q, slice, rK, rwK, rcur.lambda);
            if (!s) {
                rcur = reparam_0(rcur, rng.fork(1000 + attempt));
                continue;
            }
            if (palg::degree(*s) == 0) return p; // nothing lies over Z(R)
            ZeroParamG<SF> res;
            res.lambda = p.lambda;
            res.q = palg::divrem(K, fb.q, *s).first;
            res.v.resize(fb.v.size());
            for (std::size_t i = 0; i < fb.v.size(); ++i)
                res.v[i] = palg::rem(K, fb.v[i], res.q);
            if (palg::degree(res.q) == 0) return OneDimParam::empty_set(p.n);
            auto out = reconstruct_curve(res, u0, true, p.n, p.lambda, p.lambda_prime,
                                         false, true, true);
            check_onedim(out);
            return out;
        } catch (const Fail&) {
            continue;
        }
    }
    throw RandomnessExhausted("discard_fiber_1");
}

} // namespace rm
