#include "zeroparam.hpp"

#include <algorithm>

#include "bipoly.hpp"

namespace rm {

namespace {

const QField kQ{};

PolyV<QField> to_g(const UniPoly& p) { return p.coeffs(); }

UniPoly from_g(const PolyV<QField>& p) { return UniPoly(p); }

ZeroParamG<QField> to_generic(const ZeroDimParam& p) {
    ZeroParamG<QField> g;
    g.q = to_g(p.q);
    g.v.resize(p.v.size());
    for (std::size_t i = 0; i < p.v.size(); ++i) g.v[i] = to_g(p.v[i]);
    g.lambda = p.lambda;
    return g;
}

ZeroDimParam from_generic(const ZeroParamG<QField>& g, int n) {
    ZeroDimParam p;
    p.n = n;
    p.q = from_g(g.q);
    p.v.resize(g.v.size());
    for (std::size_t i = 0; i < g.v.size(); ++i) p.v[i] = from_g(g.v[i]);
    p.lambda = g.lambda;
    p.lambda.resize(n, Rat(0));
    return p;
}

std::vector<Rat> draw_form(Rng& rng, int n) {
    std::vector<Rat> l(n);
    for (auto& c : l) c = Rat(rng.draw_nonzero(kCoeffBound));
    return l;
}

} // namespace

ZeroDimParam ZeroDimParam::empty_set(int n) {
    ZeroDimParam p;
    p.n = n;
    p.q = UniPoly::constant(Rat(1));
    p.v.assign(n, UniPoly{});
    p.lambda.assign(n, Rat(0));
    return p;
}

ZeroDimParam ZeroDimParam::point_space() {
    ZeroDimParam p;
    p.n = 0;
    p.q = UniPoly::variable();
    return p;
}

bool ZeroDimParam::contains(const std::vector<Rat>& pt) const {
    if ((int)pt.size() != n) throw SizeMismatch("contains: wrong dimension");
    if (is_empty()) return false;
    Rat t(0);
    for (int i = 0; i < n; ++i) t += lambda[i] * pt[i];
    if (!is_zero(q.eval(t))) return false;
    for (int i = 0; i < n; ++i)
        if (v[i].eval(t) != pt[i]) return false;
    return true;
}

std::vector<std::vector<Rat>> ZeroDimParam::rational_points() const {
    std::vector<std::vector<Rat>> pts;
    if (is_empty()) return pts;
    for (const Rat& t : rational_roots(q)) {
        std::vector<Rat> pt(n);
        for (int i = 0; i < n; ++i) pt[i] = v[i].eval(t);
        pts.push_back(std::move(pt));
    }
    return pts;
}

void check_zerodim(const ZeroDimParam& p) {
    if ((int)p.v.size() != p.n || (int)p.lambda.size() != p.n)
        throw MathError("zerodim: arity mismatch");
    if (p.q.is_zero()) throw MathError("zerodim: zero modulus");
    if (!p.q.is_monic()) throw MathError("zerodim: modulus not monic");
    if (!is_squarefree(p.q)) throw MathError("zerodim: modulus not squarefree");
    if (p.is_empty()) return;
    UniPoly lam;
    for (int i = 0; i < p.n; ++i) {
        if (p.v[i].degree() >= p.q.degree()) throw MathError("zerodim: coordinate degree");
        lam = lam + p.v[i] * p.lambda[i];
    }
    if (!((lam - UniPoly::variable()) % p.q).is_zero())
        throw MathError("zerodim: separating-form identity fails");
}

ZeroDimParam params_from_points(const std::vector<std::vector<Rat>>& pts, int n, Rng rng) {
    if (pts.empty()) return ZeroDimParam::empty_set(n);
    std::vector<std::vector<Rat>> uniq;
    for (const auto& p : pts) {
        if ((int)p.size() != n) throw SizeMismatch("params_from_points: wrong dimension");
        if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
    }
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        std::vector<Rat> lambda = draw_form(r, n);
        std::vector<Rat> ts;
        bool ok = true;
        for (const auto& p : uniq) {
            Rat t(0);
            for (int i = 0; i < n; ++i) t += lambda[i] * p[i];
            if (std::find(ts.begin(), ts.end(), t) != ts.end()) { ok = false; break; }
            ts.push_back(t);
        }
        if (!ok) continue;
        ZeroDimParam out;
        out.n = n;
        out.lambda = lambda;
        UniPoly q = UniPoly::constant(Rat(1));
        for (const Rat& t : ts) q = q * UniPoly(std::vector<Rat>{-t, Rat(1)});
        out.q = q;
        out.v.resize(n);
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> ys(uniq.size());
            for (std::size_t k = 0; k < uniq.size(); ++k) ys[k] = uniq[k][i];
            out.v[i] = interpolate(ts, ys);
        }
        check_zerodim(out);
        return out;
    }
    throw RandomnessExhausted("params_from_points");
}

ZeroDimParam reparam_0(const ZeroDimParam& p, Rng rng) {
    if (p.is_empty() || p.n == 0) return p;
    auto g = to_generic(p);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        std::vector<Rat> lambda = draw_form(r, p.n);
        PolyV<QField> ell = pcore::form_apply(kQ, lambda, g.v, g.q);
        auto res = pcore::transport(kQ, g.q, g.v, g.v.size(), lambda, ell);
        if (res && palg::degree(res->q) == p.q.degree()) return from_generic(*res, p.n);
    }
    throw RandomnessExhausted("reparam_0");
}

ZeroDimParam change_vars_0(const ZeroDimParam& p, const LinearChange& a) {
    if (a.size() != p.n) throw SizeMismatch("change_vars_0: matrix size");
    if (p.is_empty() || p.n == 0) return p;
    ZeroDimParam out;
    out.n = p.n;
    out.q = p.q;
    out.v.assign(p.n, UniPoly{});
    // phi_A(x) = A^{-1} x, so v' = A^{-1} v and lambda' = lambda o A = A^T lambda.
    const auto& inv = a.inverse();
    for (int i = 0; i < p.n; ++i) {
        for (int j = 0; j < p.n; ++j)
            if (!is_zero(inv[i][j])) out.v[i] = out.v[i] + p.v[j] * inv[i][j];
        out.v[i] = out.v[i] % p.q;
    }
    out.lambda.assign(p.n, Rat(0));
    const auto& m = a.matrix();
    for (int j = 0; j < p.n; ++j)
        for (int i = 0; i < p.n; ++i) out.lambda[j] += p.lambda[i] * m[i][j];
    return out;
}

ZeroDimParam union_0(const ZeroDimParam& a, const ZeroDimParam& b, Rng rng) {
    if (a.n != b.n) throw SizeMismatch("union_0: dimension mismatch");
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (a.n == 0) return a; // the point space
    auto ga = to_generic(a), gb = to_generic(b);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        std::vector<Rat> lambda = draw_form(r, a.n);
        auto ta = pcore::transport(kQ, ga.q, ga.v, ga.v.size(), lambda,
                                   pcore::form_apply(kQ, lambda, ga.v, ga.q));
        if (!ta || palg::degree(ta->q) != a.q.degree()) continue;
        auto tb = pcore::transport(kQ, gb.q, gb.v, gb.v.size(), lambda,
                                   pcore::form_apply(kQ, lambda, gb.v, gb.q));
        if (!tb || palg::degree(tb->q) != b.q.degree()) continue;
        auto u = pcore::union_same_lambda(kQ, *ta, *tb);
        if (!u) continue;
        ZeroDimParam out = from_generic(*u, a.n);
        check_zerodim(out);
        return out;
    }
    throw RandomnessExhausted("union_0");
}

ZeroDimParam union_0(const std::vector<ZeroDimParam>& ps, int n, Rng rng) {
    ZeroDimParam acc = ZeroDimParam::empty_set(n);
    for (std::size_t i = 0; i < ps.size(); ++i) acc = union_0(acc, ps[i], rng.fork(i));
    return acc;
}

ZeroDimParam discard_0(const ZeroDimParam& a, const ZeroDimParam& b, Rng rng) {
    if (a.n != b.n) throw SizeMismatch("discard_0: dimension mismatch");
    if (a.is_empty() || b.is_empty()) return a;
    auto ga = to_generic(a), gb = to_generic(b);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        std::vector<Rat> lambda = draw_form(r, a.n);
        auto ta = pcore::transport(kQ, ga.q, ga.v, ga.v.size(), lambda,
                                   pcore::form_apply(kQ, lambda, ga.v, ga.q));
        if (!ta || palg::degree(ta->q) != a.q.degree()) continue;
        auto tb = pcore::transport(kQ, gb.q, gb.v, gb.v.size(), lambda,
                                   pcore::form_apply(kQ, lambda, gb.v, gb.q));
        if (!tb || palg::degree(tb->q) != b.q.degree()) continue;
        // Shared part: roots of gcd where all coordinates agree.
        PolyV<QField> g = palg::gcd_monic(kQ, ta->q, tb->q);
        PolyV<QField> shared = g;
        for (std::size_t i = 0; i < ta->v.size() && palg::degree(shared) > 0; ++i) {
            PolyV<QField> d = palg::rem(kQ, palg::sub(kQ, ta->v[i], tb->v[i]), g);
            shared = palg::gcd_monic(kQ, shared, d);
        }
        ZeroParamG<QField> res;
        res.lambda = lambda;
        res.q = palg::divrem(kQ, ta->q, shared).first;
        res.v.resize(ta->v.size());
        for (std::size_t i = 0; i < ta->v.size(); ++i)
            res.v[i] = palg::rem(kQ, ta->v[i], res.q);
        ZeroDimParam out = from_generic(res, a.n);
        if (out.q.degree() == 0) return ZeroDimParam::empty_set(a.n);
        check_zerodim(out);
        return out;
    }
    throw RandomnessExhausted("discard_0");
}

ZeroDimParam intersect_0(const ZeroDimParam& p, const Slp& g) {
    if (g.n_outputs() != 1) throw ArityMismatch("intersect_0: need a single polynomial");
    if (g.arity() != p.n) throw ArityMismatch("intersect_0: arity mismatch");
    if (p.is_empty()) return p;
    AField f(p.q);
    std::vector<UniPoly> inputs(p.v.begin(), p.v.end());
    UniPoly val = g.eval(f, inputs)[0];
    UniPoly r = val.is_zero() ? p.q : gcd(p.q, val);
    ZeroDimParam out;
    out.n = p.n;
    out.q = r.is_zero() ? UniPoly::constant(Rat(1)) : r.monic();
    if (out.q.degree() == 0) return ZeroDimParam::empty_set(p.n);
    out.lambda = p.lambda;
    out.v.resize(p.n);
    for (int i = 0; i < p.n; ++i) out.v[i] = p.v[i] % out.q;
    return out;
}

ZeroDimParam project_0(const ZeroDimParam& p, int e, Rng rng) {
    if (e < 0 || e > p.n) throw RangeError("project_0: bad e");
    if (e == 0) return ZeroDimParam::point_space();
    if (p.is_empty()) return ZeroDimParam::empty_set(e);
    if (e == p.n) return p;
    auto g = to_generic(p);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Rng r = rng.fork(attempt);
        std::vector<Rat> lambda = draw_form(r, e);
        lambda.resize(p.n, Rat(0));
        auto res = pcore::transport(kQ, g.q, g.v, e, lambda,
                                    pcore::form_apply(kQ, lambda, g.v, g.q));
        if (!res) continue;
        res->lambda.resize(e);
        ZeroDimParam out = from_generic(*res, e);
        check_zerodim(out);
        return out;
    }
    throw RandomnessExhausted("project_0");
}

ZeroDimParam lift_0(const ZeroDimParam& p, const ZeroDimParam& r, Rng rng) {
    if (r.n > p.n) throw SizeMismatch("lift_0: fiber dimension exceeds ambient");
    if (p.is_empty()) return p;
    if (r.n == 0) return r.is_empty() ? ZeroDimParam::empty_set(p.n) : p;
    if (r.is_empty()) return ZeroDimParam::empty_set(p.n);
    auto gp = to_generic(p);
    std::vector<PolyV<QField>> slice(gp.v.begin(), gp.v.begin() + r.n);
    ZeroDimParam rr = r;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        auto gr = to_generic(rr);
        auto s = pcore::fiber_part(kQ, gp.q, slice, gr.q, gr.v, rr.lambda);
        if (s) {
            ZeroDimParam out;
            out.n = p.n;
            out.q = from_g(*s);
            if (out.q.degree() == 0) return ZeroDimParam::empty_set(p.n);
            out.lambda = p.lambda;
            out.v.resize(p.n);
            for (int i = 0; i < p.n; ++i) out.v[i] = p.v[i] % out.q;
            check_zerodim(out);
            return out;
        }
        rr = reparam_0(rr, rng.fork(1000 + attempt));
    }
    throw RandomnessExhausted("lift_0");
}

bool subset_of(const ZeroDimParam& a, const ZeroDimParam& b, Rng rng) {
    if (a.is_empty()) return true;
    return discard_0(a, b, rng).is_empty();
}

} // namespace rm
