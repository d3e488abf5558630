#include "upoly.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "kernels.hpp"

namespace rm {

void UniPoly::trim() {
    while (!c_.empty() && rm::is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& a) {
    UniPoly p;
    if (!rm::is_zero(a)) p.c_ = {a};
    return p;
}

UniPoly UniPoly::variable() { return monomial(1, Rat(1)); }

UniPoly UniPoly::monomial(int deg, const Rat& a) {
    UniPoly p;
    if (!rm::is_zero(a)) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = a;
    }
    return p;
}

const Rat& UniPoly::lc() const {
    if (is_zero()) throw MathError("lc of zero polynomial");
    return c_.back();
}

const Rat& UniPoly::operator[](int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= (int)c_.size()) return zero;
    return c_[i];
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    kernels::conv(c_.data(), c_.size(), o.c_.data(), o.c_.size(), r.data());
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& a) const {
    if (rm::is_zero(a)) return {};
    UniPoly r(*this);
    for (auto& x : r.c_) x *= a;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Rat> r(c_.size() + k, Rat(0));
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat((long)i);
    return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw MathError("monic of zero polynomial");
    if (is_monic()) return *this;
    Rat inv = Rat(1) / lc();
    return *this * inv;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw MathError("division by zero polynomial");
    if (degree() < d.degree()) return {UniPoly{}, *this};
    std::vector<Rat> rem = c_;
    std::vector<Rat> quo(degree() - d.degree() + 1, Rat(0));
    const Rat inv = Rat(1) / d.lc();
    for (int k = degree(); k >= d.degree(); --k) {
        Rat q = rem[k] * inv;
        if (!rm::is_zero(q)) {
            quo[k - d.degree()] = q;
            for (int i = 0; i <= d.degree(); ++i)
                rem[k - d.degree() + i] -= q * d.c_[i];
        }
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::operator/(const UniPoly& d) const { return divrem(d).first; }
UniPoly UniPoly::operator%(const UniPoly& d) const { return divrem(d).second; }

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[i];
        if (rm::is_zero(a)) continue;
        if (!first) os << (sgn(a) < 0 ? " - " : " + ");
        else if (sgn(a) < 0) os << "-";
        Rat mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

UniPoly ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(Rat(1)), s1;
    UniPoly t0, t1 = UniPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) { s = s0; t = t0; return r0; }
    Rat inv = Rat(1) / r0.lc();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

UniPoly squarefree_part(const UniPoly& a) {
    if (a.is_zero()) throw MathError("squarefree part of zero");
    if (a.degree() == 0) return UniPoly::constant(Rat(1));
    UniPoly g = gcd(a, a.derivative());
    return (a / g).monic();
}

bool is_squarefree(const UniPoly& a) {
    if (a.is_zero()) return false;
    if (a.degree() == 0) return true;
    return gcd(a, a.derivative()).degree() == 0;
}

std::optional<UniPoly> invert_mod(const UniPoly& a, const UniPoly& m) {
    UniPoly s, t;
    UniPoly g = ext_gcd(a % m, m, s, t);
    if (g.degree() != 0) return std::nullopt;
    return s % m;
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

UniPoly powmod(const UniPoly& a, unsigned long e, const UniPoly& m) {
    UniPoly base = a % m;
    UniPoly acc = UniPoly::constant(Rat(1)) % m;
    while (e) {
        if (e & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return acc;
}

UniPoly compose_mod(const UniPoly& h, const UniPoly& g, const UniPoly& m) {
    UniPoly acc;
    for (int i = h.degree(); i >= 0; --i) {
        acc = mulmod(acc, g, m) + UniPoly::constant(h[i]);
        acc = acc % m;
    }
    return acc;
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    const int m = a.degree(), n = b.degree();
    if (m == 0) {
        Rat r(1);
        for (int i = 0; i < n; ++i) r *= a[0];
        return r;
    }
    if (n == 0) {
        Rat r(1);
        for (int i = 0; i < m; ++i) r *= b[0];
        return r;
    }
    // res(a,b) = lc(b)^(m - deg r) * (-1)^(m n) * res(b, r) with r = a mod b.
    UniPoly r = a % b;
    if (r.is_zero()) return Rat(0);
    Rat lcpow(1);
    for (int i = 0; i < m - r.degree(); ++i) lcpow *= b.lc();
    Rat sign = (m % 2 && n % 2) ? Rat(-1) : Rat(1);
    return lcpow * sign * resultant(b, r);
}

UniPoly crt_pair(const UniPoly& m1, const UniPoly& v1, const UniPoly& m2, const UniPoly& v2) {
    auto inv = invert_mod(m1, m2);
    if (!inv) throw ModuliNotCoprime();
    UniPoly h = mulmod((v2 - v1) % m2, *inv, m2);
    return (v1 + m1 * h) % (m1 * m2);
}

std::vector<Rat> root_power_sums(const UniPoly& q, int k) {
    if (!q.is_monic()) throw MathError("root_power_sums needs a monic polynomial");
    const int n = q.degree();
    std::vector<Rat> p(k + 1, Rat(0));
    p[0] = Rat(n);
    // Newton: p_k + a_{n-1} p_{k-1} + ... + a_{n-k+1} p_1 + k a_{n-k} = 0
    // for monic q = T^n + a_{n-1} T^{n-1} + ... + a_0.
    for (int i = 1; i <= k; ++i) {
        Rat acc(0);
        for (int j = 1; j < i; ++j) {
            if (i - j > n) continue;
            acc += q[n - (i - j)] * p[j];
        }
        Rat ai = i <= n ? q[n - i] : Rat(0);
        p[i] = -acc - Rat(i) * ai;
    }
    return p;
}

std::vector<Rat> rational_roots(const UniPoly& a) {
    std::vector<Rat> roots;
    if (a.is_zero()) throw MathError("rational_roots of zero polynomial");
    UniPoly p = a;
    // Strip T^k.
    int shift = 0;
    while (rm::is_zero(p[0]) && p.degree() > 0) {
        std::vector<Rat> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = UniPoly(std::move(c));
        ++shift;
    }
    if (shift) roots.push_back(Rat(0));
    if (p.degree() <= 0) return roots;
    // Clear denominators to integer coefficients.
    Int den(1);
    for (const Rat& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Int> ic(p.coeffs().size());
    for (std::size_t i = 0; i < ic.size(); ++i) {
        Rat v = p.coeffs()[i] * Rat(den);
        ic[i] = v.get_num();
    }
    Int a0 = abs(ic.front()), an = abs(ic.back());
    auto divisors = [](const Int& v) {
        std::vector<Int> ds;
        for (Int d(1); d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                if (d * d != v) ds.push_back(v / d);
            }
        return ds;
    };
    for (const Int& num : divisors(a0))
        for (const Int& den2 : divisors(an))
            for (int s : {1, -1}) {
                Rat cand = make_rat(s * num, den2);
                if (rm::is_zero(p.eval(cand))) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace rm
