#include "bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "kernels.hpp"

namespace rm {

void BiPoly::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::constant(const Rat& a) {
    BiPoly p;
    if (!rm::is_zero(a)) p.rows_ = {UniPoly::constant(a)};
    return p;
}

BiPoly BiPoly::from_T(const UniPoly& p) {
    BiPoly r;
    if (!p.is_zero()) r.rows_ = {p};
    return r;
}

BiPoly BiPoly::from_U(const UniPoly& p) {
    BiPoly r;
    r.rows_.resize(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) r.rows_[i] = UniPoly::constant(p[i]);
    r.trim();
    return r;
}

bool BiPoly::is_constant() const {
    return rows_.empty() || (rows_.size() == 1 && rows_[0].is_constant());
}

int BiPoly::deg_t() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (int i = 0; i < (int)rows_.size(); ++i)
        if (!rows_[i].is_zero()) d = std::max(d, i + rows_[i].degree());
    return d;
}

const UniPoly& BiPoly::coeff_u(int i) const {
    static const UniPoly zero;
    if (i < 0 || i >= (int)rows_.size()) return zero;
    return rows_[i];
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& row : r.rows_) row = -row;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<UniPoly> r(std::max(rows_.size(), o.rows_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff_u((int)i) + o.coeff_u((int)i);
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    std::vector<UniPoly> r(std::max(rows_.size(), o.rows_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff_u((int)i) - o.coeff_u((int)i);
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    const std::size_t ra = rows_.size(), rb = o.rows_.size();
    const std::size_t ca = (std::size_t)deg_t() + 1, cb = (std::size_t)o.deg_t() + 1;
    // Flatten to rectangular blocks and run the 2-D convolution kernel.
    std::vector<Rat> a(ra * ca, Rat(0)), b(rb * cb, Rat(0));
    for (std::size_t i = 0; i < ra; ++i)
        for (int j = 0; j <= rows_[i].degree(); ++j) a[i * ca + j] = rows_[i][j];
    for (std::size_t i = 0; i < rb; ++i)
        for (int j = 0; j <= o.rows_[i].degree(); ++j) b[i * cb + j] = o.rows_[i][j];
    const std::size_t ro = ra + rb - 1, co = ca + cb - 1;
    std::vector<Rat> out(ro * co);
    kernels::conv2(a.data(), ra, ca, b.data(), rb, cb, out.data());
    std::vector<UniPoly> rows(ro);
    for (std::size_t i = 0; i < ro; ++i) {
        std::vector<Rat> row(out.begin() + i * co, out.begin() + (i + 1) * co);
        rows[i] = UniPoly(std::move(row));
    }
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::operator*(const Rat& a) const {
    if (rm::is_zero(a)) return {};
    BiPoly r(*this);
    for (auto& row : r.rows_) row = row * a;
    return r;
}

BiPoly BiPoly::derivative_t() const {
    std::vector<UniPoly> r(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) r[i] = rows_[i].derivative();
    return BiPoly(std::move(r));
}

BiPoly BiPoly::derivative_u() const {
    if (rows_.size() <= 1) return {};
    std::vector<UniPoly> r(rows_.size() - 1);
    for (std::size_t i = 1; i < rows_.size(); ++i) r[i - 1] = rows_[i] * Rat((long)i);
    return BiPoly(std::move(r));
}

BiPoly BiPoly::swap_vars() const {
    std::vector<UniPoly> r(deg_t() + 1);
    for (int j = 0; j <= deg_t(); ++j) {
        std::vector<Rat> c(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i].coeff(j);
        r[j] = UniPoly(std::move(c));
    }
    return BiPoly(std::move(r));
}

UniPoly BiPoly::eval_u(const Rat& u) const {
    UniPoly acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

UniPoly BiPoly::eval_t(const Rat& t) const {
    std::vector<Rat> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i].eval(t);
    return UniPoly(std::move(c));
}

Rat BiPoly::eval(const Rat& u, const Rat& t) const { return eval_u(u).eval(t); }

UniPoly BiPoly::lc_u() const {
    if (is_zero()) throw MathError("lc_u of zero");
    return rows_.back();
}

UniPoly BiPoly::lc_t() const {
    if (is_zero()) throw MathError("lc_t of zero");
    const int dt = deg_t();
    std::vector<Rat> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i].coeff(dt);
    return UniPoly(std::move(c));
}

std::pair<BiPoly, BiPoly> BiPoly::divrem_t(const BiPoly& d) const {
    if (d.is_zero()) throw MathError("bivariate division by zero");
    const int dt = d.deg_t();
    UniPoly lt = d.lc_t();
    if (!lt.is_constant())
        throw MathError("divrem_t requires a divisor with constant leading T-coefficient");
    const Rat inv = Rat(1) / lt.coeff(0);
    BiPoly rem = *this, quo;
    while (!rem.is_zero() && rem.deg_t() >= dt) {
        const int k = rem.deg_t();
        // Extract the T^k coefficient of rem as a polynomial in U.
        std::vector<Rat> topc(rem.rows_.size());
        for (std::size_t i = 0; i < rem.rows_.size(); ++i) topc[i] = rem.rows_[i].coeff(k);
        BiPoly term = BiPoly::from_U(UniPoly(std::move(topc)) * inv) *
                      BiPoly::from_T(UniPoly::monomial(k - dt, Rat(1)));
        quo = quo + term;
        rem = rem - term * d;
    }
    return {quo, rem};
}

UniPoly BiPoly::content_in_t() const {
    UniPoly g;
    for (const auto& row : rows_) g = g.is_zero() ? (row.is_zero() ? row : row.monic()) : gcd(g, row);
    return g;
}

UniPoly BiPoly::content_in_u() const { return swap_vars().content_in_t(); }

BiPoly BiPoly::divide_by_t_poly(const UniPoly& g) const {
    std::vector<UniPoly> r(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto [q, rest] = rows_[i].divrem(g);
        if (!rest.is_zero()) throw MathError("divide_by_t_poly: not divisible");
        r[i] = q;
    }
    return BiPoly(std::move(r));
}

BiPoly BiPoly::divide_by_u_poly(const UniPoly& g) const {
    return swap_vars().divide_by_t_poly(g).swap_vars();
}

std::string BiPoly::to_string(const std::string& uvar, const std::string& tvar) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg_u(); i >= 0; --i) {
        if (rows_[i].is_zero()) continue;
        if (!first) os << " + ";
        if (i == 0) os << "(" << rows_[i].to_string(tvar) << ")";
        else {
            os << "(" << rows_[i].to_string(tvar) << ")*" << uvar;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly resultant_t(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int bound = a.deg_u() * b.deg_t() + b.deg_u() * a.deg_t() + 1;
    // The evaluation-interpolation scheme needs points where neither leading
    // T-coefficient drops degree.
    UniPoly la = a.lc_t(), lb = b.lc_t();
    std::vector<Rat> xs, ys;
    Rat u(0);
    while ((int)xs.size() < bound) {
        if (!rm::is_zero(la.eval(u)) && !rm::is_zero(lb.eval(u))) {
            xs.push_back(u);
            ys.push_back(resultant(a.eval_u(u), b.eval_u(u)));
        }
        u += 1;
    }
    return interpolate(xs, ys);
}

BiPoly gcd_t(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Work in Q(U)[T] by clearing denominators lazily: at desk scale plain
    // pseudo-remainders suffice.
    BiPoly x = a, y = b;
    if (x.deg_t() < y.deg_t()) std::swap(x, y);
    while (!y.is_zero() && y.deg_t() >= 0) {
        if (y.deg_t() == 0) {
            // gcd with a T-free polynomial: gcd of contents in U.
            UniPoly cx = x.content_in_u();
            UniPoly cy = y.content_in_u();
            return BiPoly::from_U(gcd(cx, cy));
        }
        // Pseudo-remainder of x by y in T.
        UniPoly ly = y.lc_t();
        int k = x.deg_t() - y.deg_t() + 1;
        BiPoly scaled = x;
        for (int i = 0; i < k; ++i) scaled = scaled * BiPoly::from_U(ly);
        // Long division in T (leading coefficient of scaled divisible by ly).
        BiPoly rem = scaled;
        while (!rem.is_zero() && rem.deg_t() >= y.deg_t()) {
            int dt = rem.deg_t();
            UniPoly top;
            {
                std::vector<Rat> c(rem.rows().size());
                for (std::size_t i = 0; i < rem.rows().size(); ++i) c[i] = rem.rows()[i].coeff(dt);
                top = UniPoly(std::move(c));
            }
            auto [q, rr] = top.divrem(ly);
            if (!rr.is_zero()) throw MathError("gcd_t pseudo-division failure");
            BiPoly term = BiPoly::from_U(q) * BiPoly::from_T(UniPoly::monomial(dt - y.deg_t(), Rat(1)));
            rem = rem - term * y;
        }
        x = std::move(y);
        y = std::move(rem);
        // Make y primitive in U to control growth.
        if (!y.is_zero()) {
            UniPoly c = y.content_in_u();
            if (c.degree() > 0 || !c.is_one()) y = y.divide_by_u_poly(c);
        }
    }
    // Primitive part of x.
    UniPoly c = x.content_in_u();
    if (c.degree() > 0) x = x.divide_by_u_poly(c);
    return x;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw SizeMismatch("interpolate: length mismatch");
    if (xs.empty()) return {};
    // Newton form.
    std::vector<Rat> dd = ys;
    for (std::size_t k = 1; k < xs.size(); ++k)
        for (std::size_t i = xs.size() - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
            if (i == k) break;
        }
    UniPoly acc, basis = UniPoly::constant(Rat(1));
    for (std::size_t k = 0; k < xs.size(); ++k) {
        acc = acc + basis * dd[k];
        UniPoly lin(std::vector<Rat>{-xs[k], Rat(1)});
        basis = basis * lin;
    }
    return acc;
}

} // namespace rm
