#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bipoly.hpp"
#include "fields.hpp"
#include "kernels.hpp"
#include "pof.hpp"
#include "polyalg.hpp"
#include "rng.hpp"

using namespace rm;

namespace {

UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(rat_to_string(make_rat(-6, 4)) == "-3/2");
    CHECK(rat_from_string("7/21") == make_rat(1, 3));
    CHECK_THROWS_AS(make_rat(1, 0), MathError);
}

TEST_CASE("upoly arithmetic and division") {
    UniPoly a = up({-1, 0, 1});       // T^2 - 1
    UniPoly b = up({1, 1});           // T + 1
    CHECK((a % b).is_zero());
    CHECK(a / b == up({-1, 1}));
    CHECK(a.eval(Rat(3)) == 8);
    CHECK(a.derivative() == up({0, 2}));
    UniPoly c = a * b;
    CHECK(c.degree() == 3);
    CHECK(c == up({-1, -1, 1, 1}));
}

TEST_CASE("gcd, ext_gcd, squarefree") {
    UniPoly a = up({-1, 0, 1});
    UniPoly b = up({1, 1});
    CHECK(gcd(a, b) == up({1, 1}));
    UniPoly s, t;
    UniPoly g = ext_gcd(a, b, s, t);
    CHECK(g == up({1, 1}));
    CHECK(s * a + t * b == g);
    // (T-1)^2 (T-2)
    UniPoly p = up({-1, 1}) * up({-1, 1}) * up({-2, 1});
    CHECK(squarefree_part(p) == up({-1, 1}) * up({-2, 1}));
    CHECK(!is_squarefree(p));
    CHECK(is_squarefree(a));
}

TEST_CASE("resultant convention: Sylvester with a-rows first") {
    // res(X - a, X - b) = b - a with our convention: det [[1, -a],[1, -b]]
    UniPoly f = up({-2, 1});
    UniPoly g = up({-5, 1});
    CHECK(resultant(f, g) == Rat(-3));
    // res(f, c) = c^deg f
    CHECK(resultant(f, up({7})) == Rat(7));
    CHECK(resultant(up({-1, 0, 1}), up({3})) == Rat(9));
    // Multiplicativity spot-check: res(fg, h) = res(f,h) res(g,h).
    UniPoly h = up({1, 3, 1});
    CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
}

TEST_CASE("crt and power sums") {
    UniPoly m1 = up({-1, 1}), m2 = up({1, 1});
    UniPoly v = crt_pair(m1, up({2}), m2, up({4}));
    CHECK(v.eval(Rat(1)) == 2);
    CHECK(v.eval(Rat(-1)) == 4);
    // roots 1, 2: p1 = 3, p2 = 5, p3 = 9
    UniPoly q = up({2, -3, 1});
    auto p = root_power_sums(q, 3);
    CHECK(p[1] == 3);
    CHECK(p[2] == 5);
    CHECK(p[3] == 9);
}

TEST_CASE("rational roots") {
    UniPoly p = up({-2, 1}) * up({3, 2}) * up({1, 0, 1}); // roots 2, -3/2
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == make_rat(-3, 2));
    CHECK(roots[1] == Rat(2));
}

TEST_CASE("kernels: parallel equals serial") {
    Rng rng(7);
    for (int rep = 0; rep < 4; ++rep) {
        std::size_t na = 40 + 30 * rep, nb = 25 + 20 * rep;
        std::vector<Rat> a(na), b(nb), s(na + nb - 1), p(na + nb - 1);
        for (auto& x : a) x = make_rat(rng.draw_int(-50, 50), 1 + rng.draw_int(0, 9));
        for (auto& x : b) x = make_rat(rng.draw_int(-50, 50), 1 + rng.draw_int(0, 9));
        kernels::conv_serial(a.data(), na, b.data(), nb, s.data());
        kernels::conv_parallel(a.data(), na, b.data(), nb, p.data());
        CHECK(s == p);
    }
}

TEST_CASE("bipoly basics") {
    // q = U^2 + T^2 - 1
    BiPoly q(std::vector<UniPoly>{up({-1, 0, 1}), up({}), up({1})});
    CHECK(q.deg_u() == 2);
    CHECK(q.deg_t() == 2);
    CHECK(q.total_degree() == 2);
    CHECK(q.eval(Rat(1), Rat(0)) == 0);
    CHECK(q.eval(Rat(0), Rat(1)) == 0);
    CHECK(q.swap_vars() == q);
    BiPoly dq = q.derivative_t();
    CHECK(dq.eval(Rat(0), Rat(1)) == 2);
    // divrem_t by (T - U): T^2 + U^2 - 1 = (T + U)(T - U) + (2U^2 - 1)
    BiPoly d(std::vector<UniPoly>{up({0, 1}), up({-1})}); // T - U
    auto [quo, rem] = q.divrem_t(d);
    CHECK((quo * d + rem) == q);
    CHECK(rem.deg_t() == 0);
}

TEST_CASE("bivariate resultant by interpolation") {
    // res_T(T - U, T - 2U) = U - 2U = -U  (convention: a-rows first)
    BiPoly a(std::vector<UniPoly>{up({0, 1}), up({-1})});
    BiPoly b(std::vector<UniPoly>{up({0, 1}), up({-2})});
    UniPoly r = resultant_t(a, b);
    // res(T - u, T - 2u) = det [[1, -u],[1,-2u]] = -2u + u = -u
    CHECK(r == up({0, -1}));
}

TEST_CASE("pof_invert") {
    // q = T^2 - 3, a = T -> T/3
    UniPoly q = up({-3, 0, 1});
    auto r = pof_invert(q, up({0, 1}));
    REQUIRE(r.inverse.has_value());
    CHECK(*r.inverse == UniPoly(std::vector<Rat>{Rat(0), make_rat(1, 3)}));
    // q = T^2 - 1, a = T - 1 -> split with factor T - 1
    auto r2 = pof_invert(up({-1, 0, 1}), up({-1, 1}));
    REQUIRE(r2.factor.has_value());
    CHECK(*r2.factor == up({-1, 1}));
    // q = T - 2, a = 5 -> 1/5
    auto r3 = pof_invert(up({-2, 1}), up({5}));
    REQUIRE(r3.inverse.has_value());
    CHECK(*r3.inverse == UniPoly(std::vector<Rat>{make_rat(1, 5)}));
}

TEST_CASE("pof_gcd splits as needed") {
    // q = T^2 - 1, F = X - T, G = X - 1 -> branches (T-1, X-1), (T+1, 1)
    UniPoly q = up({-1, 0, 1});
    APoly F{up({0, -1}), up({1})}; // -T + X
    APoly G{up({-1}), up({1})};    // -1 + X
    auto r = pof_gcd(q, F, G);
    REQUIRE(r.size() == 2);
    // identify branches by modulus
    for (const auto& b : r.branches) {
        if (b.modulus == up({-1, 1})) {
            REQUIRE(b.payload.size() == 2);
            CHECK(b.payload[0] == up({-1}));
        } else {
            CHECK(b.modulus == up({1, 1}));
            CHECK(b.payload.size() == 1); // constant 1
        }
    }
    // identical inputs: no split
    auto r2 = pof_gcd(q, F, F);
    REQUIRE(r2.size() == 1);
    CHECK(r2.branches[0].modulus == q.monic());
    CHECK(r2.branches[0].payload == F);
    // q = T - 1, F = X^2 - 1, G = X - 1 -> X - 1
    auto r3 = pof_gcd(up({-1, 1}), APoly{up({-1}), up({0}), up({1})}, APoly{up({-1}), up({1})});
    REQUIRE(r3.size() == 1);
    REQUIRE(r3.branches[0].payload.size() == 2);
}

TEST_CASE("pof_squarefree") {
    // q = T - 1, F = (X-1)^2 (X-2)
    UniPoly q = up({-1, 1});
    AField f(q);
    APoly x1{up({-1}), up({1})}, x2{up({-2}), up({1})};
    APoly F = palg::mul(f, palg::mul(f, x1, x1), x2);
    auto r = pof_squarefree(q, F);
    REQUIRE(r.size() == 1);
    CHECK(palg::degree(r.branches[0].payload) == 2);
    // q = T^2 - 1, F = (X - T)^2 -> (q, X - T)
    UniPoly q2 = up({-1, 0, 1});
    AField f2(q2);
    APoly xt{up({0, -1}), up({1})};
    auto r2 = pof_squarefree(q2, palg::mul(f2, xt, xt));
    REQUIRE(r2.size() == 1);
    CHECK(r2.branches[0].payload == xt);
}

TEST_CASE("crt_recombine") {
    SplitSeq<UniPoly> s;
    s.branches.push_back({up({-1, 1}), up({2})});
    s.branches.push_back({up({1, 1}), up({4})});
    UniPoly v = crt_recombine(s);
    CHECK(v == up({3, -1}));
    SplitSeq<UniPoly> single;
    single.branches.push_back({up({-5, 1}), up({9})});
    CHECK(crt_recombine(single) == up({9}));
}

TEST_CASE("series field: inversion and arithmetic") {
    SeriesField<QField> S(QField{}, 5);
    auto one = S.one();
    // invert 1 - eps: expect 1 + eps + eps^2 + ...
    auto a = S.one();
    a[1] = Rat(-1);
    auto inv = S.inv(a);
    for (int i = 0; i < 5; ++i) CHECK(inv[i] == 1);
    CHECK(S.equal(S.mul(a, inv), one));
    // positive valuation -> BadExpansionPoint
    auto eps = S.zero();
    eps[1] = Rat(1);
    CHECK_THROWS_AS(S.inv(eps), BadExpansionPoint);
}

TEST_CASE("jet field: first-order products") {
    JetField<QField> J(QField{}, 2);
    auto x = J.lift(Rat(3));
    x.tan[0] = Rat(1);
    auto y = J.lift(Rat(5));
    y.tan[1] = Rat(1);
    auto p = J.mul(x, y);
    CHECK(p.val == 15);
    CHECK(p.tan[0] == 5);
    CHECK(p.tan[1] == 3);
    auto inv = J.inv(x);
    auto prod = J.mul(x, inv);
    CHECK(prod.val == 1);
    CHECK(prod.tan[0] == 0);
    CHECK(prod.tan[1] == 0);
}

TEST_CASE("generic charpoly from power sums") {
    QField f;
    // q = (T-1)(T-2) = T^2 - 3T + 2, l = T mod q: charpoly of the roots.
    PolyV<QField> q{Rat(2), Rat(-3), Rat(1)};
    auto ps = palg::power_sums(f, q, 2);
    CHECK(ps[1] == 3);
    CHECK(ps[2] == 5);
    auto cp = palg::charpoly_from_power_sums(f, ps, 2);
    CHECK(cp == q);
}
