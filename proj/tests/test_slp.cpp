#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rng.hpp"
#include "slp.hpp"

using namespace rm;

namespace {

Slp circle_slp() {
    // x^2 + y^2 - 1 in 2 variables
    Slp s(2, {}, {});
    int x = Slp::input_index(1, 2), y = Slp::input_index(2, 2);
    int x2 = s.push(Slp::Op::Mul, x, x);
    int y2 = s.push(Slp::Op::Mul, y, y);
    int sum = s.push(Slp::Op::Add, x2, y2);
    int m1 = s.push_const(Rat(-1));
    int res = s.push(Slp::Op::Add, sum, m1);
    s.set_outputs({res});
    return s;
}

} // namespace

TEST_CASE("slp eval over Q and over A") {
    Slp s = circle_slp();
    CHECK(s.eval_q({Rat(3), Rat(4)})[0] == 24);
    CHECK(s.eval_q({Rat(0), Rat(0)})[0] == -1);
    // over A = Q[T]/<T^2-2> at (T, 1): T^2 + 1 - 1 = 2
    UniPoly q(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
    AField f(q);
    auto vals = s.eval(f, {UniPoly::variable(), UniPoly::constant(Rat(1))});
    CHECK(vals[0] == UniPoly::constant(Rat(2)));
    CHECK_THROWS_AS(s.eval_q({Rat(1)}), ArityMismatch);
}

TEST_CASE("slp jacobian: circle gradient") {
    Slp s = circle_slp();
    Slp j = slp_jacobian(s);
    auto v = j.eval_q({Rat(3), Rat(4)});
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 24);
    CHECK(v[1] == 6);
    CHECK(v[2] == 8);
}

TEST_CASE("slp jacobian: product rule and powers") {
    // f = (x + y)^3: grad = (3(x+y)^2, 3(x+y)^2); at (1,1): (12, 12)
    Slp s(2, {}, {});
    int x = Slp::input_index(1, 2), y = Slp::input_index(2, 2);
    int sum = s.push(Slp::Op::Add, x, y);
    int sq = s.push(Slp::Op::Mul, sum, sum);
    int cube = s.push(Slp::Op::Mul, sq, sum);
    s.set_outputs({cube});
    Slp j = slp_jacobian(s);
    auto v = j.eval_q({Rat(1), Rat(1)});
    CHECK(v[1] == 12);
    CHECK(v[2] == 12);
    // f = x*y: grad at (a, b) = (b, a)
    Slp p(2, {}, {});
    int xy = p.push(Slp::Op::Mul, x, y);
    p.set_outputs({xy});
    auto w = slp_jacobian(p).eval_q({Rat(7), Rat(-2)});
    CHECK(w[1] == -2);
    CHECK(w[2] == 7);
}

TEST_CASE("slp jacobian agrees with finite differences") {
    // f = x^2 y + 3 y^2 - x
    Slp s(2, {}, {});
    int x = Slp::input_index(1, 2), y = Slp::input_index(2, 2);
    int x2 = s.push(Slp::Op::Mul, x, x);
    int x2y = s.push(Slp::Op::Mul, x2, y);
    int y2 = s.push(Slp::Op::Mul, y, y);
    int t3 = s.push_scale(Rat(3), y2);
    int a = s.push(Slp::Op::Add, x2y, t3);
    int r = s.push(Slp::Op::Sub, a, x);
    s.set_outputs({r});
    Slp j = slp_jacobian(s);
    Rat h = make_rat(1, 1024);
    std::vector<Rat> pt{make_rat(5, 3), make_rat(-2, 7)};
    auto g = j.eval_q(pt);
    for (int k = 0; k < 2; ++k) {
        auto up = pt, dn = pt;
        up[k] += h;
        dn[k] -= h;
        Rat central = (s.eval_q(up)[0] - s.eval_q(dn)[0]) / (2 * h);
        CHECK(central == g[1 + k]); // exact for quadratics in each variable? no:
        // f is degree 2 in x and 2 in y, central difference is exact up to
        // h^2 f'''/6; third partials vanish here, so equality is exact.
    }
}

TEST_CASE("slp minor: Berkowitz determinants") {
    // Program computing the constant matrix [[1,2],[3,4]] as "jacobian".
    Slp s(1, {}, {});
    int c1 = s.push_const(Rat(1)), c2 = s.push_const(Rat(2));
    int c3 = s.push_const(Rat(3)), c4 = s.push_const(Rat(4));
    s.set_outputs({c1, c2, c3, c4});
    Slp d = slp_minor(s, 0, 2, {0, 1}, {0, 1});
    auto v = d.eval_q({Rat(0)});
    CHECK(v.back() == -2);
    // 1x1 minor
    Slp d1 = slp_minor(s, 0, 2, {1}, {0});
    CHECK(d1.eval_q({Rat(0)}).back() == 3);
    // 3x3 identity
    Slp id(1, {}, {});
    std::vector<int> outs;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) outs.push_back(id.push_const(Rat(i == j ? 1 : 0)));
    id.set_outputs(outs);
    CHECK(slp_minor(id, 0, 3, {0, 1, 2}, {0, 1, 2}).eval_q({Rat(0)}).back() == 1);
}

TEST_CASE("slp minor matches cofactor expansion on random 4x4") {
    Rng rng(99);
    std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
    Slp s(1, {}, {});
    std::vector<int> outs;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m[i][j] = rng.draw_rat(20);
            outs.push_back(s.push_const(m[i][j]));
        }
    s.set_outputs(outs);
    // cofactor determinant
    std::function<Rat(std::vector<std::vector<Rat>>)> det = [&](std::vector<std::vector<Rat>> a) -> Rat {
        if (a.size() == 1) return a[0][0];
        Rat acc(0);
        for (std::size_t j = 0; j < a.size(); ++j) {
            std::vector<std::vector<Rat>> sub;
            for (std::size_t r = 1; r < a.size(); ++r) {
                std::vector<Rat> row;
                for (std::size_t c = 0; c < a.size(); ++c)
                    if (c != j) row.push_back(a[r][c]);
                sub.push_back(row);
            }
            Rat term = a[0][j] * det(sub);
            if (j % 2) term = -term;
            acc += term;
        }
        return acc;
    };
    Slp d = slp_minor(s, 0, 4, {0, 1, 2, 3}, {0, 1, 2, 3});
    CHECK(d.eval_q({Rat(0)}).back() == det(m));
}

TEST_CASE("substitute prefix") {
    Slp s(2, {}, {});
    int x = Slp::input_index(1, 2), y = Slp::input_index(2, 2);
    int sum = s.push(Slp::Op::Add, x, y);
    s.set_outputs({sum});
    // x := T over q = T^2 - 2
    Slp sub = slp_substitute_prefix(s, {UniPoly::variable()});
    CHECK(sub.arity() == 1);
    UniPoly q(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
    AField f(q);
    auto v = sub.eval(f, {UniPoly::constant(Rat(5))});
    CHECK(v[0] == UniPoly(std::vector<Rat>{Rat(5), Rat(1)}));
    // x^2 with x := T becomes the constant 2
    Slp s2(1, {}, {});
    int xx = Slp::input_index(1, 1);
    int sq = s2.push(Slp::Op::Mul, xx, xx);
    s2.set_outputs({sq});
    Slp sub2 = slp_substitute_prefix(s2, {UniPoly::variable()});
    CHECK(sub2.arity() == 0);
    auto v2 = sub2.eval(f, {});
    CHECK(v2[0] == UniPoly::constant(Rat(2)));
    // e = 0: identity transform
    Slp sub0 = slp_substitute_prefix(s, {});
    CHECK(sub0.eval_q({Rat(1), Rat(2)})[0] == 3);
}

TEST_CASE("change of variables") {
    Slp s = circle_slp();
    // identity
    Slp id = slp_change_vars(s, LinearChange::identity(2));
    Rng rng(4);
    for (int i = 0; i < 5; ++i) {
        std::vector<Rat> pt{rng.draw_rat(30), rng.draw_rat(30)};
        CHECK(id.eval_q(pt)[0] == s.eval_q(pt)[0]);
    }
    // swap via matrix [[0,1],[1,0]]
    LinearChange sw(2, 0, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    Slp swapped = slp_change_vars(s, sw);
    std::vector<Rat> pt{Rat(2), Rat(5)};
    CHECK(swapped.eval_q(pt)[0] == s.eval_q({Rat(5), Rat(2)})[0]);
    // general: f^A(x) = f(Ax)
    LinearChange a(2, 0, {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
    Slp fa = slp_change_vars(s, a);
    for (int i = 0; i < 5; ++i) {
        std::vector<Rat> x{rng.draw_rat(30), rng.draw_rat(30)};
        CHECK(fa.eval_q(x)[0] == s.eval_q(a.apply(x))[0]);
    }
}

TEST_CASE("augment lagrange") {
    // F = x1^2 + x2^2 + x3^2 - 1, cut = 2, u = (1):
    // outputs (f, 2 x3 L1, L1 - 1)
    Slp s(3, {}, {});
    int x1 = Slp::input_index(1, 3), x2 = Slp::input_index(2, 3), x3 = Slp::input_index(3, 3);
    int a = s.push(Slp::Op::Mul, x1, x1);
    int b = s.push(Slp::Op::Mul, x2, x2);
    int c = s.push(Slp::Op::Mul, x3, x3);
    int ab = s.push(Slp::Op::Add, a, b);
    int abc = s.push(Slp::Op::Add, ab, c);
    int m1 = s.push_const(Rat(-1));
    s.set_outputs({s.push(Slp::Op::Add, abc, m1)});
    Slp g = slp_augment_lagrange(s, 2, {Rat(1)});
    CHECK(g.arity() == 4);
    CHECK(g.n_outputs() == 3);
    std::vector<Rat> pt{Rat(1), Rat(2), Rat(3), Rat(5)}; // (x, L1=5)
    auto v = g.eval_q(pt);
    CHECK(v[0] == 13);       // 1+4+9-1
    CHECK(v[1] == 30);       // L1 * 2 x3
    CHECK(v[2] == 4);        // u.L - 1
    CHECK_THROWS_AS(slp_augment_lagrange(s, 3, {Rat(1)}), ArityMismatch);
}

TEST_CASE("slp text round trip") {
    Slp s = circle_slp();
    std::string text = slp_to_text(s);
    Slp t = slp_from_text(text);
    CHECK(t.arity() == 2);
    CHECK(slp_to_text(t) == text);
    CHECK(t.eval_q({Rat(3), Rat(4)})[0] == 24);
}

TEST_CASE("infix parser") {
    auto sys = parse_system("vars x,y; x^2+y^2-1;");
    CHECK(sys.vars.size() == 2);
    CHECK(sys.system.eval_q({Rat(3), Rat(4)})[0] == 24);
    auto r = parse_system("vars x; 1/2*x - 3;");
    CHECK(r.system.eval_q({Rat(10)})[0] == 2);
    CHECK_THROWS_AS(parse_system("vars x; x^^2;"), ParseError);
    auto fg = parse_system("vars x,y; f: x*y - 1; g: x - y;");
    CHECK(fg.has_aux);
    CHECK(fg.system.eval_q({Rat(2), Rat(3)})[0] == 5);
    CHECK(fg.aux.eval_q({Rat(2), Rat(3)})[0] == -1);
    // degree bounds
    auto db = parse_system("vars x,y; x^2*y + y; x;").system.degree_bounds();
    CHECK(db[0] == 3);
    CHECK(db[1] == 1);
}
