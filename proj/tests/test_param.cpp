#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "zeroparam.hpp"

using namespace rm;

namespace {

using Pt = std::vector<Rat>;
using PtSet = std::set<std::vector<Rat>>;

PtSet to_set(const std::vector<Pt>& pts) { return PtSet(pts.begin(), pts.end()); }

// Exact equality of a parametrization against an explicit rational set.
bool equals_set(const ZeroDimParam& p, const PtSet& s) {
    if (p.degree() != (int)s.size()) return false;
    for (const auto& pt : s)
        if (!p.contains(pt)) return false;
    return true;
}

Pt pt(std::initializer_list<long> cs) {
    Pt v;
    for (long c : cs) v.emplace_back(c);
    return v;
}

} // namespace

TEST_CASE("params_from_points and membership") {
    Rng rng(11);
    std::vector<Pt> pts{pt({1, 2}), pt({3, 4})};
    auto p = params_from_points(pts, 2, rng);
    CHECK(p.degree() == 2);
    CHECK(p.contains(pt({1, 2})));
    CHECK(p.contains(pt({3, 4})));
    CHECK(!p.contains(pt({1, 4})));
    CHECK(equals_set(p, to_set(pts)));
    auto roots = p.rational_points();
    CHECK(to_set(roots) == to_set(pts));
}

TEST_CASE("union_0 spec examples") {
    Rng rng(12);
    auto a = params_from_points({pt({1, 2})}, 2, rng.fork(1));
    auto b = params_from_points({pt({3, 4})}, 2, rng.fork(2));
    auto u = union_0(a, b, rng.fork(3));
    CHECK(equals_set(u, {{pt({1, 2})}, {pt({3, 4})}}));
    // idempotence
    auto uu = union_0(u, u, rng.fork(4));
    CHECK(equals_set(uu, {{pt({1, 2})}, {pt({3, 4})}}));
    CHECK(uu.degree() == 2);
    // with empty
    auto ue = union_0(a, ZeroDimParam::empty_set(2), rng.fork(5));
    CHECK(equals_set(ue, {{pt({1, 2})}}));
}

TEST_CASE("discard_0 spec examples") {
    Rng rng(13);
    auto s = params_from_points({pt({1, 2}), pt({3, 4})}, 2, rng.fork(1));
    auto t = params_from_points({pt({3, 4})}, 2, rng.fork(2));
    auto d = discard_0(s, t, rng.fork(3));
    CHECK(equals_set(d, {{pt({1, 2})}}));
    CHECK(discard_0(s, ZeroDimParam::empty_set(2), rng.fork(4)).degree() == 2);
    CHECK(discard_0(s, s, rng.fork(5)).is_empty());
}

TEST_CASE("intersect_0 spec examples") {
    Rng rng(14);
    auto s = params_from_points({pt({1, 0}), pt({-1, 0}), pt({0, 1})}, 2, rng.fork(1));
    // G = x2
    Slp g(2, {}, {});
    g.set_outputs({Slp::input_index(2, 2)});
    auto r = intersect_0(s, g);
    CHECK(equals_set(r, {{pt({1, 0})}, {pt({-1, 0})}}));
    // G = 0
    Slp z(2, {}, {});
    z.set_outputs({z.push_const(Rat(0))});
    CHECK(intersect_0(s, z).degree() == 3);
    // G = 1
    Slp one(2, {}, {});
    one.set_outputs({one.push_const(Rat(1))});
    CHECK(intersect_0(s, one).is_empty());
}

TEST_CASE("project_0 spec examples") {
    Rng rng(15);
    auto s = params_from_points({pt({1, 2}), pt({1, 5})}, 2, rng.fork(1));
    auto p = project_0(s, 1, rng.fork(2));
    CHECK(p.n == 1);
    CHECK(p.degree() == 1);
    CHECK(p.contains(pt({1})));
    CHECK(project_0(s, 2, rng.fork(3)).degree() == 2);
    auto bullet = project_0(s, 0, rng.fork(4));
    CHECK(bullet.n == 0);
    CHECK(bullet.degree() == 1);
}

TEST_CASE("lift_0 spec examples") {
    Rng rng(16);
    auto q = params_from_points({pt({1, 2}), pt({3, 4})}, 2, rng.fork(1));
    auto r = params_from_points({pt({1})}, 1, rng.fork(2));
    auto l = lift_0(q, r, rng.fork(3));
    CHECK(equals_set(l, {{pt({1, 2})}}));
    // R = projection of Q: lift gives Q back
    auto pr = project_0(q, 1, rng.fork(4));
    CHECK(lift_0(q, pr, rng.fork(5)).degree() == 2);
    // R empty
    CHECK(lift_0(q, ZeroDimParam::empty_set(1), rng.fork(6)).is_empty());
}

TEST_CASE("change_vars_0") {
    Rng rng(17);
    auto s = params_from_points({pt({1, 2})}, 2, rng.fork(1));
    auto id = change_vars_0(s, LinearChange::identity(2));
    CHECK(equals_set(id, {{pt({1, 2})}}));
    LinearChange sw(2, 0, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    auto swapped = change_vars_0(s, sw);
    CHECK(equals_set(swapped, {{pt({2, 1})}}));
    // scaling x1 by 2: phi_A(x) = A^{-1} x maps (1,2) -> (1/2, 2)
    LinearChange diag(2, 0, {{Rat(2), Rat(0)}, {Rat(0), Rat(1)}});
    auto sc = change_vars_0(s, diag);
    CHECK(sc.contains({make_rat(1, 2), Rat(2)}));
    // round trip
    auto back = change_vars_0(sc, diag.inverse_change());
    CHECK(equals_set(back, {{pt({1, 2})}}));
}

TEST_CASE("set-operation randomized oracle") {
    Rng master(20250809);
    for (int iter = 0; iter < 25; ++iter) {
        Rng rng = master.fork(iter);
        int n = 1 + (int)rng.draw_int(0, 3);
        int na = (int)rng.draw_int(0, 8), nb = (int)rng.draw_int(0, 8);
        std::vector<Pt> apts, bpts;
        auto rnd_pt = [&]() {
            Pt p(n);
            for (auto& c : p) c = Rat(rng.draw_int(-4, 4));
            return p;
        };
        for (int i = 0; i < na; ++i) apts.push_back(rnd_pt());
        for (int i = 0; i < nb; ++i) bpts.push_back(rnd_pt());
        PtSet sa = to_set(apts), sb = to_set(bpts);
        auto pa = params_from_points(apts, n, rng.fork(1));
        auto pb = params_from_points(bpts, n, rng.fork(2));

        PtSet su = sa;
        su.insert(sb.begin(), sb.end());
        CHECK(equals_set(union_0(pa, pb, rng.fork(3)), su));

        PtSet sd;
        std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::inserter(sd, sd.begin()));
        CHECK(equals_set(discard_0(pa, pb, rng.fork(4)), sd));

        int e = (int)rng.draw_int(1, n);
        PtSet sp;
        for (const auto& p : sa) sp.insert(Pt(p.begin(), p.begin() + e));
        CHECK(equals_set(project_0(pa, e, rng.fork(5)), sp));

        // lift over projections of b
        std::vector<Pt> bproj;
        for (const auto& p : sb) bproj.push_back(Pt(p.begin(), p.begin() + e));
        auto pr = params_from_points(bproj, e, rng.fork(6));
        PtSet sl;
        for (const auto& p : sa) {
            Pt pp(p.begin(), p.begin() + e);
            bool in = false;
            for (const auto& bp : bproj)
                if (bp == pp) in = true;
            if (in) sl.insert(p);
        }
        CHECK(equals_set(lift_0(pa, pr, rng.fork(7)), sl));
    }
}
