#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hessform/cones.hpp"
#include "hessform/covariants.hpp"
#include "hessform/curvature.hpp"
#include "hessform/parser.hpp"
#include "hessform/rng.hpp"

using namespace hessform;

namespace {

const std::vector<Rational> kOnes{Rational(1), Rational(1), Rational(1)};

Form random_homogeneous(SampleRng& rng, int arity, int degree, long bound = 4) {
    while (true) {
        Form f(arity);
        Exponents e(arity, 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == arity - 1) {
                e[pos] = remaining;
                const long c = rng.int_in(-bound, bound);
                if (c != 0) f.add_term(e, Rational(c));
                return;
            }
            for (int k = remaining; k >= 0; --k) {
                e[pos] = k;
                self(self, pos + 1, remaining - k);
            }
        };
        rec(rec, 0, degree);
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("metric samples") {
    const Form q = parse_form("x^2-y^2-z^2", 3);
    const MetricSample m = metric_at(q, kOnes);
    CHECK(m.g == RationalMatrix::diagonal({Rational(-1), Rational(1), Rational(1)}));

    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    const MetricSample mf = metric_at(f, kOnes);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(mf.g.at(i, j) == Rational(i == j ? 2 : 5) * Rational(-1, 12));
    CHECK(mf.sig == Signature{2, 1, 0});  // scaled metric flips the Hessian signature
    CHECK(mf.nondegenerate);

    // metric entries scale like degree d-2 along rays
    std::vector<Rational> tripled{Rational(3), Rational(3), Rational(3)};
    const MetricSample m3 = metric_at(f, tripled);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m3.g.at(i, j) == mf.g.at(i, j) * Rational(9));

    CHECK_THROWS_AS(metric_at(parse_form("x", 3), kOnes), std::invalid_argument);
    std::vector<Rational> origin{Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(metric_at(f, origin), std::invalid_argument);
}

TEST_CASE("christoffel symbols") {
    // quadratic: constant metric, all zero
    const auto g2 = christoffel_first(parse_form("x^2-y^2-z^2", 3), kOnes);
    for (const auto& v : g2) CHECK(v.is_zero());

    // one-variable cubic: the single symbol is -1/2
    const Form x3 = parse_form("x^3", 1);
    const std::vector<Rational> one{Rational(1)};
    const auto g1 = christoffel_first(x3, one);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == Rational(-1, 2));
    // and it agrees with the metric-derivative route: g_11 = -x, so
    // Gamma_111 = (1/2) dg_11/dx = -1/2 at any point
    const std::vector<Rational> two{Rational(2)};
    CHECK(christoffel_first(x3, two)[0] == Rational(-1, 2));

    // full symmetry in all three indices on random ternary cubics
    SampleRng rng(71);
    const Form f = random_homogeneous(rng, 3, 3);
    std::vector<Rational> p{Rational(1), Rational(2), Rational(-1)};
    const auto gam = christoffel_first(f, p);
    auto at = [&](int i, int j, int k) { return gam[(i * 3 + j) * 3 + k]; };
    const int idx[3] = {0, 1, 2};
    for (int i : idx)
        for (int j : idx)
            for (int k : idx) {
                CHECK(at(i, j, k) == at(j, i, k));
                CHECK(at(i, j, k) == at(k, j, i));
            }
}

TEST_CASE("curvature tensor basics") {
    // any quadratic: flat
    const CurvatureTensor rq =
        curvature_tensor_at(parse_form("x^2-y^2-z^2", 3), kOnes);
    CHECK(rq.is_zero());

    // Fermat quartic at an index-cone point: flat
    const Form fermat = parse_form("x^4-y^4-z^4", 3);
    std::vector<Rational> p{Rational(2), Rational(1), Rational(1)};
    CHECK(curvature_tensor_at(fermat, p).is_zero());

    // degenerate metric raises
    std::vector<Rational> bad{Rational(1), Rational(1), Rational(0)};
    CHECK_THROWS_AS(curvature_tensor_at(parse_form("x*y*z*(x+y+z)", 3), bad), std::domain_error);
}

TEST_CASE("sectional curvature at the quartic witness point") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    const PlaneSpec tangent = level_set_tangent_plane(f, kOnes);
    const Rational k_u = sectional_curvature(f, kOnes, tangent);
    CHECK(k_u == Rational(5, 3));
    CHECK(sectional_curvature_on_m(f, kOnes, tangent) == Rational(1));

    // basis invariance: replace (u,v) by (u+v, 2v)
    PlaneSpec changed;
    changed.u.resize(3);
    changed.v.resize(3);
    for (int i = 0; i < 3; ++i) {
        changed.u[i] = tangent.u[i] + tangent.v[i];
        changed.v[i] = tangent.v[i] * Rational(2);
    }
    CHECK(sectional_curvature(f, kOnes, changed) == k_u);

    // quadratic: every plane is flat in the ambient space
    const Form q = parse_form("x^2-y^2-z^2", 3);
    PlaneSpec coord{{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}};
    CHECK(sectional_curvature(q, kOnes, coord).is_zero());

    // degenerate plane raises
    PlaneSpec degenerate{{Rational(1), Rational(0), Rational(0)},
                         {Rational(2), Rational(0), Rational(0)}};
    CHECK_THROWS_AS(sectional_curvature(f, kOnes, degenerate), std::domain_error);

    // non-tangent plane raises in the on-M route
    CHECK_THROWS_AS(sectional_curvature_on_m(f, kOnes, coord), std::invalid_argument);
}

TEST_CASE("two-route curvature agreement on random forms") {
    SampleRng rng(73);
    for (int degree = 3; degree <= 5; ++degree) {
        Form f = random_homogeneous(rng, 3, degree);
        Form h = hessian_det(f);
        while (h.is_zero()) {
            f = random_homogeneous(rng, 3, degree);
            h = hessian_det(f);
        }
        std::vector<std::vector<Rational>> pts;
        while (pts.size() < 5) {
            auto p = rng.point_in_box(3, Rational(-2), Rational(2));
            bool zero = true;
            for (const auto& c : p)
                if (!c.is_zero()) zero = false;
            if (zero || f.evaluate(p).is_zero() || h.evaluate(p).is_zero()) continue;
            pts.push_back(p);
        }
        CHECK(covariant_curvature_check(f, pts).pass());
    }

    // errors when H or f vanishes at a supplied point
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    std::vector<Rational> on_level{Rational(1), Rational(1), Rational(-1)};
    CHECK(f.evaluate(on_level) == Rational(-1));  // fine, f nonzero there
    std::vector<Rational> zero_f{Rational(1), Rational(-1), Rational(1)};
    CHECK_THROWS_AS(covariant_curvature_check(f, {{Rational(1), Rational(0), Rational(0)}}),
                    std::domain_error);
}

TEST_CASE("flatness certificates") {
    SampleRng rng(79);
    // binary forms with nonzero Hessian are flat
    for (int d = 3; d <= 5; ++d) {
        Form b = random_homogeneous(rng, 2, d);
        while (hessian_det(b).is_zero()) b = random_homogeneous(rng, 2, d);
        const FlatnessVerdict v = flatness_certificate(b, 10, 101 + d);
        CHECK(v.flat);
        CHECK(v.samples_checked == 10);
    }

    // the quartic example is not flat, witness found
    const FlatnessVerdict nf = flatness_certificate(parse_form("x*y*z*(x+y+z)", 3), 10, 5);
    CHECK_FALSE(nf.flat);
    CHECK(nf.witness.has_value());

    // a form whose Hessian vanishes identically never yields samples
    const FlatnessVerdict degenerate = flatness_certificate(parse_form("x^4", 2), 5, 7);
    CHECK_FALSE(degenerate.flat);
    CHECK(degenerate.samples_checked == 0);
    CHECK(degenerate.note.find("tried") != std::string::npos);
}

TEST_CASE("restriction positivity at index-cone points") {
    // what makes the level surface Riemannian: the scaled metric restricted
    // to the tangent space is positive definite inside the index cone
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    auto [samples, stats] = sample_cone(f, ConeKind::Index, 20, 999, Rational(-3), Rational(3));
    REQUIRE(samples.size() == 20);
    for (const auto& p : samples) {
        const MetricSample m = metric_at(f, p);
        const PlaneSpec plane = level_set_tangent_plane(f, p);
        RationalMatrix gram(2, 2);
        auto pairing = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
            Rational s;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s += m.g.at(i, j) * a[i] * b[j];
            return s;
        };
        gram.at(0, 0) = pairing(plane.u, plane.u);
        gram.at(0, 1) = pairing(plane.u, plane.v);
        gram.at(1, 0) = gram.at(0, 1);
        gram.at(1, 1) = pairing(plane.v, plane.v);
        CHECK(signature(gram) == Signature{2, 0, 0});
    }
}

TEST_CASE("finite-difference oracle") {
    SampleRng rng(83);
    const Form f = random_homogeneous(rng, 3, 3);
    const std::vector<double> p{1.0, 2.0, -1.0};
    CHECK(fd_curvature_oracle(f, p, 1e-4) < 1e-5);

    const std::vector<double> p2{1.1, 0.7, -0.9};
    CHECK(fd_curvature_oracle(parse_form("x*y*z*(x+y+z)", 3), p2, 1e-4) < 1e-5);

    CHECK(fd_curvature_oracle(parse_form("x^2-y^2-z^2", 3), p2, 1e-4) < 1e-8);

    // ill-conditioned metric raises: x^4 has identically singular Hessian
    const std::vector<double> pb{1.0, 1.0};
    CHECK_THROWS_AS(fd_curvature_oracle(parse_form("x^4", 2), pb, 1e-4), std::domain_error);
}

TEST_CASE("warped-product scaling") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    const PlaneSpec plane = level_set_tangent_plane(f, kOnes);
    const auto rep =
        warp_scaling_check(f, kOnes, plane, {Rational(2), Rational(3), Rational(1, 2)});
    CHECK(rep.pass());

    // quadratic: both sides vanish
    const Form q = parse_form("x^2-y^2-z^2", 3);
    std::vector<Rational> p{Rational(3), Rational(2), Rational(2)};
    const auto repq = warp_scaling_check(q, p, level_set_tangent_plane(q, p), {Rational(2)});
    CHECK(repq.pass());
    CHECK(repq.entries[0].lhs.is_zero());

    const Form g = parse_form("(x^2-y^2-z^2)*z", 3);
    std::vector<Rational> pg{Rational(0), Rational(2), Rational(-1)};
    CHECK(warp_scaling_check(g, pg, level_set_tangent_plane(g, pg), {Rational(2)}).pass());
}

TEST_CASE("log-metric product isometry") {
    const Form q = parse_form("x^2-y^2-z^2", 3);
    auto [sq, statsq] = sample_cone(q, ConeKind::Positive, 5, 11, Rational(-3), Rational(3));
    REQUIRE(sq.size() == 5);
    const LogMetricReport rq = log_metric_product_check(q, sq, 1e-8);
    CHECK(rq.pass);

    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    auto [sf, statsf] = sample_cone(f, ConeKind::Index, 5, 13, Rational(-3), Rational(3));
    REQUIRE(sf.size() == 5);
    CHECK(log_metric_product_check(f, sf, 1e-8).pass);

    // nonpositive sample raises
    std::vector<std::vector<Rational>> bad{{Rational(1), Rational(-1), Rational(1)}};
    CHECK_THROWS_AS(log_metric_product_check(f, bad, 1e-8), std::domain_error);
}
