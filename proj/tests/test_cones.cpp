#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hessform/cones.hpp"
#include "hessform/covariants.hpp"
#include "hessform/parser.hpp"
#include "hessform/rng.hpp"

using namespace hessform;

TEST_CASE("classification at the worked points") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    std::vector<Rational> ones{Rational(1), Rational(1), Rational(1)};
    const ConeClassification c = classify_point(f, ones);
    CHECK(c.f_value == Rational(3));
    CHECK(c.hessian_signature == Signature{1, 2, 0});
    CHECK(c.in_positive_cone);
    CHECK(c.in_index_cone);

    std::vector<Rational> neg{Rational(1), Rational(1), Rational(-1)};
    const ConeClassification cn = classify_point(f, neg);
    CHECK(cn.f_value == Rational(-1));
    CHECK_FALSE(cn.in_positive_cone);
    CHECK_FALSE(cn.in_index_cone);

    const Form f4 = parse_form("(x0^2+x1^2-x2^2-x3^2)*x3", 4);
    std::vector<Rational> p4{Rational(0), Rational(0), Rational(2), Rational(-1)};
    const ConeClassification c4 = classify_point(f4, p4);
    CHECK(c4.f_value == Rational(5));
    CHECK(c4.in_index_cone);

    // positive cone strictly larger for this form
    std::vector<Rational> p4b{Rational(2), Rational(0), Rational(0), Rational(1)};
    const ConeClassification c4b = classify_point(f4, p4b);
    CHECK(c4b.f_value == Rational(3));
    CHECK(c4b.in_positive_cone);
    CHECK_FALSE(c4b.in_index_cone);

    std::vector<Rational> origin{Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(classify_point(f, origin), std::invalid_argument);
}

TEST_CASE("classification is ray-invariant") {
    SampleRng rng(91);
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    int tested = 0;
    while (tested < 15) {
        auto p = rng.point_in_box(3, Rational(-3), Rational(3));
        bool zero = true;
        for (const auto& c : p)
            if (!c.is_zero()) zero = false;
        if (zero) continue;
        const ConeClassification base = classify_point(f, p);
        for (const Rational& lambda : {Rational(2), Rational(1, 3)}) {
            auto q = p;
            for (auto& c : q) c *= lambda;
            const ConeClassification scaled = classify_point(f, q);
            CHECK(scaled.in_positive_cone == base.in_positive_cone);
            CHECK(scaled.in_index_cone == base.in_index_cone);
            CHECK(scaled.hessian_signature == base.hessian_signature);
        }
        ++tested;
    }
}

TEST_CASE("sampling is deterministic and self-consistent") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    auto [s1, st1] = sample_cone(f, ConeKind::Index, 25, 42, Rational(-3), Rational(3));
    auto [s2, st2] = sample_cone(f, ConeKind::Index, 25, 42, Rational(-3), Rational(3));
    CHECK(s1 == s2);
    CHECK(st1.tried == st2.tried);
    REQUIRE(s1.size() == 25);
    for (const auto& p : s1) {
        CHECK(classify_point(f, p).in_index_cone);
        for (const auto& c : p) {
            CHECK(c >= Rational(-3));
            CHECK(c <= Rational(3));
        }
    }

    // a form that is never positive: empty sample, statistics reported
    const Form neg = parse_form("-(x^4+y^4+z^4)", 3);
    auto [s3, st3] = sample_cone(neg, ConeKind::Positive, 5, 1, Rational(-3), Rational(3), 500);
    CHECK(s3.empty());
    CHECK(st3.accepted == 0);
    CHECK(st3.tried == 500);
}

TEST_CASE("index cone description of the four-variable cubic") {
    const Form f = parse_form("(x0^2+x1^2-x2^2-x3^2)*x3", 4);
    auto [samples, stats] = sample_cone(f, ConeKind::Index, 40, 7, Rational(-3), Rational(3));
    REQUIRE(samples.size() == 40);
    for (const auto& p : samples) {
        CHECK(p[3].sign() < 0);
        const Rational quad = p[0] * p[0] + p[1] * p[1] - p[2] * p[2] + p[3] * p[3] * Rational(3);
        CHECK(quad.sign() < 0);
    }
}

TEST_CASE("cone comparison") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    auto [samples, stats] = sample_cone(f, ConeKind::Positive, 100, 3, Rational(-3), Rational(3));
    const ConeComparisonReport rep = cone_comparison(f, samples);
    CHECK(rep.checked == 100);
    CHECK(rep.discrepancies == 0);

    const Form f4 = parse_form("(x0^2+x1^2-x2^2-x3^2)*x3", 4);
    auto [s4, st4] = sample_cone(f4, ConeKind::Positive, 100, 3, Rational(-3), Rational(3));
    const ConeComparisonReport rep4 = cone_comparison(f4, s4);
    CHECK(rep4.discrepancies > 0);  // e.g. (2,0,0,1) is positive but not index
    CHECK_FALSE(rep4.witnesses.empty());

    // quadratic Lorentz form: the two cones agree (constant Hessian)
    const Form q = parse_form("x^2-y^2-z^2", 3);
    auto [sq, stq] = sample_cone(q, ConeKind::Positive, 50, 3, Rational(-3), Rational(3));
    CHECK(cone_comparison(q, sq).discrepancies == 0);
}

TEST_CASE("curvature scans") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    auto [samples, stats] = sample_cone(f, ConeKind::Index, 30, 19, Rational(-3), Rational(3));
    const ScanTable t = curvature_scan(f, samples, ScanMode::SurfaceCurvature);
    CHECK(t.evaluated == 30);
    CHECK(t.skipped == 0);
    CHECK(t.positive == 30);
    REQUIRE(t.k_min.has_value());
    CHECK(t.k_min->sign() > 0);

    // determinant sign consistency on index-cone samples: a (1,2) signature
    // 3x3 Hessian has positive determinant
    const Form h = hessian_det(f);
    for (const auto& p : samples) CHECK(h.evaluate(p).sign() > 0);

    // hyperbolic quadratic: every sample gives exactly -1
    const Form q = parse_form("x^2-y^2-z^2", 3);
    auto [sq, stq] = sample_cone(q, ConeKind::Index, 20, 23, Rational(-3), Rational(3));
    const ScanTable tq = curvature_scan(q, sq, ScanMode::SurfaceCurvature);
    CHECK(tq.evaluated == 20);
    CHECK(tq.k_min == Rational(-1));
    CHECK(tq.k_max == Rational(-1));

    // full-tensor mode on a flat form
    const Form fermat = parse_form("x^4-y^4-z^4", 3);
    auto [sf, stf] = sample_cone(fermat, ConeKind::Index, 10, 29, Rational(-3), Rational(3));
    const ScanTable tf = curvature_scan(fermat, sf, ScanMode::FullTensor);
    for (const auto& row : tf.rows)
        if (!row.skipped) CHECK(row.tensor_zero);

    // surface mode requires arity 3
    const Form f4 = parse_form("(x0^2+x1^2-x2^2-x3^2)*x3", 4);
    CHECK_THROWS_AS(curvature_scan(f4, {}, ScanMode::SurfaceCurvature), std::invalid_argument);
}

TEST_CASE("reduced-surface scan for the four-variable cubic") {
    // the x0 = 0 slice is totally geodesic; its surface curvature is checked
    // exactly against the closed form and stays positive on the cone
    const Form g = parse_form("(x^2-y^2-z^2)*z", 3);
    auto [samples, stats] = sample_cone(g, ConeKind::Index, 25, 31, Rational(-3), Rational(3));
    REQUIRE(samples.size() == 25);
    const ScanTable t = curvature_scan(g, samples, ScanMode::SurfaceCurvature);
    CHECK(t.evaluated == 25);
    CHECK(t.positive == 25);
    for (const auto& row : t.rows) {
        REQUIRE(row.k_m.has_value());
        const Rational a = row.point[0] * row.point[0] - row.point[1] * row.point[1] -
                           row.point[2] * row.point[2];
        const Rational b = row.point[0] * row.point[0] - row.point[1] * row.point[1] +
                           row.point[2] * row.point[2] * Rational(3);
        CHECK(*row.k_m == Rational(-9, 4) + Rational(9, 4) * a * a / (b * b));
    }
}
