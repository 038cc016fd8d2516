#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hessform/covariants.hpp"
#include "hessform/parser.hpp"
#include "hessform/rng.hpp"
#include "hessform/tangent.hpp"

using namespace hessform;

namespace {

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

Form witness_alpha(int d) {
    Form alpha(2);
    alpha.add_term({d - 2, 2}, Rational(static_cast<long>(d) * (d - 1) / 2));
    return alpha;
}

}  // namespace

TEST_CASE("T annihilates the known kernel") {
    SampleRng rng(101);
    for (int d = 4; d <= 7; ++d)
        for (int t = 0; t < 4; ++t) {
            const Form alpha = random_homogeneous(rng, 2, d);
            CHECK(t_operator(alpha, Form::constant(2, Rational(1))).is_zero());
            CHECK(t_operator(alpha, Form::variable(2, 0)).is_zero());
            CHECK(t_operator(alpha, Form::variable(2, 1)).is_zero());
            CHECK(t_operator(alpha, alpha.derivative(0)).is_zero());
            CHECK(t_operator(alpha, alpha.derivative(1)).is_zero());
            CHECK(t_operator(alpha, alpha).is_zero());
        }
    CHECK_THROWS_AS(t_operator(parse_form("x^4", 3), parse_form("x", 2)), std::invalid_argument);
}

TEST_CASE("T is linear in h and matches the diagonal form at the witness") {
    SampleRng rng(103);
    const Form alpha = random_homogeneous(rng, 2, 5);
    const Form h1 = random_homogeneous(rng, 2, 4);
    const Form h2 = random_homogeneous(rng, 2, 4);
    CHECK(t_operator(alpha, h1 + h2) == t_operator(alpha, h1) + t_operator(alpha, h2));

    // the eigen-relation at the witness: h = y^3, d = 4 picks up eigenvalue 6,
    // so T(alpha, y^3) = -d^2(d-1)^2(d-2)^2 * 6 * y^3
    const Form a4 = witness_alpha(4);
    CHECK(a4 == parse_form("6*x^2*y^2", 2));
    const Form t = t_operator(a4, parse_form("y^3", 2));
    CHECK(t == parse_form("-3456*y^3", 2));  // -(16*9*4)*6 = -3456

    // operator identity T = -d^2(d-1)^2(d-2)^2 x^(2d-8) U at the witness
    for (int d = 4; d <= 7; ++d) {
        const Form alpha_w = witness_alpha(d);
        const Form h = random_homogeneous(rng, 2, d - 1, 3);
        const Form u = Form::monomial(2, {2, 0}, Rational(1)) * h.derivative(0).derivative(0) -
                       Form::monomial(2, {1, 1}, Rational(d - 3)) * h.derivative(0).derivative(1) +
                       Form::monomial(2, {0, 2}, Rational(static_cast<long>(d - 2) * (d - 3), 2)) *
                           h.derivative(1).derivative(1);
        const long pref = static_cast<long>(d) * d * (d - 1) * (d - 1) * (d - 2) * (d - 2);
        CHECK(t_operator(alpha_w, h) == Form::monomial(2, {2 * d - 8, 0}, Rational(-pref)) * u);
    }
}

TEST_CASE("first variation: routes agree and the frozen example holds") {
    SampleRng rng(107);
    for (int d = 4; d <= 6; ++d)
        for (int t = 0; t < 4; ++t) {
            const Form alpha = random_homogeneous(rng, 2, d);
            const Form g = random_homogeneous(rng, 3, d, 3);
            const VariationResult v = clebsch_first_variation(alpha, g);
            CHECK(v.routes_agree);
            CHECK(v.base_covariant_zero);
            if (!v.variation.is_zero()) CHECK(v.variation.degree() == 4 * (d - 3));
        }

    // alpha = 6x^2y^2, g = y^3 z: variation is 24 z * T(alpha, y^3) = -82944 y^3 z
    const VariationResult v =
        clebsch_first_variation(parse_form("6*x^2*y^2", 2), parse_form("y^3*z", 3));
    CHECK(v.routes_agree);
    CHECK(v.variation == parse_form("-82944*y^3*z", 3));

    // trivial directions
    CHECK(clebsch_first_variation(parse_form("6*x^2*y^2", 2), parse_form("z^4", 3))
              .variation.is_zero());
    CHECK(clebsch_first_variation(parse_form("6*x^2*y^2", 2), parse_form("x^2*y^2", 3))
              .variation.is_zero());

    // superposition
    const Form alpha = random_homogeneous(rng, 2, 4);
    const Form g1 = random_homogeneous(rng, 3, 4, 3), g2 = random_homogeneous(rng, 3, 4, 3);
    CHECK(clebsch_first_variation(alpha, g1 + g2).variation ==
          clebsch_first_variation(alpha, g1).variation +
              clebsch_first_variation(alpha, g2).variation);

    CHECK_THROWS_AS(clebsch_first_variation(parse_form("x^4", 2), parse_form("x^2*y", 3)),
                    std::invalid_argument);  // direction degree must match alpha
    CHECK_THROWS_AS(clebsch_first_variation(parse_form("x^3", 2), parse_form("x^2*y", 3)),
                    std::invalid_argument);  // alpha degree must be at least 4
}

TEST_CASE("kernels of T across degrees") {
    // spec'd worked case: degree-3 binary forms at the d=4 witness
    const KernelBasis k3 = kernel_of_t(parse_form("6*x^2*y^2", 2), 3);
    CHECK(k3.basis.size() == 2);
    // kernel = span{x^2 y, x y^2}
    for (const Form& h : k3.basis) {
        CHECK(t_operator(k3.alpha, h).is_zero());
        CHECK(h.coefficient({3, 0}).is_zero());
        CHECK(h.coefficient({0, 3}).is_zero());
    }

    // d=5: no kernel in degree 2
    CHECK(kernel_of_t(witness_alpha(5), 2).basis.empty());

    // witness dimensions across all degrees, d = 4..9
    for (int d = 4; d <= 9; ++d) {
        const Form alpha = witness_alpha(d);
        std::vector<int> dims;
        for (int r = 0; r <= d; ++r)
            dims.push_back(static_cast<int>(kernel_of_t(alpha, r).basis.size()));
        std::vector<int> expected(d + 1, 0);
        expected[0] = 1;
        expected[1] = 2;
        expected[d - 1] = 2;
        expected[d] = 1;
        CHECK(dims == expected);
    }
}

TEST_CASE("monomial spectrum") {
    const SpectrumTable t4 = monomial_spectrum(4);
    CHECK(t4.zero_set_expected);
    CHECK(t4.discriminants_negative_from_3);
    auto eig = [&](int i, int j) {
        for (const auto& e : t4.entries)
            if (e.i == i && e.j == j) return e.eigenvalue;
        FAIL("missing entry");
        return Rational(0);
    };
    CHECK(eig(2, 1).is_zero());
    CHECK(eig(1, 2).is_zero());
    CHECK(eig(2, 2).is_zero());
    CHECK(eig(0, 3) == Rational(6));
    for (const auto& [j, delta] : t4.discriminants)
        if (j == 3) CHECK(delta == Rational(-8));

    for (int d = 5; d <= 9; ++d) {
        const SpectrumTable t = monomial_spectrum(d);
        CHECK(t.zero_set_expected);
        CHECK(t.discriminants_negative_from_3);
    }
    CHECK_THROWS_AS(monomial_spectrum(3), std::invalid_argument);
}

TEST_CASE("tangent space comparison") {
    const ZariskiReport rep = zariski_tangent_compare(parse_form("6*x^2*y^2", 2));
    CHECK_FALSE(rep.degenerate_alpha);
    CHECK(rep.span_dim == 10);
    CHECK(rep.kernel_dim == 10);
    CHECK(rep.span_in_kernel);
    CHECK(rep.equal);
    CHECK(rep.routes_agreed);

    const ZariskiReport rep5 = zariski_tangent_compare(parse_form("10*x^3*y^2", 2));
    CHECK(rep5.span_dim == 11);
    CHECK(rep5.kernel_dim == 11);
    CHECK(rep5.equal);

    // alpha = x^4 has a vanishing y-derivative: the listed forms degenerate
    const ZariskiReport degen = zariski_tangent_compare(parse_form("x^4", 2));
    CHECK(degen.degenerate_alpha);
}

TEST_CASE("degeneration family expansion") {
    // d = 3, b = 3, alpha = 0: coefficients 3x^2 z, 3x z^2, z^3
    const LimitFamilyReport r3 = closure_limit_expand(Form(2), Rational(3), 3);
    CHECK(r3.no_negative_powers);
    CHECK(r3.c0_matches);
    REQUIRE(r3.coefficients.size() == 3);
    CHECK(r3.coefficients[0] == parse_form("3*x^2*z", 3));
    CHECK(r3.coefficients[1] == parse_form("3*x*z^2", 3));
    CHECK(r3.coefficients[2] == parse_form("z^3", 3));

    // b = 0: the family is constantly alpha
    const Form alpha = parse_form("x^4-2*x*y^3", 2);
    const LimitFamilyReport r0 = closure_limit_expand(alpha, Rational(0), 4);
    CHECK(r0.no_negative_powers);
    CHECK(r0.c0_matches);
    CHECK(r0.coefficients[0] == embed(alpha, 3));
    for (size_t k = 1; k < r0.coefficients.size(); ++k) CHECK(r0.coefficients[k].is_zero());

    // d = 4, b = 4, alpha = y^4
    const LimitFamilyReport r4 = closure_limit_expand(parse_form("y^4", 2), Rational(4), 4);
    CHECK(r4.coefficients[0] == parse_form("y^4+4*x^3*z", 3));

    // random checks including rational b
    SampleRng rng(109);
    for (int d = 3; d <= 6; ++d) {
        const Form a = random_homogeneous(rng, 2, d);
        const Rational b(rng.int_in(-8, 8), rng.int_in(1, 3));
        const LimitFamilyReport r = closure_limit_expand(a, b, d);
        CHECK(r.no_negative_powers);
        CHECK(r.c0_matches);
        // every listed coefficient is homogeneous of degree d in x,y,z
        for (const Form& coeff : r.coefficients) {
            CHECK(coeff.is_homogeneous());
            if (!coeff.is_zero()) CHECK(coeff.degree() == d);
        }
    }
}
