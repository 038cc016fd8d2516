#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hessform/parser.hpp"
#include "hessform/rng.hpp"

using namespace hessform;

namespace {

Form random_homogeneous(SampleRng& rng, int arity, int degree) {
    while (true) {
        Form f(arity);
        Exponents e(arity, 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == arity - 1) {
                e[pos] = remaining;
                const long c = rng.int_in(-5, 5);
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

TEST_CASE("rational invariants") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-4, -2) == Rational(2));
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(2, 3).str() == "2/3");
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-5, 2).floor_to_long() == -3);
    CHECK(Rational(-5, 2).ceil_to_long() == -2);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parse the running examples") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    CHECK(f.terms().size() == 3);
    CHECK(f.coefficient({2, 1, 1}) == Rational(1));
    CHECK(f.coefficient({1, 2, 1}) == Rational(1));
    CHECK(f.coefficient({1, 1, 2}) == Rational(1));
    CHECK(f.degree() == 4);
    CHECK(f.is_homogeneous());

    CHECK(parse_form("0", 3).is_zero());

    const Form m = parse_form("x^6+y^6+z^6-10*(x^3*y^3+y^3*z^3+z^3*x^3)", 3);
    CHECK(m.terms().size() == 6);
    CHECK(m.coefficient({6, 0, 0}) == Rational(1));
    CHECK(m.coefficient({3, 3, 0}) == Rational(-10));
    CHECK(m.coefficient({0, 3, 3}) == Rational(-10));
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse_form("x+", 3), ParseError);
    CHECK_THROWS_AS(parse_form("x^(2)", 3), ParseError);     // exponent must be a literal
    CHECK_THROWS_AS(parse_form("x^-2", 3), ParseError);
    CHECK_THROWS_AS(parse_form("w+1", 3), ParseError);       // unknown variable
    CHECK_THROWS_AS(parse_form("z", 2), ParseError);         // out of range for arity
    CHECK_THROWS_AS(parse_form("2x", 3), ParseError);        // no implicit multiplication
    CHECK_THROWS_AS(parse_form("x^1/2", 3), ParseError);     // trailing input
    try {
        parse_form("x + $", 3);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("indexed variables and arity inference") {
    const Form f = parse_form("(x0^2+x1^2-x2^2-x3^2)*x3", 4);
    CHECK(f.arity() == 4);
    std::vector<Rational> p{Rational(0), Rational(0), Rational(2), Rational(-1)};
    CHECK(f.evaluate(p) == Rational(5));

    CHECK(infer_arity("x^2+y^2") == 2);
    CHECK(infer_arity("x*y*z") == 3);
    CHECK(infer_arity("(x0^2+x1^2-x2^2-x3^2)*x3") == 4);
    CHECK(infer_arity("5") == 1);
}

TEST_CASE("algebra matches the worked examples") {
    const Form a = parse_form("x+y", 2), b = parse_form("x-y", 2);
    CHECK(a * b == parse_form("x^2-y^2", 2));
    CHECK(parse_form("x+z", 3).pow(3) == parse_form("x^3+3*x^2*z+3*x*z^2+z^3", 3));
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    CHECK((f - f).is_zero());
}

TEST_CASE("ring axioms on random forms") {
    SampleRng rng(7);
    for (int t = 0; t < 20; ++t) {
        const int arity = 2 + static_cast<int>(rng.int_in(0, 1));
        const Form a = random_homogeneous(rng, arity, static_cast<int>(rng.int_in(1, 3)));
        const Form b = random_homogeneous(rng, arity, static_cast<int>(rng.int_in(1, 3)));
        const Form c = random_homogeneous(rng, arity, static_cast<int>(rng.int_in(1, 3)));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("derivatives: mixed partials commute, Euler identity, worked example") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    const std::vector<int> order1{0, 1, 2}, order2{2, 0, 1};
    CHECK(f.derivative(order1) == parse_form("2*x+2*y+2*z", 3));
    CHECK(f.derivative(order1) == f.derivative(order2));

    CHECK(parse_form("5", 3).derivative(0).is_zero());
    CHECK_THROWS_AS(f.derivative(3), std::out_of_range);

    SampleRng rng(11);
    for (int degree = 2; degree <= 8; ++degree) {
        const Form g = random_homogeneous(rng, 3, degree);
        CHECK(euler_vector_field(g) == g * Rational(degree));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(g.derivative(i).derivative(j) == g.derivative(j).derivative(i));
    }
}

TEST_CASE("linear substitution") {
    const Form f = parse_form("x^2-y^2", 2);
    RationalMatrix swap(2, 2);
    swap.at(0, 1) = Rational(1);
    swap.at(1, 0) = Rational(1);
    CHECK(f.substitute_linear(swap) == parse_form("y^2-x^2", 2));

    const Form g = parse_form("x^3-2*x*y*z+z^3", 3);
    CHECK(g.substitute_linear(RationalMatrix::identity(3)) == g);

    // degree is preserved and the composition law holds
    SampleRng rng(3);
    const Form h = random_homogeneous(rng, 3, 4);
    RationalMatrix a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a.at(i, j) = Rational(rng.int_in(-2, 2));
            b.at(i, j) = Rational(rng.int_in(-2, 2));
        }
    CHECK(h.substitute_linear(a).substitute_linear(b) == h.substitute_linear(a * b));
    // products are respected
    const Form k = random_homogeneous(rng, 3, 3);
    CHECK((h * k).substitute_linear(a) == h.substitute_linear(a) * k.substitute_linear(a));

    // the degeneration substitution from the limit family
    RationalMatrix c(3, 3);
    c = RationalMatrix::identity(3);
    c.at(2, 0) = Rational(1);  // z -> x + z (row view)
    const Form zcube = parse_form("z^3", 3);
    CHECK(zcube.substitute_linear(c) == parse_form("(x+z)^3", 3));
}

TEST_CASE("evaluation") {
    const Form f = parse_form("x*y*z*(x+y+z)", 3);
    std::vector<Rational> ones{Rational(1), Rational(1), Rational(1)};
    CHECK(f.evaluate(ones) == Rational(3));
    std::vector<Rational> zero{Rational(0), Rational(0), Rational(0)};
    CHECK(f.evaluate(zero).is_zero());

    // exact homogeneity under rational scaling
    std::vector<Rational> p{Rational(1, 2), Rational(-2), Rational(3, 5)};
    std::vector<Rational> p2 = p;
    for (auto& c : p2) c *= Rational(7, 3);
    CHECK(f.evaluate(p2) == Rational(7, 3).pow(4) * f.evaluate(p));

    std::vector<double> pd{1.0, 1.0, 1.0};
    CHECK(f.evaluate(pd) == doctest::Approx(3.0));
    CHECK_THROWS_AS(f.evaluate(std::vector<Rational>{Rational(1)}), std::invalid_argument);
}

TEST_CASE("canonical printing round-trips") {
    const char* samples[] = {
        "x*y*z*(x+y+z)",
        "x^6+y^6+z^6-10*(x^3*y^3+y^3*z^3+z^3*x^3)",
        "1/2*x^2-3*y+7/9",
        "-x^4+2*x^2*y^2-y^4",
    };
    for (const char* s : samples) {
        const Form f = parse_form(s, 3);
        CHECK(parse_form(f.str(), 3) == f);
    }
    CHECK(Form(3).str() == "0");
    CHECK(parse_form("x*y*z*(x+y+z)", 3).str() == "x^2*y*z + x*y^2*z + x*y*z^2");

    SampleRng rng(5);
    for (int t = 0; t < 30; ++t) {
        const Form f = random_homogeneous(rng, 3, static_cast<int>(rng.int_in(1, 5)));
        CHECK(parse_form(f.str(), 3) == f);
    }
    // arity above three switches to indexed names
    const Form g = parse_form("(x0^2+x1^2-x2^2-x3^2)*x3", 4);
    CHECK(parse_form(g.str(), 4) == g);
}

TEST_CASE("eps-truncated arithmetic") {
    SampleRng rng(13);
    const Form a = random_homogeneous(rng, 3, 2), b = random_homogeneous(rng, 3, 2);
    const Form c = random_homogeneous(rng, 3, 2), d = random_homogeneous(rng, 3, 2);
    const EpsForm p(a, b), q(c, d);
    const EpsForm prod = p * q;
    CHECK(prod.base == a * c);
    CHECK(prod.eps == a * d + b * c);

    // a product of two pure-eps elements vanishes entirely
    const EpsForm pure1(Form(3), b), pure2(Form(3), d);
    const EpsForm pp = pure1 * pure2;
    CHECK(pp.base.is_zero());
    CHECK(pp.eps.is_zero());

    // (a + eps b)^3 = a^3 + 3 eps a^2 b
    const EpsForm cube = p.pow(3);
    CHECK(cube.base == a.pow(3));
    CHECK(cube.eps == a.pow(2) * b * Rational(3));
}
