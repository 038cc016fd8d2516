#include "hessform/tangent.hpp"

#include "hessform/covariants.hpp"

namespace hessform {

namespace {

void require_binary(const Form& f, const char* who) {
    if (f.arity() != 2) throw std::invalid_argument(std::string(who) + ": arity must be 2");
}

// the three quadratic expressions in the third partials of alpha
struct TCoefficients {
    Form a, b, c;
};

TCoefficients t_coefficients(const Form& alpha) {
    auto d3 = [&](int i, int j, int k) {
        return alpha.derivative(i).derivative(j).derivative(k);
    };
    const Form a111 = d3(0, 0, 0), a112 = d3(0, 0, 1), a122 = d3(0, 1, 1), a222 = d3(1, 1, 1);
    return {a112 * a222 - a122 * a122, a112 * a122 - a111 * a222, a111 * a122 - a112 * a112};
}

std::vector<Exponents> monomial_basis(int arity, int degree) {
    std::vector<Exponents> basis;
    Exponents e(arity, 0);
    // graded-lex descending enumeration
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == arity - 1) {
            e[pos] = remaining;
            basis.push_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    rec(rec, 0, degree);
    return basis;
}

// columns: input forms expressed by their images; rows: the union of output monomials
RationalMatrix operator_matrix(const std::vector<Form>& images, int arity) {
    std::map<Exponents, int, GradedLexDesc> row_of;
    for (const Form& im : images)
        for (const auto& [e, c] : im.terms())
            row_of.try_emplace(e, 0);
    int r = 0;
    for (auto& [e, idx] : row_of) idx = r++;

    RationalMatrix m(std::max(r, 1), static_cast<int>(images.size()));
    for (int col = 0; col < static_cast<int>(images.size()); ++col)
        for (const auto& [e, c] : images[col].terms()) m.at(row_of[e], col) = c;
    (void)arity;
    return m;
}

}  // namespace

Form t_operator(const Form& alpha, const Form& h) {
    require_binary(alpha, "t_operator");
    require_binary(h, "t_operator");
    const TCoefficients tc = t_coefficients(alpha);
    const Form h11 = h.derivative(0).derivative(0);
    const Form h12 = h.derivative(0).derivative(1);
    const Form h22 = h.derivative(1).derivative(1);
    return h11 * tc.a + h12 * tc.b + h22 * tc.c;
}

Form variation_bracket(const Form& alpha, const Form& g) {
    require_binary(alpha, "variation_bracket");
    if (g.arity() != 3) throw std::invalid_argument("variation_bracket: direction must be ternary");
    const Form a3 = embed(alpha, 3);
    auto d3 = [](const Form& f, int i, int j, int k) {
        return f.derivative(i).derivative(j).derivative(k);
    };
    const Form a111 = d3(a3, 0, 0, 0), a112 = d3(a3, 0, 0, 1), a122 = d3(a3, 0, 1, 1),
               a222 = d3(a3, 1, 1, 1);
    return d3(g, 0, 0, 2) * (a112 * a222 - a122 * a122) +
           d3(g, 0, 1, 2) * (a112 * a122 - a111 * a222) +
           d3(g, 1, 1, 2) * (a111 * a122 - a112 * a112);
}

VariationResult clebsch_first_variation(const Form& alpha, const Form& g) {
    require_binary(alpha, "clebsch_first_variation");
    if (!alpha.is_homogeneous() || alpha.degree() < 4)
        throw std::invalid_argument("clebsch_first_variation: alpha must be homogeneous of degree >= 4");
    const int d = alpha.degree();
    if (g.arity() != 3 || !g.is_homogeneous() || (!g.is_zero() && g.degree() != d))
        throw std::invalid_argument("clebsch_first_variation: direction must be ternary of the same degree");

    VariationResult res{Form(3), Form(3), Form(3), Form(3), false, false};
    res.base_form = embed(alpha, 3) + Form::monomial(3, {0, 0, d}, Rational(1));
    res.direction = g;

    // eps-truncated route through the covariant formula
    const EpsForm f(res.base_form, g);
    const auto r = third_derivative_reading<EpsForm>(f);
    const EpsForm s =
        aronhold_formula<EpsForm>(r.a3, r.a2, r.b2, r.a1, r.b1, r.c1, r.a0, r.b0, r.c0, r.d0);
    res.base_covariant_zero = s.base.is_zero();
    res.variation = s.eps;

    // closed form: d(d-1)(d-2) z^(d-3) times the bracket
    const Rational pref(static_cast<long>(d) * (d - 1) * (d - 2));
    res.closed_form =
        Form::monomial(3, {0, 0, d - 3}, pref) * variation_bracket(alpha, g);
    res.routes_agree = (res.variation == res.closed_form);
    return res;
}

KernelBasis kernel_of_t(const Form& alpha, int r) {
    require_binary(alpha, "kernel_of_t");
    if (r < 0) throw std::invalid_argument("kernel_of_t: degree must be >= 0");

    const std::vector<Exponents> basis = monomial_basis(2, r);
    std::vector<Form> images;
    images.reserve(basis.size());
    for (const auto& e : basis)
        images.push_back(t_operator(alpha, Form::monomial(2, e, Rational(1))));

    KernelBasis result{alpha, r, {}};
    for (const auto& v : nullspace(operator_matrix(images, 2))) {
        Form h(2);
        for (size_t k = 0; k < basis.size(); ++k)
            h.add_term(basis[k], v[k]);
        result.basis.push_back(std::move(h));
    }
    return result;
}

SpectrumTable monomial_spectrum(int d) {
    if (d < 4) throw std::invalid_argument("monomial_spectrum: d must be >= 4");
    SpectrumTable t;
    t.d = d;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            SpectrumEntry e;
            e.i = i;
            e.j = j;
            e.eigenvalue = Rational(static_cast<long>(i) * (i - 1)) -
                           Rational(static_cast<long>(d - 3) * i * j) +
                           Rational(static_cast<long>(d - 2) * (d - 3) * j * (j - 1), 2);
            if (e.eigenvalue.is_zero()) t.zero_set.emplace_back(i, j);
            t.entries.push_back(std::move(e));
        }

    std::vector<std::pair<int, int>> expected = {{0, 0}, {1, 0}, {0, 1},
                                                 {d - 2, 1}, {d - 3, 2}, {d - 2, 2}};
    std::sort(expected.begin(), expected.end());
    auto zs = t.zero_set;
    std::sort(zs.begin(), zs.end());
    t.zero_set_expected = (zs == expected);

    t.discriminants_negative_from_3 = true;
    for (int j = 0; j <= d; ++j) {
        const Rational delta =
            Rational(1) - Rational(static_cast<long>(d - 1) * (d - 3) * j * (j - 2));
        if (j >= 3 && delta.sign() >= 0) t.discriminants_negative_from_3 = false;
        t.discriminants.emplace_back(j, delta);
    }
    return t;
}

ZariskiReport zariski_tangent_compare(const Form& alpha) {
    require_binary(alpha, "zariski_tangent_compare");
    if (!alpha.is_homogeneous() || alpha.degree() < 4)
        throw std::invalid_argument("zariski_tangent_compare: alpha must be homogeneous of degree >= 4");
    const int d = alpha.degree();

    ZariskiReport rep;
    rep.d = d;

    // the explicit tangent directions: all binaries, the two derivative
    // directions times z, the two shear directions, and z^d itself
    std::vector<Form> listed;
    for (int i = 0; i <= d; ++i) listed.push_back(Form::monomial(3, {d - i, i, 0}, Rational(1)));
    const Form zvar = Form::variable(3, 2);
    listed.push_back(embed(alpha.derivative(0), 3) * zvar);
    listed.push_back(embed(alpha.derivative(1), 3) * zvar);
    listed.push_back(Form::monomial(3, {1, 0, d - 1}, Rational(1)));
    listed.push_back(Form::monomial(3, {0, 1, d - 1}, Rational(1)));
    listed.push_back(Form::monomial(3, {0, 0, d}, Rational(1)));

    rep.span_dim = rank(operator_matrix(listed, 3));
    rep.degenerate_alpha = rep.span_dim < static_cast<int>(listed.size());

    // full linearization on the monomial basis of ternary degree-d forms
    const std::vector<Exponents> basis = monomial_basis(3, d);
    std::vector<Form> images;
    images.reserve(basis.size());
    rep.routes_agreed = true;
    for (const auto& e : basis) {
        const VariationResult v =
            clebsch_first_variation(alpha, Form::monomial(3, e, Rational(1)));
        if (!v.routes_agree || !v.base_covariant_zero) rep.routes_agreed = false;
        images.push_back(v.variation);
    }
    rep.kernel_dim = static_cast<int>(nullspace(operator_matrix(images, 3)).size());

    // every listed form must sit inside the kernel
    rep.span_in_kernel = true;
    for (const Form& dir : listed)
        if (!clebsch_first_variation(alpha, dir).variation.is_zero()) rep.span_in_kernel = false;

    rep.equal = !rep.degenerate_alpha && rep.span_in_kernel && (rep.span_dim == rep.kernel_dim);
    return rep;
}

LimitFamilyReport closure_limit_expand(const Form& alpha, const Rational& b, int d) {
    require_binary(alpha, "closure_limit_expand");
    if (d < 2) throw std::invalid_argument("closure_limit_expand: d must be >= 2");
    if (!alpha.is_zero() && (!alpha.is_homogeneous() || alpha.degree() != d))
        throw std::invalid_argument("closure_limit_expand: alpha must be homogeneous of degree d");

    // variables x,y,z,c in arity 4; G = c*F(c) = c*alpha - x^d + (x + (b/d) c z)^d
    const Form x4 = Form::variable(4, 0);
    const Form cvar = Form::variable(4, 3);
    const Form linear = x4 + Form::monomial(4, {0, 0, 1, 1}, b / Rational(d));
    const Form g = cvar * embed(alpha, 4) - x4.pow(d) + linear.pow(d);

    LimitFamilyReport rep;
    rep.d = d;
    rep.no_negative_powers = true;
    rep.coefficients.assign(d, Form(3));
    for (const auto& [e, coeff] : g.terms()) {
        const int k = e[3];
        if (k == 0) {
            rep.no_negative_powers = false;  // a 1/c term survived
            continue;
        }
        if (k - 1 < d)
            rep.coefficients[k - 1].add_term({e[0], e[1], e[2]}, coeff);
    }

    const Form expected_c0 = embed(alpha, 3) + Form::monomial(3, {d - 1, 0, 1}, b);
    rep.c0_matches = (rep.coefficients[0] == expected_c0);
    return rep;
}

}  // namespace hessform
