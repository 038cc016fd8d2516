#include "hessform/covariants.hpp"

namespace hessform {

namespace {

Form det_recursive(const std::vector<std::vector<Form>>& m, std::vector<int> cols, int row) {
    const int arity = m[0][0].arity();
    if (cols.size() == 1) return m[row][cols[0]];
    Form acc(arity);
    for (size_t k = 0; k < cols.size(); ++k) {
        const Form& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Form minor = det_recursive(m, rest, row + 1);
        if (k % 2 == 0) acc += entry * minor;
        else acc -= entry * minor;
    }
    return acc;
}

void require_ternary_homogeneous(const Form& f, int min_degree, const char* who) {
    if (f.arity() != 3) throw std::invalid_argument(std::string(who) + ": arity must be 3");
    if (!f.is_homogeneous()) throw std::invalid_argument(std::string(who) + ": form not homogeneous");
    if (!f.is_zero() && f.degree() < min_degree)
        throw std::invalid_argument(std::string(who) + ": degree too small");
}

}  // namespace

Form hessian_det(const Form& f) {
    const int n = f.arity();
    std::vector<std::vector<Form>> h(n, std::vector<Form>(n, Form(n)));
    for (int i = 0; i < n; ++i) {
        const Form fi = f.derivative(i);
        for (int j = i; j < n; ++j) {
            h[i][j] = fi.derivative(j);
            if (j != i) h[j][i] = h[i][j];
        }
    }
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return det_recursive(h, cols, 0);
}

Rational aronhold_invariant(const Form& cubic) {
    require_ternary_homogeneous(cubic, 3, "aronhold_invariant");
    if (cubic.degree() != 3) throw std::invalid_argument("aronhold_invariant: degree must be 3");
    auto c = [&](int e1, int e2, int e3) { return cubic.coefficient({e1, e2, e3}); };
    const Rational three(3), six(6);
    const Rational a3 = c(0, 0, 3);
    const Rational a2 = c(1, 0, 2) / three, b2 = c(0, 1, 2) / three;
    const Rational a1 = c(2, 0, 1) / three, b1 = c(1, 1, 1) / six, c1 = c(0, 2, 1) / three;
    const Rational a0 = c(3, 0, 0), b0 = c(2, 1, 0) / three, c0 = c(1, 2, 0) / three,
                   d0 = c(0, 3, 0);
    return aronhold_formula<Rational>(a3, a2, b2, a1, b1, c1, a0, b0, c0, d0);
}

Form clebsch_covariant(const Form& f) {
    require_ternary_homogeneous(f, 3, "clebsch_covariant");
    const auto r = third_derivative_reading<Form>(f);
    return aronhold_formula<Form>(r.a3, r.a2, r.b2, r.a1, r.b1, r.c1, r.a0, r.b0, r.c0, r.d0);
}

EquivarianceReport equivariance_check(const Form& f, const RationalMatrix& a) {
    require_ternary_homogeneous(f, 3, "equivariance_check");
    const Rational det_a = determinant(a);
    if (det_a.is_zero()) throw std::domain_error("equivariance_check: singular matrix");

    EquivarianceReport rep{false, false, Form(3), Form(3)};
    const Form fa = f.substitute_linear(a);

    rep.hessian_diff = hessian_det(fa) - hessian_det(f).substitute_linear(a) * det_a.pow(2);
    rep.hessian_ok = rep.hessian_diff.is_zero();

    rep.clebsch_diff =
        clebsch_covariant(fa) - clebsch_covariant(f).substitute_linear(a) * det_a.pow(4);
    rep.clebsch_ok = rep.clebsch_diff.is_zero();
    return rep;
}

SimplifiedClebschReport simplified_clebsch_cases(const Form& f) {
    require_ternary_homogeneous(f, 3, "simplified_clebsch_cases");
    SimplifiedClebschReport rep;
    rep.case_mixed_partial = f.derivative(1).derivative(2).is_zero();
    rep.case_pure_second = f.derivative(1).derivative(1).is_zero();
    if (!rep.case_mixed_partial && !rep.case_pure_second)
        throw std::invalid_argument(
            "simplified_clebsch_cases: neither structural hypothesis holds");

    const Form s = clebsch_covariant(f);
    const auto r = third_derivative_reading<Form>(f);
    if (rep.case_mixed_partial) {
        const Form rhs = (r.a1 * r.a3 - r.a2 * r.a2) * (r.d0 * r.b0 - r.c0 * r.c0);
        rep.mixed_partial_ok = (s - rhs).is_zero();
    }
    if (rep.case_pure_second) {
        const Form q = r.b0 * r.b2 - r.b1 * r.b1;
        rep.pure_second_ok = (s - q * q).is_zero();
    }
    return rep;
}

BinaryPowerResult binary_power_of_linear(const Form& h) {
    if (h.arity() != 2) throw std::invalid_argument("binary_power_of_linear: arity must be 2");
    if (!h.is_homogeneous() || h.is_zero() || h.degree() < 1)
        throw std::invalid_argument("binary_power_of_linear: need a homogeneous form of degree >= 1");
    const int d = h.degree();

    BinaryPowerResult res;
    if (d >= 2 && !hessian_det(h).is_zero()) return res;  // not degenerate
    res.degenerate = true;

    const Rational lead = h.coefficient({d, 0});
    if (!lead.is_zero()) {
        // h = c (x + r y)^d with c the x^d coefficient and r from the next one
        res.scale = lead;
        res.b = Rational(1);
        res.a = h.coefficient({d - 1, 1}) / (Rational(d) * lead);
    } else {
        // no x^d term forces the linear factor onto the y axis
        res.scale = h.coefficient({0, d});
        res.b = Rational(0);
        res.a = Rational(1);
    }
    const Form factor =
        Form::variable(2, 0) * res.b + Form::variable(2, 1) * res.a;
    if (!(factor.pow(d) * res.scale == h))
        throw std::logic_error("binary_power_of_linear: reconstruction failed");
    return res;
}

}  // namespace hessform
