#pragma once

#include <optional>

#include "hessform/form.hpp"

namespace hessform {

/// The degree-4 invariant of ternary cubics, as a polynomial in the ten
/// coefficients of the cubic normal form. Transcribed once and shared by the
/// scalar (cubic coefficient) and form (third derivative) readings; the two
/// are tied together by the exact factor 2^4*3^4 checked in the tests.
/// R needs ring arithmetic plus scaling by Rational.
template <class R>
R aronhold_formula(const R& a3, const R& a2, const R& b2, const R& a1, const R& b1, const R& c1,
                   const R& a0, const R& b0, const R& c0, const R& d0) {
    const Rational two(2), three(3);
    R s = (a0 * a2 - a1 * a1) * (c1 * c1) * Rational(-1);
    s = s + (a0 * a3 - a1 * a2) * (c0 * c1);
    s = s - (a1 * a3 - a2 * a2) * (c0 * c0);
    s = s - (b0 * b0) * (a3 * c1);
    s = s + (b0 * b1) * (a2 * c1 * three + a3 * c0);
    s = s - (b0 * b2 + (b1 * b1) * two) * (a1 * c1 + a2 * c0);
    s = s + (b1 * b2) * (a0 * c1 + a1 * c0 * three);
    s = s - (b2 * b2) * (a0 * c0);
    s = s + d0 * (b0 * (a1 * a3 - a2 * a2) - b1 * (a0 * a3 - a1 * a2) + b2 * (a0 * a2 - a1 * a1));
    s = s + (b0 * b2 - b1 * b1) * (b0 * b2 - b1 * b1);
    return s;
}

/// The ten inputs of the invariant formula read off from third partials of a
/// ternary form: a3=f333, a2=f133, b2=f233, a1=f113, b1=f123, c1=f223,
/// a0=f111, b0=f112, c0=f122, d0=f222.
template <class F>
struct ThirdDerivativeReading {
    F a3, a2, b2, a1, b1, c1, a0, b0, c0, d0;
};

template <class F>
ThirdDerivativeReading<F> third_derivative_reading(const F& f) {
    auto d3 = [&](int i, int j, int k) { return f.derivative(i).derivative(j).derivative(k); };
    return {d3(2, 2, 2), d3(0, 2, 2), d3(1, 2, 2), d3(0, 0, 2), d3(0, 1, 2),
            d3(1, 1, 2), d3(0, 0, 0), d3(0, 0, 1), d3(0, 1, 1), d3(1, 1, 1)};
}

/// Determinant of the symbolic n x n matrix of second partials; a form of
/// degree n(d-2) when nonzero.
Form hessian_det(const Form& f);

/// The scalar invariant of a ternary cubic (Wilson's sign convention).
Rational aronhold_invariant(const Form& cubic);

/// The invariant formula applied to third partials of a ternary form of
/// degree d >= 3; a form of degree 4(d-3) or zero. For cubics this equals
/// 2^4*3^4 times aronhold_invariant.
Form clebsch_covariant(const Form& f);

struct EquivarianceReport {
    bool hessian_ok = false;
    bool clebsch_ok = false;
    bool pass() const { return hessian_ok && clebsch_ok; }
    Form hessian_diff;  // H(f A) - (H(f) o A) det(A)^2, zero on success
    Form clebsch_diff;  // S(f A) - (S(f) o A) det(A)^4, zero on success
};

/// Verifies, as exact polynomial identities, how the Hessian determinant and
/// the ternary covariant transform under an invertible change of variables.
EquivarianceReport equivariance_check(const Form& f, const RationalMatrix& a);

struct SimplifiedClebschReport {
    bool case_mixed_partial = false;  // hypothesis d^2f/dydz = 0 held
    bool case_pure_second = false;    // hypothesis d^2f/dy^2 = 0 held
    bool mixed_partial_ok = false;    // S(f) = (f113 f333 - f133^2)(f222 f112 - f122^2)
    bool pure_second_ok = false;      // S(f) = (f112 f233 - f123^2)^2
    bool pass() const {
        return (!case_mixed_partial || mixed_partial_ok) &&
               (!case_pure_second || pure_second_ok);
    }
};

/// Checks the two structural degenerations of the covariant formula against
/// the full expansion. Throws when neither structural hypothesis holds.
SimplifiedClebschReport simplified_clebsch_cases(const Form& f);

struct BinaryPowerResult {
    bool degenerate = false;  // the 2x2 Hessian determinant vanishes identically
    // when degenerate: h = scale * (b*x + a*y)^d, always rational since the
    // scalar is split off explicitly
    Rational scale;
    Rational b, a;
};

/// Decides whether a binary form is a pure power of a linear form (vanishing
/// binary Hessian) and produces the decomposition when it is.
BinaryPowerResult binary_power_of_linear(const Form& h);

}  // namespace hessform
