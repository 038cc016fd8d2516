#pragma once

#include "hessform/form.hpp"

namespace hessform {

/// The second-order operator controlling first-order deformations of the
/// vanishing locus of the ternary covariant along alpha(x,y) + z^d:
/// T(alpha,h) = h11 (a112 a222 - a122^2) + h12 (a112 a122 - a111 a222)
///            + h22 (a111 a122 - a112^2), binary in and out, linear in h.
Form t_operator(const Form& alpha, const Form& h);

struct VariationResult {
    Form base_form;      // alpha(x,y) + z^d, ternary
    Form direction;      // g
    Form variation;      // the eps coefficient of S(base + eps g)
    Form closed_form;    // d(d-1)(d-2) z^(d-3) * bracket
    bool routes_agree = false;
    bool base_covariant_zero = false;
};

/// First-order variation of the ternary covariant at f = alpha + z^d in
/// direction g, computed both by eps-truncated arithmetic and by the closed
/// bracket form; the two must agree exactly.
VariationResult clebsch_first_variation(const Form& alpha, const Form& g);

/// The bracket g113 (a112 a222 - a122^2) + g123 (a112 a122 - a111 a222)
///            + g223 (a111 a122 - a112^2), with alpha lifted to arity 3.
Form variation_bracket(const Form& alpha, const Form& g);

struct KernelBasis {
    Form alpha;
    int degree = 0;
    std::vector<Form> basis;  // binary forms h of that degree with T(alpha,h)=0
};

/// Exact kernel of h -> T(alpha,h) on degree-r binary forms, via the
/// nullspace of the operator's matrix on the monomial basis.
KernelBasis kernel_of_t(const Form& alpha, int r);

struct SpectrumEntry {
    int i = 0, j = 0;
    Rational eigenvalue;
};

struct SpectrumTable {
    int d = 0;
    std::vector<SpectrumEntry> entries;             // all i+j <= d
    std::vector<std::pair<int, int>> zero_set;      // eigenvalue = 0
    bool zero_set_expected = false;                 // equals the six known pairs
    std::vector<std::pair<int, Rational>> discriminants;  // (j, 1-(d-1)(d-3)j(j-2))
    bool discriminants_negative_from_3 = false;
};

/// Eigenvalues i(i-1) - (d-3)ij + (d-2)(d-3)j(j-1)/2 of the diagonalized
/// operator at the witness binary form C(d,2) x^(d-2) y^2, with the zero set
/// and the in-j discriminant table.
SpectrumTable monomial_spectrum(int d);

struct ZariskiReport {
    int d = 0;
    bool degenerate_alpha = false;  // the listed spanning forms are dependent
    int span_dim = 0;               // rank of the explicit spanning set
    int kernel_dim = 0;             // nullity of the full linearization
    bool span_in_kernel = false;
    bool equal = false;
    bool routes_agreed = false;     // eps route matched the closed form on every basis vector
};

/// Compares the explicit lower bound for the tangent space of the
/// sum-of-two-pieces locus at alpha + z^d with the exact kernel of the
/// linearized covariant on all ternary forms of the same degree.
ZariskiReport zariski_tangent_compare(const Form& alpha);

struct LimitFamilyReport {
    int d = 0;
    std::vector<Form> coefficients;  // ternary coefficient of c^k, k = 0..d-1
    bool no_negative_powers = false;
    bool c0_matches = false;         // coefficient of c^0 equals alpha + b x^(d-1) z
};

/// Expands the degeneration family (alpha - x^d/c) + (x + (c b / d) z)^d / c
/// as an exact polynomial in c: the 1/c terms must cancel and the constant
/// term must be alpha + b x^(d-1) z.
LimitFamilyReport closure_limit_expand(const Form& alpha, const Rational& b, int d);

}  // namespace hessform
