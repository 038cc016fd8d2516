#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hessform/matrix.hpp"
#include "hessform/rational.hpp"

namespace hessform {

/// One exponent per variable; length equals the ambient arity.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

/// Graded lexicographic, descending: higher total degree first, then
/// lexicographically larger exponent vector first. This is the canonical
/// term order used for storage, equality and printing.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariants: no zero coefficients stored; every exponent vector has length
/// equal to the arity. Values are immutable in spirit: all operations return
/// fresh forms.
class Form {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

    explicit Form(int arity);

    static Form zero(int arity) { return Form(arity); }
    static Form constant(int arity, const Rational& c);
    static Form variable(int arity, int index);
    static Form monomial(int arity, const Exponents& e, const Rational& c);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Maximum total degree; -1 for the zero form.
    int degree() const;
    /// True when all stored terms share one total degree (zero form counts).
    bool is_homogeneous() const;

    Rational coefficient(const Exponents& e) const;

    Form operator-() const;
    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Form& o) const;
    Form operator*(const Rational& c) const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);

    Form pow(int k) const;

    Form derivative(int var) const;
    Form derivative(std::span<const int> vars) const;

    /// f(Ax): substitutes variable i by row i of A applied to the variables.
    /// A must be arity x arity.
    Form substitute_linear(const RationalMatrix& a) const;

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    /// Canonical text: graded-lex descending terms, explicit '*' and '^',
    /// e.g. "x^2*y*z + x*y^2*z + x*y*z^2". Parsing this string with the same
    /// arity reproduces the form exactly.
    std::string str() const;

    friend bool operator==(const Form& a, const Form& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Inserts c into the coefficient of e (dropping the term if it cancels).
    void add_term(const Exponents& e, const Rational& c);

private:
    int arity_;
    TermMap terms_;
};

inline Form operator*(const Rational& c, const Form& f) { return f * c; }

/// Variable display name: x,y,z for arity <= 3, otherwise x0..x{n-1}.
std::string variable_name(int index, int arity);

/// Truncated ring element base + eps*eps_part with eps^2 = 0. Just enough
/// arithmetic for first-order variation of polynomial covariants.
struct EpsForm {
    Form base;
    Form eps;

    explicit EpsForm(int arity) : base(arity), eps(arity) {}
    EpsForm(Form b, Form e);

    int arity() const { return base.arity(); }

    EpsForm operator+(const EpsForm& o) const;
    EpsForm operator-(const EpsForm& o) const;
    EpsForm operator*(const EpsForm& o) const;
    EpsForm operator*(const Rational& c) const;
    EpsForm pow(int k) const;
    EpsForm derivative(int var) const;
};

/// Euler operator sum_i x_i * df/dx_i, used by homogeneity checks.
Form euler_vector_field(const Form& f);

/// Re-embeds f into a larger arity, variable i -> variable i.
Form embed(const Form& f, int new_arity);

}  // namespace hessform
