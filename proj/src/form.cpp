#include "hessform/form.hpp"

#include <sstream>

namespace hessform {

Form::Form(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("Form: arity must be >= 1");
}

Form Form::constant(int arity, const Rational& c) {
    Form f(arity);
    if (!c.is_zero()) f.terms_.emplace(Exponents(arity, 0), c);
    return f;
}

Form Form::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::out_of_range("Form::variable: index out of range");
    Exponents e(arity, 0);
    e[index] = 1;
    return monomial(arity, e, Rational(1));
}

Form Form::monomial(int arity, const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity)
        throw std::invalid_argument("Form::monomial: exponent length != arity");
    for (int k : e)
        if (k < 0) throw std::invalid_argument("Form::monomial: negative exponent");
    Form f(arity);
    if (!c.is_zero()) f.terms_.emplace(e, c);
    return f;
}

int Form::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Form::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        const int t = total_degree(e);
        if (d == -1) d = t;
        else if (t != d) return false;
    }
    return true;
}

Rational Form::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::operator-() const {
    Form r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Form& Form::operator+=(const Form& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("Form: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("Form: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Form Form::operator+(const Form& o) const {
    Form r = *this;
    return r += o;
}

Form Form::operator-(const Form& o) const {
    Form r = *this;
    return r -= o;
}

Form Form::operator*(const Form& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("Form: arity mismatch");
    Form r(arity_);
    Exponents e(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Form Form::operator*(const Rational& c) const {
    Form r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Form Form::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Form::pow: negative exponent");
    Form result = Form::constant(arity_, Rational(1));
    Form base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = (k >>= 1) ? base * base : base;
    }
    return result;
}

Form Form::derivative(int var) const {
    if (var < 0 || var >= arity_) throw std::out_of_range("Form::derivative: index out of range");
    Form r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.terms_.emplace(d, c * Rational(e[var]));
    }
    return r;
}

Form Form::derivative(std::span<const int> vars) const {
    Form r = *this;
    for (int v : vars) r = r.derivative(v);
    return r;
}

Form Form::substitute_linear(const RationalMatrix& a) const {
    if (a.rows() != arity_ || a.cols() != arity_)
        throw std::invalid_argument("substitute_linear: dimension mismatch");

    std::vector<Form> rows;
    rows.reserve(arity_);
    for (int i = 0; i < arity_; ++i) {
        Form lin(arity_);
        for (int j = 0; j < arity_; ++j) lin += Form::variable(arity_, j) * a.at(i, j);
        rows.push_back(std::move(lin));
    }

    // powers of each substituted variable, built once up to the needed degree
    std::vector<int> max_exp(arity_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < arity_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<Form>> pows(arity_);
    for (int i = 0; i < arity_; ++i) {
        pows[i].push_back(Form::constant(arity_, Rational(1)));
        for (int k = 1; k <= max_exp[i]; ++k) pows[i].push_back(pows[i].back() * rows[i]);
    }

    Form r(arity_);
    for (const auto& [e, c] : terms_) {
        Form t = Form::constant(arity_, c);
        for (int i = 0; i < arity_; ++i)
            if (e[i] > 0) t = t * pows[i][e[i]];
        r += t;
    }
    return r;
}

Rational Form::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("Form::evaluate: point length mismatch");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < arity_; ++i)
            if (e[i] > 0) t *= point[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

double Form::evaluate(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("Form::evaluate: point length mismatch");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        sum += t;
    }
    return sum;
}

std::string variable_name(int index, int arity) {
    if (arity <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[index];
    }
    return "x" + std::to_string(index);
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = c.abs();
        std::string mono;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_name(i, arity_);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << mag.str();
        } else if (mag.is_one()) {
            out << mono;
        } else {
            out << mag.str() << "*" << mono;
        }
    }
    return out.str();
}

EpsForm::EpsForm(Form b, Form e) : base(std::move(b)), eps(std::move(e)) {
    if (base.arity() != eps.arity()) throw std::invalid_argument("EpsForm: arity mismatch");
}

EpsForm EpsForm::operator+(const EpsForm& o) const { return {base + o.base, eps + o.eps}; }

EpsForm EpsForm::operator-(const EpsForm& o) const { return {base - o.base, eps - o.eps}; }

EpsForm EpsForm::operator*(const EpsForm& o) const {
    return {base * o.base, base * o.eps + eps * o.base};
}

EpsForm EpsForm::operator*(const Rational& c) const { return {base * c, eps * c}; }

EpsForm EpsForm::pow(int k) const {
    if (k < 0) throw std::invalid_argument("EpsForm::pow: negative exponent");
    if (k == 0) return {Form::constant(arity(), Rational(1)), Form(arity())};
    // (a + eps b)^k = a^k + eps k a^(k-1) b
    Form ak1 = base.pow(k - 1);
    return {ak1 * base, ak1 * eps * Rational(k)};
}

EpsForm EpsForm::derivative(int var) const { return {base.derivative(var), eps.derivative(var)}; }

Form euler_vector_field(const Form& f) {
    Form r(f.arity());
    for (int i = 0; i < f.arity(); ++i)
        r += Form::variable(f.arity(), i) * f.derivative(i);
    return r;
}

Form embed(const Form& f, int new_arity) {
    if (new_arity < f.arity()) throw std::invalid_argument("embed: arity cannot shrink");
    Form r(new_arity);
    for (const auto& [e, c] : f.terms()) {
        Exponents ee(new_arity, 0);
        std::copy(e.begin(), e.end(), ee.begin());
        r.add_term(ee, c);
    }
    return r;
}

}  // namespace hessform
