#pragma once

#include <vector>

#include "hessform/rational.hpp"

namespace hessform {

/// Dense exact matrix over the rationals. Everything here targets the small
/// sizes that actually occur (coordinate changes, Hessians, linearization
/// maps up to ~15x15); no attempt at sparsity or pivoting heuristics.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative size");
    }

    static RationalMatrix identity(int n);
    static RationalMatrix diagonal(const std::vector<Rational>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    RationalMatrix transposed() const;

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct Signature {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact determinant. Rows are scaled integral first, then fraction-free
/// Bareiss elimination runs on the integral matrix.
Rational determinant(const RationalMatrix& m);

/// Exact inverse via Gauss-Jordan. Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Exact basis of the right kernel, parametrized by the free columns of the
/// reduced row echelon form, in ascending free-column order.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

int rank(const RationalMatrix& m);

/// Coefficients [1, c1, ..., cn] of det(xI - M) = x^n + c1 x^(n-1) + ... + cn,
/// computed by the Faddeev-LeVerrier recurrence.
std::vector<Rational> char_poly(const RationalMatrix& m);

/// Exact inertia of a symmetric matrix: zero count from the trailing
/// coefficients of the characteristic polynomial, positive/negative counts by
/// Descartes' rule on the nonzero part (exact, since the spectrum is real).
Signature signature(const RationalMatrix& m);

}  // namespace hessform
