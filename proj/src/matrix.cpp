#include "hessform/matrix.hpp"

#include <algorithm>

namespace hessform {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
    RationalMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference: dimension mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<Rational> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
    const int n = m.rows();
    if (n == 0) return Rational(1);

    RationalMatrix w = m;
    Rational row_factor(1);
    for (int i = 0; i < n; ++i) {
        Rational l(1);
        for (int j = 0; j < n; ++j) l = rational_lcm_den(l, w.at(i, j));
        if (!l.is_one()) {
            for (int j = 0; j < n; ++j) w.at(i, j) *= l;
            row_factor *= l;
        }
    }

    // Bareiss: entries stay integral, divisions are exact.
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!w.at(r, k).is_zero()) { pivot = r; break; }
            if (pivot < 0) return Rational(0);
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = Rational(0);
        }
        prev = w.at(k, k);
    }
    Rational det = w.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det / row_factor;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const int n = m.rows();
    RationalMatrix w = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!w.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(col, j), w.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        const Rational p = w.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            w.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            const Rational f = w.at(r, col);
            for (int j = 0; j < n; ++j) {
                w.at(r, j) -= f * w.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RationalMatrix& w) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < w.cols() && row < w.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < w.rows(); ++r)
            if (!w.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < w.cols(); ++j) std::swap(w.at(row, j), w.at(pivot, j));
        const Rational p = w.at(row, col).inverse();
        for (int j = 0; j < w.cols(); ++j) w.at(row, j) *= p;
        for (int r = 0; r < w.rows(); ++r) {
            if (r == row || w.at(r, col).is_zero()) continue;
            const Rational f = w.at(r, col);
            for (int j = 0; j < w.cols(); ++j) w.at(r, j) -= f * w.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    RationalMatrix w = m;
    const std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const RationalMatrix& m) {
    RationalMatrix w = m;
    return static_cast<int>(rref(w).size());
}

std::vector<Rational> char_poly(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const int n = m.rows();
    std::vector<Rational> c(n + 1);
    c[0] = Rational(1);
    if (n == 0) return c;

    auto trace = [](const RationalMatrix& a) {
        Rational t;
        for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
        return t;
    };

    RationalMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        c[k] = -(trace(mk) / Rational(k));
        if (k < n) {
            RationalMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[k];
            mk = m * shifted;
        }
    }
    return c;
}

Signature signature(const RationalMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    const int n = m.rows();
    const std::vector<Rational> p = char_poly(m);

    int zeros = 0;
    while (zeros < n && p[n - zeros].is_zero()) ++zeros;
    const int reduced_deg = n - zeros;

    auto count_changes = [&](bool negate_odd) {
        int changes = 0, last = 0;
        for (int k = 0; k <= reduced_deg; ++k) {
            int s = p[k].sign();
            if (s == 0) continue;
            if (negate_odd && ((reduced_deg - k) % 2 == 1)) s = -s;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };

    Signature sig;
    sig.zeros = zeros;
    sig.positives = count_changes(false);
    sig.negatives = count_changes(true);
    // all roots of the reduced polynomial are real and nonzero
    if (sig.positives + sig.negatives != reduced_deg)
        throw std::logic_error("signature: Descartes counts inconsistent");
    return sig;
}

}  // namespace hessform
