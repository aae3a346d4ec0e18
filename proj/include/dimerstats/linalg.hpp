// Dense matrices over exact scalar types (GaussRat, ExactValue) with
// exact determinants, inverses and characteristic polynomials.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dimerstats/exact.hpp"

namespace dimer {

// scalar adapters used by the generic routines
inline bool scalarIsZero(const GaussRat& x) { return x.isZero(); }
inline bool scalarIsZero(const ExactValue& x) { return x.isZero(); }
inline GaussRat scalarDivExact(const GaussRat& a, const GaussRat& b) { return a / b; }
inline ExactValue scalarDivExact(const ExactValue& a, const ExactValue& b) { return a.divExact(b); }
inline GaussRat scalarOneLike(const GaussRat&) { return GaussRat(1L); }
inline ExactValue scalarOneLike(const ExactValue& x) { return ExactValue::one(x.basis()); }
inline GaussRat scalarDivInt(const GaussRat& a, long k) { return a / GaussRat(Rational(k)); }
inline ExactValue scalarDivInt(const ExactValue& a, long k) {
    return a.scaled(GaussRat(Rational(1, k)));
}

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c, T init = T()) : rows_(r), cols_(c), data_(r * c, init) {}

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (scalarIsZero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    T trace() const {
        T s{};
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    // submatrix with the given rows/columns removed (indices sorted, unique)
    Matrix removed(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        std::vector<char> rKeep(rows_, 1), cKeep(cols_, 1);
        for (auto r : rows) rKeep.at(r) = 0;
        for (auto c : cols) cKeep.at(c) = 0;
        Matrix m(rows_ - rows.size(), cols_ - cols.size());
        std::size_t ri = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!rKeep[i]) continue;
            std::size_t cj = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!cKeep[j]) continue;
                m(ri, cj++) = (*this)(i, j);
            }
            ++ri;
        }
        return m;
    }

    // submatrix picking the given rows/columns in order
    Matrix selected(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        Matrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m(i, j) = (*this)(rows.at(i), cols.at(j));
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
T detCofactor(const Matrix<T>& m) {
    if (!m.square()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) {
        GaussRat one(1L);
        if constexpr (std::is_same_v<T, GaussRat>) return one;
        else throw std::invalid_argument("detCofactor: empty ExactValue matrix needs a basis");
    }
    if (n == 1) return m(0, 0);
    T det{};
    bool plus = true;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> rr{0}, cc{j};
        T sub = detCofactor(m.removed(rr, cc));
        T prod = m(0, j) * sub;
        det = plus ? det + prod : det - prod;
        plus = !plus;
    }
    return det;
}

// Fraction-free (Bareiss) elimination with row pivoting; exact over any
// integral domain whose exact division is supplied by scalarDivExact.
template <typename T>
T detBareiss(Matrix<T> m, const T& one) {
    if (!m.square()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return one;
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && scalarIsZero(m(piv, k))) ++piv;
        if (piv == n) return T();  // zero column: singular
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = scalarDivExact(num, prev);
            }
            m(i, k) = T();
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? T() - d : d;
}

template <typename T>
T det(const Matrix<T>& m, const T& one) {
    // cofactor expansion for small sizes, fraction-free elimination beyond
    if (m.rows() <= 6) {
        if (m.rows() == 0) return one;
        return detCofactor(m);
    }
    return detBareiss(m, one);
}

inline GaussRat det(const Matrix<GaussRat>& m) { return det(m, GaussRat(1L)); }

// Exact inverse by Gauss-Jordan over a field (GaussRat).
inline Matrix<GaussRat> inverse(const Matrix<GaussRat>& a) {
    if (!a.square()) throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = a.rows();
    Matrix<GaussRat> m = a;
    Matrix<GaussRat> inv = Matrix<GaussRat>::identity(n, GaussRat(1L));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).isZero()) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        GaussRat p = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = m(k, j) / p;
            inv(k, j) = inv(k, j) / p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).isZero()) continue;
            GaussRat f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Coefficients e_1..e_n of det(xI - M) = x^n - e_1 x^{n-1} + e_2 x^{n-2} - ...
// (e_k = sum of principal k x k minors), by the Faddeev-LeVerrier recurrence.
// Needs only ring operations and division by integers.
template <typename T>
std::vector<T> principalMinorSums(const Matrix<T>& m, const T& one) {
    if (!m.square()) throw std::invalid_argument("charpoly: matrix not square");
    std::size_t n = m.rows();
    // det(xI - M) = x^n + c_1 x^{n-1} + ... + c_n with
    //   c_k = -tr(M_k)/k,  M_1 = M,  M_{k+1} = M (M_k + c_k I)
    // and e_k = (-1)^k c_k.
    std::vector<T> e(n + 1);
    e[0] = one;
    Matrix<T> acc = m;
    bool odd = true;
    for (std::size_t k = 1; k <= n; ++k) {
        T ck = T() - scalarDivInt(acc.trace(), static_cast<long>(k));
        e[k] = odd ? T() - ck : ck;
        odd = !odd;
        if (k == n) break;
        Matrix<T> b = acc;
        for (std::size_t i = 0; i < n; ++i) b(i, i) += ck;
        acc = m * b;
    }
    return e;
}

}  // namespace dimer
