#pragma once

// Small dense matrices with exact entries.

#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace tazeta {

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, R fill = R(0))
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), fill) {}
    Matrix(std::initializer_list<std::initializer_list<R>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        for (auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const R& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

    std::vector<R> row(int i) const {
        return std::vector<R>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    void set_row(int i, const std::vector<R>& v) {
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[static_cast<std::size_t>(j)];
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape");
        Matrix z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(i, k) == R(0)) continue;
                for (int j = 0; j < y.cols_; ++j) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix z = x;
        for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix z = x;
        for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
        return z;
    }
    Matrix scaled(const R& s) const {
        Matrix z = *this;
        for (auto& v : z.a_) v *= s;
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class S>
    Matrix<S> convert() const {
        Matrix<S> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = S((*this)(i, j));
        return m;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << tazeta::to_string((*this)(i, j));
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

inline Rational determinant(RatMatrix m) {
    const int n = m.rows();
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            det = -det;
        }
        det *= m(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / m(c, c);
            for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

inline BigInt determinant(const IntMatrix& m) { return num(determinant(m.convert<Rational>())); }

/// Inverse over Q; throws on a singular matrix.
inline RatMatrix inverse(const RatMatrix& m) {
    const int n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error(Errc::not_full_rank, "singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(a(c, j), a(piv, j));
            std::swap(inv(c, j), inv(piv, j));
        }
        Rational d = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= d;
            inv(c, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

inline int rank(RatMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.
inline IntPoly characteristic_polynomial(const IntMatrix& m) {
    const int n = m.rows();
    RatMatrix a = m.convert<Rational>();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[static_cast<std::size_t>(n)] = 1;
    RatMatrix mk = RatMatrix(n, n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        RatMatrix next = a * mk;
        for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        mk = next;
        RatMatrix amk = a * mk;
        Rational tr = 0;
        for (int i = 0; i < n; ++i) tr += amk(i, i);
        c[static_cast<std::size_t>(n - k)] = -tr / k;
    }
    return to_integer(RatPoly(std::move(c)));
}

/// p(M) for a polynomial p.
template <class R>
Matrix<R> evaluate(const Polynomial<R>& p, const Matrix<R>& m) {
    Matrix<R> acc(m.rows(), m.cols());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i) acc(i, i) += p[k];
    }
    return acc;
}

}  // namespace tazeta
