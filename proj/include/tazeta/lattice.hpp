#pragma once

// Integer row-echelon forms: Hermite normal forms of full sublattices,
// left kernels, intersections and preimages.

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace tazeta {

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline void row_axpy(IntMatrix& a, int dst, int src, const BigInt& f) {
    if (f == 0) return;
    for (int j = 0; j < a.cols(); ++j) a(dst, j) -= f * a(src, j);
}

inline void row_swap(IntMatrix& a, int r, int s) {
    if (r == s) return;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(s, j));
}

inline void row_negate(IntMatrix& a, int r) {
    for (int j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
}

}  // namespace detail

/// Row-style Hermite reduction in place. When `u` is given it receives the
/// same row operations, so u * A_original = A_result. Returns the pivot
/// columns; rows beyond their count are zero.
inline std::vector<int> hermite_reduce(IntMatrix& a, IntMatrix* u = nullptr) {
    using detail::row_axpy;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        while (true) {
            int best = -1;
            for (int r = row; r < a.rows(); ++r)
                if (a(r, col) != 0 && (best < 0 || abs(a(r, col)) < abs(a(best, col)))) best = r;
            if (best < 0) break;
            detail::row_swap(a, row, best);
            if (u) detail::row_swap(*u, row, best);
            bool done = true;
            for (int r = row + 1; r < a.rows(); ++r) {
                if (a(r, col) == 0) continue;
                BigInt q = a(r, col) / a(row, col);
                row_axpy(a, r, row, q);
                if (u) row_axpy(*u, r, row, q);
                if (a(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a(row, col) == 0) continue;
        if (a(row, col) < 0) {
            detail::row_negate(a, row);
            if (u) detail::row_negate(*u, row);
        }
        for (int r = 0; r < row; ++r) {
            BigInt q = detail::floor_div(a(r, col), a(row, col));
            row_axpy(a, r, row, q);
            if (u) row_axpy(*u, r, row, q);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// A full-rank sublattice of Z^dim in canonical Hermite normal form: upper
/// triangular rows, positive diagonal, entries right of a pivot reduced into
/// [0, pivot).
class LatticeHNF {
public:
    LatticeHNF() = default;

    /// Lattice spanned by the rows of `generators`; throws NotFullRank.
    explicit LatticeHNF(IntMatrix generators) {
        const int n = generators.cols();
        auto pivots = hermite_reduce(generators);
        if (static_cast<int>(pivots.size()) != n) throw Error(Errc::not_full_rank, "generators do not span a full lattice");
        m_ = IntMatrix(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m_(i, j) = generators(i, j);
    }

    static LatticeHNF full(int dim) { return LatticeHNF(IntMatrix::identity(dim)); }

    int dim() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }
    const BigInt& diag(int i) const { return m_(i, i); }

    BigInt index() const {
        BigInt d = 1;
        for (int i = 0; i < dim(); ++i) d *= m_(i, i);
        return d;
    }

    /// Coordinates of w on the HNF rows, if w lies in the lattice.
    std::optional<std::vector<BigInt>> solve(std::vector<BigInt> w) const {
        std::vector<BigInt> x(static_cast<std::size_t>(dim()));
        for (int c = 0; c < dim(); ++c) {
            if (w[static_cast<std::size_t>(c)] % m_(c, c) != 0) return std::nullopt;
            BigInt q = w[static_cast<std::size_t>(c)] / m_(c, c);
            x[static_cast<std::size_t>(c)] = q;
            for (int j = c; j < dim(); ++j) w[static_cast<std::size_t>(j)] -= q * m_(c, j);
        }
        return x;
    }

    bool contains(const std::vector<BigInt>& w) const { return solve(w).has_value(); }

    bool contains(const LatticeHNF& other) const {
        for (int i = 0; i < other.dim(); ++i)
            if (!contains(other.m_.row(i))) return false;
        return true;
    }

    friend bool operator==(const LatticeHNF& a, const LatticeHNF& b) { return a.m_ == b.m_; }
    friend bool operator!=(const LatticeHNF& a, const LatticeHNF& b) { return !(a == b); }

    std::string to_string() const { return m_.to_string(); }

private:
    IntMatrix m_;
};

/// Basis (as rows) of {x : x * A = 0}.
inline IntMatrix left_kernel(const IntMatrix& a) {
    IntMatrix work = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    auto pivots = hermite_reduce(work, &u);
    const int rank = static_cast<int>(pivots.size());
    IntMatrix k(a.rows() - rank, a.rows());
    for (int r = rank; r < a.rows(); ++r)
        for (int j = 0; j < a.rows(); ++j) k(r - rank, j) = u(r, j);
    return k;
}

inline IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw Error(Errc::dimension_mismatch, "stacking matrices of different widths");
    IntMatrix out(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
    return out;
}

/// {x in span(S) : x * G in span(T)}, for square full-rank S, T.
inline LatticeHNF preimage(const LatticeHNF& s, const IntMatrix& g, const LatticeHNF& t) {
    const int n = s.dim();
    IntMatrix sg = s.matrix() * g;
    IntMatrix k = left_kernel(stack(sg, t.matrix()));
    IntMatrix w(k.rows(), n);
    for (int r = 0; r < k.rows(); ++r)
        for (int j = 0; j < n; ++j) w(r, j) = k(r, j);
    return LatticeHNF(w * s.matrix());
}

inline LatticeHNF intersection(const LatticeHNF& a, const LatticeHNF& b) {
    return preimage(a, IntMatrix::identity(a.dim()), b);
}

inline LatticeHNF lattice_sum(const LatticeHNF& a, const LatticeHNF& b) {
    return LatticeHNF(stack(a.matrix(), b.matrix()));
}

}  // namespace tazeta
