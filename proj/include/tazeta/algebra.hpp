#pragma once

// Integral table algebras and fusion rings given by structure constants.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "linalg.hpp"

namespace tazeta {

enum class BasisKind { standard, transitional, raw };

inline const char* basis_kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::standard: return "standard";
        case BasisKind::transitional: return "transitional";
        case BasisKind::raw: return "raw";
    }
    return "raw";
}

/// Basis b_0..b_{rank-1} with b_0 = 1 and b_i b_j = sum_k lambda(i,j,k) b_k.
class TableAlgebra {
public:
    TableAlgebra() = default;

    TableAlgebra(int rank, std::vector<int> involution, std::vector<BigInt> lambda,
                 std::vector<std::string> names = {})
        : rank_(rank), involution_(std::move(involution)), lambda_(std::move(lambda)), names_(std::move(names)) {
        if (rank_ < 1) throw Error(Errc::dimension_mismatch, "rank must be positive");
        const auto r = static_cast<std::size_t>(rank_);
        if (involution_.size() != r) throw Error(Errc::dimension_mismatch, "involution has wrong length");
        if (lambda_.size() != r * r * r) throw Error(Errc::dimension_mismatch, "structure tensor has wrong size");
        if (names_.empty())
            for (int i = 0; i < rank_; ++i) names_.push_back(i == 0 ? "1" : "b" + std::to_string(i));
        if (names_.size() != r) throw Error(Errc::dimension_mismatch, "names has wrong length");
    }

    /// Zero tensor to be filled with set().
    static TableAlgebra zeros(int rank, std::vector<int> involution, std::vector<std::string> names = {}) {
        auto r = static_cast<std::size_t>(rank);
        return TableAlgebra(rank, std::move(involution), std::vector<BigInt>(r * r * r, BigInt(0)), std::move(names));
    }

    int rank() const { return rank_; }
    const std::vector<int>& involution() const { return involution_; }
    int star(int i) const { return involution_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<BigInt>& lambda_data() const { return lambda_; }

    const BigInt& lambda(int i, int j, int k) const { return lambda_[offset(i, j, k)]; }
    void set(int i, int j, int k, BigInt v) { lambda_[offset(i, j, k)] = std::move(v); }

    BasisKind basis_kind = BasisKind::raw;

    /// Product of two coordinate vectors.
    template <class R>
    std::vector<R> multiply(const std::vector<R>& x, const std::vector<R>& y) const {
        std::vector<R> z(static_cast<std::size_t>(rank_), R(0));
        for (int i = 0; i < rank_; ++i) {
            if (x[static_cast<std::size_t>(i)] == R(0)) continue;
            for (int j = 0; j < rank_; ++j) {
                if (y[static_cast<std::size_t>(j)] == R(0)) continue;
                R c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                for (int k = 0; k < rank_; ++k)
                    if (lambda(i, j, k) != 0) z[static_cast<std::size_t>(k)] += c * R(lambda(i, j, k));
            }
        }
        return z;
    }

    friend bool operator==(const TableAlgebra& a, const TableAlgebra& b) {
        return a.rank_ == b.rank_ && a.involution_ == b.involution_ && a.lambda_ == b.lambda_;
    }

private:
    std::size_t offset(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i >= rank_ || j >= rank_ || k >= rank_)
            throw Error(Errc::index_out_of_range, "basis index out of range");
        return static_cast<std::size_t>((i * rank_ + j) * rank_ + k);
    }

    int rank_ = 0;
    std::vector<int> involution_;
    std::vector<BigInt> lambda_;
    std::vector<std::string> names_;
};

enum class Axiom { nonnegativity, identity, involution, pseudo_inverse, associativity, commutativity };

inline const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::nonnegativity: return "nonnegativity";
        case Axiom::identity: return "identity";
        case Axiom::involution: return "involution";
        case Axiom::pseudo_inverse: return "pseudo-inverse";
        case Axiom::associativity: return "associativity";
        case Axiom::commutativity: return "commutativity";
    }
    return "unknown";
}

struct Violation {
    Axiom axiom;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool violates(Axiom a) const {
        for (auto& v : violations)
            if (v.axiom == a) return true;
        return false;
    }
};

/// Checks every axiom, reporting at most a few witnesses per axiom.
inline ValidationReport validate(const TableAlgebra& t) {
    ValidationReport rep;
    const int n = t.rank();
    constexpr int kMaxWitnesses = 3;
    auto add = [&](Axiom a, std::string d) {
        int seen = 0;
        for (auto& v : rep.violations)
            if (v.axiom == a) ++seen;
        if (seen < kMaxWitnesses) rep.violations.push_back({a, std::move(d)});
    };
    auto idx = [](int i, int j, int k) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t.lambda(i, j, k) < 0) add(Axiom::nonnegativity, "lambda" + idx(i, j, k) + " is negative");

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            BigInt want = j == k ? 1 : 0;
            if (t.lambda(0, j, k) != want || t.lambda(j, 0, k) != want)
                add(Axiom::identity, "b_0 * b_" + std::to_string(j) + " has wrong coefficient at b_" + std::to_string(k));
        }

    bool perm_ok = true;
    for (int i = 0; i < n; ++i) {
        int s = t.star(i);
        if (s < 0 || s >= n) {
            add(Axiom::involution, std::to_string(i) + "* = " + std::to_string(s) + " is out of range");
            perm_ok = false;
        } else if (t.star(s) != i) {
            add(Axiom::involution, "(" + std::to_string(i) + "*)* != " + std::to_string(i));
            perm_ok = false;
        }
    }
    if (n > 0 && t.star(0) != 0) add(Axiom::involution, "0* != 0");

    if (perm_ok) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                bool positive = t.lambda(i, j, 0) > 0;
                if (positive != (j == t.star(i)))
                    add(Axiom::pseudo_inverse, "lambda" + idx(i, j, 0) + (positive ? " > 0 but " : " = 0 but ") +
                                                   std::to_string(j) + (j == t.star(i) ? " = " : " != ") +
                                                   std::to_string(i) + "*");
            }
            if (t.lambda(i, t.star(i), 0) != t.lambda(t.star(i), i, 0))
                add(Axiom::pseudo_inverse, "lambda_{ii*0} != lambda_{i*i0} for i = " + std::to_string(i));
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t.lambda(i, j, k) != t.lambda(j, i, k)) add(Axiom::commutativity, "lambda" + idx(i, j, k) + " != lambda" + idx(j, i, k));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    BigInt lhs = 0, rhs = 0;
                    for (int m = 0; m < n; ++m) {
                        lhs += t.lambda(i, j, m) * t.lambda(m, k, l);
                        rhs += t.lambda(j, k, m) * t.lambda(i, m, l);
                    }
                    if (lhs != rhs)
                        add(Axiom::associativity, "(b_" + std::to_string(i) + " b_" + std::to_string(j) + ") b_" +
                                                      std::to_string(k) + " != b_" + std::to_string(i) + " (b_" +
                                                      std::to_string(j) + " b_" + std::to_string(k) + ") at b_" +
                                                      std::to_string(l));
                }
    return rep;
}

inline bool is_commutative(const TableAlgebra& t) {
    for (int i = 0; i < t.rank(); ++i)
        for (int j = 0; j < t.rank(); ++j)
            for (int k = 0; k < t.rank(); ++k)
                if (t.lambda(i, j, k) != t.lambda(j, i, k)) return false;
    return true;
}

/// Matrix of left multiplication by b_i: entry [k][j] = lambda(i,j,k).
inline IntMatrix regular_representation(const TableAlgebra& t, int i) {
    if (i < 0 || i >= t.rank()) throw Error(Errc::index_out_of_range, "basis index " + std::to_string(i) + " out of range");
    IntMatrix m(t.rank(), t.rank());
    for (int j = 0; j < t.rank(); ++j)
        for (int k = 0; k < t.rank(); ++k) m(k, j) = t.lambda(i, j, k);
    return m;
}

/// Degree map: the Perron-Frobenius eigenvalue of each regular matrix.
inline std::vector<AlgebraicNumber> degree_map(const TableAlgebra& t) {
    if (!is_commutative(t)) throw Error(Errc::non_commutative, "degree map needs a commutative algebra");
    std::vector<AlgebraicNumber> out;
    out.push_back(AlgebraicNumber::rational(1));
    for (int i = 1; i < t.rank(); ++i) out.push_back(largest_real_root(characteristic_polynomial(regular_representation(t, i))));
    return out;
}

/// Degrees as elements of Q[x]/(f) where f is the minimal polynomial of
/// delta(b_g) for a generating index g: delta(b_i) = P_i(theta).
struct ExactDegrees {
    std::vector<RatPoly> values;
    NumberField field{RatPoly{Rational(-1), Rational(1)}};
    AlgebraicNumber theta = AlgebraicNumber::rational(1);

    bool all_rational() const {
        for (auto& v : values)
            if (v.degree() > 0) return false;
        return true;
    }
};

/// Monogenic data: powers of b_g in B-coordinates and the inverse map.
struct PowerBasis {
    int generator = 0;
    IntPoly minpoly;
    RatMatrix powers;      // column c = coordinates of b_g^c
    RatMatrix to_powers;   // inverse of `powers`
};

/// Powers 1, b_g, ..., b_g^{rank-1} if they span; empty otherwise.
inline std::optional<PowerBasis> power_basis(const TableAlgebra& t, int g) {
    const int n = t.rank();
    PowerBasis pb;
    pb.generator = g;
    pb.powers = RatMatrix(n, n);
    RatMatrix rep = regular_representation(t, g).convert<Rational>();
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    v[0] = 1;
    for (int c = 0; c < n; ++c) {
        for (int k = 0; k < n; ++k) pb.powers(k, c) = v[static_cast<std::size_t>(k)];
        std::vector<Rational> next(static_cast<std::size_t>(n), Rational(0));
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) next[static_cast<std::size_t>(k)] += rep(k, j) * v[static_cast<std::size_t>(j)];
        v = std::move(next);
    }
    if (rank(pb.powers) != n) return std::nullopt;
    pb.to_powers = inverse(pb.powers);
    IntPoly chi = characteristic_polynomial(regular_representation(t, g));
    pb.minpoly = squarefree_part(chi);
    if (pb.minpoly.degree() != n) return std::nullopt;
    return pb;
}

/// Polynomial P_i with b_i = P_i(b_g).
inline RatPoly basis_polynomial(const PowerBasis& pb, int i) {
    std::vector<Rational> c;
    for (int k = 0; k < pb.to_powers.rows(); ++k) c.push_back(pb.to_powers(k, i));
    return RatPoly(std::move(c));
}

/// B-coordinates of q(b_g) for a polynomial q reduced modulo the minimal polynomial.
inline std::vector<Rational> coordinates_of(const PowerBasis& pb, const RatPoly& q) {
    RatPoly r = q.divmod(to_rational(pb.minpoly)).second;
    const int n = pb.powers.rows();
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (int c = 0; c <= r.degree(); ++c)
        for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] += r[c] * pb.powers(k, c);
    return out;
}

/// Least generating index, or nothing for non-monogenic algebras.
inline std::optional<PowerBasis> first_power_basis(const TableAlgebra& t) {
    if (t.rank() == 1) {
        PowerBasis pb;
        pb.generator = 0;
        pb.minpoly = IntPoly{BigInt(-1), BigInt(1)};
        pb.powers = RatMatrix::identity(1);
        pb.to_powers = RatMatrix::identity(1);
        return pb;
    }
    for (int g = 1; g < t.rank(); ++g)
        if (auto pb = power_basis(t, g)) return pb;
    return std::nullopt;
}

/// Exact degrees via a monogenic presentation: delta(b_i) = P_i(delta(b_g)).
inline ExactDegrees exact_degrees(const TableAlgebra& t) {
    auto deg = degree_map(t);
    ExactDegrees ed;
    bool rational = true;
    for (auto& d : deg)
        if (!d.is_rational()) rational = false;
    if (rational) {
        for (auto& d : deg) ed.values.push_back(RatPoly(Rational(d.rational_value())));
        return ed;
    }
    auto pb = first_power_basis(t);
    if (!pb) throw Error(Errc::not_monogenic, "irrational degrees need a generating basis element");
    ed.theta = deg[static_cast<std::size_t>(pb->generator)];
    ed.field = NumberField(ed.theta.minpoly());
    for (int i = 0; i < t.rank(); ++i) ed.values.push_back(ed.field.reduce(basis_polynomial(*pb, i).compose(RatPoly::x())));
    // Cross-check the symbolic value against the isolated root of each degree.
    for (int i = 0; i < t.rank(); ++i) {
        const RatPoly& v = ed.values[static_cast<std::size_t>(i)];
        AlgebraicNumber th = ed.theta;
        th.refine(Rational(1, 1 << 20));
        // Interval evaluation of v on [lo, hi] by monotone bounds on |coeffs|.
        Rational lo = th.lo(), hi = th.hi();
        Rational mid = (lo + hi) / 2, rad = (hi - lo) / 2;
        Rational centre = v.eval(mid), spread = 0, m = abs(num(mid)) + 1;
        RatPoly dv = v.derivative();
        for (int k = 0; k <= dv.degree(); ++k) {
            Rational c = dv[k] < 0 ? Rational(-dv[k]) : dv[k];
            spread += c * rpow(Rational(m), k);
        }
        spread *= rad;
        if (!deg[static_cast<std::size_t>(i)].in_interval(centre - spread, centre + spread))
            throw Error(Errc::invalid_argument, "degree of b_" + std::to_string(i) + " inconsistent with its eigenvalue");
    }
    return ed;
}

/// Basis kind from lambda_{ii*0}: all 1 means transitional; equal to the
/// degrees means standard.
inline BasisKind classify_basis(const TableAlgebra& t) {
    bool transitional = true;
    for (int i = 0; i < t.rank(); ++i)
        if (t.lambda(i, t.star(i), 0) != 1) transitional = false;
    if (transitional) return BasisKind::transitional;
    auto deg = degree_map(t);
    for (int i = 0; i < t.rank(); ++i) {
        const auto& d = deg[static_cast<std::size_t>(i)];
        if (!d.is_rational() || d.rational_value() != t.lambda(i, t.star(i), 0)) return BasisKind::raw;
    }
    return BasisKind::standard;
}

/// Validates and records the basis kind; throws on the first violation.
inline TableAlgebra checked(TableAlgebra t) {
    auto rep = validate(t);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw Error(v.axiom == Axiom::commutativity ? Errc::non_commutative : Errc::invalid_argument,
                    std::string(axiom_name(v.axiom)) + ": " + v.detail);
    }
    t.basis_kind = classify_basis(t);
    return t;
}

/// Rescales between the standard basis (lambda_{ii*0} = delta_i) and the
/// transitional one (lambda_{ii*0} = 1).
inline TableAlgebra rescale(const TableAlgebra& t, BasisKind target) {
    if (target == BasisKind::raw) throw Error(Errc::basis_kind_mismatch, "cannot rescale to a raw basis");
    BasisKind from = t.basis_kind == BasisKind::raw ? classify_basis(t) : t.basis_kind;
    if (from == BasisKind::raw) throw Error(Errc::basis_kind_mismatch, "input basis is neither standard nor transitional");
    if (from == target) {
        TableAlgebra copy = t;
        copy.basis_kind = target;
        return copy;
    }
    const int n = t.rank();
    TableAlgebra out = TableAlgebra::zeros(n, t.involution(), t.names());
    auto fail = [](int i, int j, int k, const std::string& why) {
        throw Error(Errc::non_integral_rescale,
                    "lambda(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ") " + why);
    };
    if (target == BasisKind::transitional) {
        // b'_i = b_i / sqrt(delta_i), so lambda' = lambda * sqrt(delta_k / (delta_i delta_j)).
        std::vector<BigInt> d;
        for (int i = 0; i < n; ++i) d.push_back(t.lambda(i, t.star(i), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const BigInt& l = t.lambda(i, j, k);
                    if (l == 0) continue;
                    Rational sq = Rational(l * l * d[static_cast<std::size_t>(k)]) /
                                  Rational(d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)]);
                    if (!is_integer(sq) || !is_square(num(sq))) fail(i, j, k, "becomes " + l.str() + " * sqrt(" + to_string(sq / (l * l)) + ")");
                    out.set(i, j, k, boost::multiprecision::sqrt(num(sq)));
                }
    } else {
        // b'_i = delta_i b_i, so lambda' = lambda * delta_i delta_j / delta_k.
        ExactDegrees ed = exact_degrees(t);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const BigInt& l = t.lambda(i, j, k);
                    if (l == 0) continue;
                    RatPoly v = ed.field.mul(ed.values[static_cast<std::size_t>(i)], ed.values[static_cast<std::size_t>(j)]);
                    v = ed.field.mul(v, ed.field.inv(ed.values[static_cast<std::size_t>(k)]));
                    v = ed.field.mul(v, RatPoly(Rational(l)));
                    if (v.degree() > 0) fail(i, j, k, "becomes irrational");
                    Rational c = v[0];
                    if (!is_integer(c)) fail(i, j, k, "becomes " + to_string(c));
                    out.set(i, j, k, num(c));
                }
    }
    out.basis_kind = target;
    return out;
}

}  // namespace tazeta
