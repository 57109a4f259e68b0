#pragma once

// Built-in algebras: doubly regular tournaments, conference graphs, and the
// small fusion rings of rank 2 and 3.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "algebra.hpp"

namespace tazeta {

namespace detail {

inline void set_identity(TableAlgebra& t) {
    for (int j = 0; j < t.rank(); ++j) {
        t.set(0, j, j, 1);
        t.set(j, 0, j, 1);
    }
}

/// Product b_i b_j given as a coefficient list over the basis.
inline void set_product(TableAlgebra& t, int i, int j, const std::vector<long>& coeffs) {
    for (int k = 0; k < t.rank(); ++k) {
        t.set(i, j, k, coeffs[static_cast<std::size_t>(k)]);
        t.set(j, i, k, coeffs[static_cast<std::size_t>(k)]);
    }
}

}  // namespace detail

/// Fills unknown products of a commutative table from the associativity
/// equations that are linear in the unknowns. Every unknown must be forced to
/// a nonnegative integer.
inline TableAlgebra complete_by_associativity(TableAlgebra t, const std::vector<std::pair<int, int>>& unknown_products) {
    const int n = t.rank();
    std::map<std::tuple<int, int, int>, int> var;
    for (auto [i, j] : unknown_products)
        for (int k = 0; k < n; ++k) {
            int id = static_cast<int>(var.size());
            var[{i, j, k}] = id;
            var[{j, i, k}] = id;
        }
    const int nv = static_cast<int>(unknown_products.size()) * n;
    auto lookup = [&](int i, int j, int k) -> int {
        auto it = var.find({i, j, k});
        return it == var.end() ? -1 : it->second;
    };
    // Each row: coefficients of the unknowns, then the constant on the right.
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    std::vector<Rational> row(static_cast<std::size_t>(nv) + 1, Rational(0));
                    bool linear = true;
                    // sum_m lambda_{ijm} lambda_{mkl} - lambda_{jkm} lambda_{iml} = 0
                    auto accumulate = [&](int a, int b, int c, int d, int e, int f, int sign) {
                        int x = lookup(a, b, c), y = lookup(d, e, f);
                        if (x >= 0 && y >= 0) {
                            linear = false;
                        } else if (x >= 0) {
                            row[static_cast<std::size_t>(x)] += sign * Rational(t.lambda(d, e, f));
                        } else if (y >= 0) {
                            row[static_cast<std::size_t>(y)] += sign * Rational(t.lambda(a, b, c));
                        } else {
                            row[static_cast<std::size_t>(nv)] -= sign * Rational(t.lambda(a, b, c) * t.lambda(d, e, f));
                        }
                    };
                    for (int m = 0; m < n; ++m) {
                        accumulate(i, j, m, m, k, l, 1);
                        accumulate(j, k, m, i, m, l, -1);
                    }
                    if (linear) rows.push_back(std::move(row));
                }
    // Gauss-Jordan elimination.
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < nv && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int q = r; q < static_cast<int>(rows.size()); ++q)
            if (rows[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)] != 0) {
                piv = q;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
        auto& pr = rows[static_cast<std::size_t>(r)];
        Rational d = pr[static_cast<std::size_t>(c)];
        for (auto& x : pr) x /= d;
        for (int q = 0; q < static_cast<int>(rows.size()); ++q) {
            if (q == r) continue;
            auto& qr = rows[static_cast<std::size_t>(q)];
            Rational f = qr[static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int x = 0; x <= nv; ++x) qr[static_cast<std::size_t>(x)] -= f * pr[static_cast<std::size_t>(x)];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (static_cast<int>(pivot_col.size()) != nv) throw Error(Errc::invalid_argument, "associativity does not determine the missing products");
    for (int q = r; q < static_cast<int>(rows.size()); ++q)
        if (rows[static_cast<std::size_t>(q)][static_cast<std::size_t>(nv)] != 0)
            throw Error(Errc::invalid_argument, "associativity equations are inconsistent");
    for (auto& [key, id] : var) {
        Rational v = rows[static_cast<std::size_t>(id)][static_cast<std::size_t>(nv)];
        if (!is_integer(v) || v < 0) throw Error(Errc::invalid_argument, "completed structure constant " + to_string(v) + " is not a nonnegative integer");
        auto [i, j, k] = key;
        t.set(i, j, k, num(v));
    }
    return t;
}

/// Doubly regular tournament of order n = 4u + 3, standard basis {1, b, b*}.
inline TableAlgebra drt_algebra(long u) {
    if (u < 0) throw Error(Errc::invalid_argument, "drt needs u >= 0");
    TableAlgebra t = TableAlgebra::zeros(3, {0, 2, 1}, {"1", "b", "b*"});
    detail::set_identity(t);
    detail::set_product(t, 1, 1, {0, u, u + 1});
    detail::set_product(t, 2, 2, {0, u + 1, u});
    detail::set_product(t, 1, 2, {2 * u + 1, u, u});
    return checked(t);
}

/// Conference graph of order n = 4u + 1 (n not a square), standard basis
/// {1, b1, b2}. The square of b2 is completed from associativity.
inline TableAlgebra conference_algebra(long u) {
    if (u < 1) throw Error(Errc::invalid_argument, "conference needs u >= 1");
    BigInt n = 4 * u + 1;
    if (is_square(n)) throw Error(Errc::invalid_argument, "conference order n = " + n.str() + " is a perfect square");
    TableAlgebra t = TableAlgebra::zeros(3, {0, 1, 2}, {"1", "b1", "b2"});
    detail::set_identity(t);
    detail::set_product(t, 1, 1, {2 * u, u - 1, u});
    detail::set_product(t, 1, 2, {0, u, u});
    return checked(complete_by_associativity(t, {{2, 2}}));
}

inline const std::vector<std::string>& fusion_names() {
    static const std::vector<std::string> names{"fib", "c2", "ising", "reps3", "psu5l2", "e6", "c3"};
    return names;
}

inline TableAlgebra fusion_algebra(const std::string& name) {
    using detail::set_product;
    if (name == "fib") {
        TableAlgebra t = TableAlgebra::zeros(2, {0, 1}, {"1", "b"});
        detail::set_identity(t);
        set_product(t, 1, 1, {1, 1});
        return checked(t);
    }
    if (name == "c2") {
        TableAlgebra t = TableAlgebra::zeros(2, {0, 1}, {"1", "g"});
        detail::set_identity(t);
        set_product(t, 1, 1, {1, 0});
        return checked(t);
    }
    if (name == "c3") {
        TableAlgebra t = TableAlgebra::zeros(3, {0, 2, 1}, {"1", "g", "g2"});
        detail::set_identity(t);
        set_product(t, 1, 1, {0, 0, 1});
        set_product(t, 1, 2, {1, 0, 0});
        set_product(t, 2, 2, {0, 1, 0});
        return checked(t);
    }
    TableAlgebra t = TableAlgebra::zeros(3, {0, 1, 2}, {"1", "b", "d"});
    detail::set_identity(t);
    if (name == "ising") {
        set_product(t, 1, 1, {1, 0, 0});
        set_product(t, 1, 2, {0, 0, 1});
        set_product(t, 2, 2, {1, 1, 0});
    } else if (name == "reps3") {
        set_product(t, 1, 1, {1, 0, 0});
        set_product(t, 1, 2, {0, 0, 1});
        set_product(t, 2, 2, {1, 1, 1});
    } else if (name == "psu5l2") {
        set_product(t, 1, 1, {1, 0, 1});
        set_product(t, 1, 2, {0, 1, 1});
        set_product(t, 2, 2, {1, 1, 1});
    } else if (name == "e6") {
        set_product(t, 1, 1, {1, 0, 0});
        set_product(t, 1, 2, {0, 0, 1});
        set_product(t, 2, 2, {1, 1, 2});
    } else {
        throw Error(Errc::invalid_argument, "unknown fusion ring '" + name + "'");
    }
    return checked(t);
}

/// The order n = sum of degrees for the rank-3 families.
inline BigInt drt_order(long u) { return 4 * BigInt(u) + 3; }
inline BigInt conference_order(long u) { return 4 * BigInt(u) + 1; }

}  // namespace tazeta
