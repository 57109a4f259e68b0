#pragma once

// Brute-force ideal counting: enumerate every full sublattice of bounded index
// in Hermite normal form and keep those closed under the basis multipliers.

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "algebra.hpp"
#include "lattice.hpp"

namespace tazeta {

/// Truncated coefficient list a_1..a_N; index 0 is unused.
struct DirichletSeries {
    std::vector<BigInt> a;

    DirichletSeries() = default;
    explicit DirichletSeries(int bound) : a(static_cast<std::size_t>(bound) + 1, BigInt(0)) {}

    int bound() const { return static_cast<int>(a.size()) - 1; }
    const BigInt& operator[](int n) const { return a[static_cast<std::size_t>(n)]; }
    BigInt& operator[](int n) { return a[static_cast<std::size_t>(n)]; }
    friend bool operator==(const DirichletSeries& x, const DirichletSeries& y) { return x.a == y.a; }
};

struct OracleOptions {
    int threads = 0;  // 0: hardware concurrency
    std::function<void(const std::string&)> progress;
};

namespace detail {

using i128 = __int128;

/// Multiplication table in machine integers: mult[k][j][l] = lambda(k,j,l).
struct FastTable {
    int dim = 0;
    std::vector<std::int64_t> lambda;

    explicit FastTable(const TableAlgebra& t) : dim(t.rank()) {
        for (auto& v : t.lambda_data()) {
            if (v > 1000000 || v < -1000000) throw Error(Errc::invalid_argument, "structure constant too large for the oracle");
            lambda.push_back(static_cast<std::int64_t>(v));
        }
    }
    std::int64_t at(int k, int j, int l) const { return lambda[static_cast<std::size_t>((k * dim + j) * dim + l)]; }
};

/// h is a dim x dim upper-triangular HNF in row-major order.
inline bool is_ideal_fast(const FastTable& t, const std::vector<std::int64_t>& h) {
    const int n = t.dim;
    i128 w[16];
    for (int r = n - 1; r >= 0; --r) {
        for (int k = 1; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
                i128 s = 0;
                for (int j = r; j < n; ++j) {
                    std::int64_t v = h[static_cast<std::size_t>(r * n + j)];
                    if (v) s += static_cast<i128>(v) * t.at(k, j, l);
                }
                w[l] = s;
            }
            for (int c = 0; c < n; ++c) {
                if (w[c] == 0) continue;
                std::int64_t d = h[static_cast<std::size_t>(c * n + c)];
                if (w[c] % d != 0) return false;
                i128 q = w[c] / d;
                for (int j = c; j < n; ++j) w[j] -= q * h[static_cast<std::size_t>(c * n + j)];
            }
        }
    }
    return true;
}

/// Ordered factorizations of n into `dim` positive factors, lexicographic.
inline void diagonal_tuples(int dim, std::int64_t n, std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<int>(cur.size()) == dim - 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        cur.push_back(d);
        diagonal_tuples(dim, n / d, cur, out);
        cur.pop_back();
    }
}

/// Calls f(h) for every HNF with the given diagonal, off-diagonal entries in
/// row-major odometer order (the (0,1) entry most significant).
template <class F>
void for_each_with_diagonal(const std::vector<std::int64_t>& diag, F&& f) {
    const int n = static_cast<int>(diag.size());
    std::vector<std::int64_t> h(static_cast<std::size_t>(n * n), 0);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        h[static_cast<std::size_t>(i * n + i)] = diag[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            if (diag[static_cast<std::size_t>(j)] > 1) slots.emplace_back(i, j);
    }
    while (true) {
        f(h);
        int s = static_cast<int>(slots.size()) - 1;
        for (; s >= 0; --s) {
            auto [i, j] = slots[static_cast<std::size_t>(s)];
            auto& e = h[static_cast<std::size_t>(i * n + j)];
            if (++e < diag[static_cast<std::size_t>(j)]) break;
            e = 0;
        }
        if (s < 0) return;
    }
}

inline std::int64_t to_i64(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<std::int64_t>::max() / 4)) throw Error(Errc::invalid_argument, "index bound too large");
    return static_cast<std::int64_t>(v);
}

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Counts ideals for each work item (a diagonal) in parallel; `slot` maps a
/// diagonal to its output index.
inline std::vector<BigInt> count_over_diagonals(const TableAlgebra& t, const std::vector<std::vector<std::int64_t>>& diags,
                                                const std::vector<int>& slot, int nslots, const OracleOptions& opt) {
    FastTable ft(t);
    std::vector<std::uint64_t> totals(static_cast<std::size_t>(nslots), 0);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t done = 0;
    auto worker = [&]() {
        std::vector<std::uint64_t> local(static_cast<std::size_t>(nslots), 0);
        while (true) {
            std::size_t item = next.fetch_add(1);
            if (item >= diags.size()) break;
            std::uint64_t c = 0;
            for_each_with_diagonal(diags[item], [&](const std::vector<std::int64_t>& h) {
                if (is_ideal_fast(ft, h)) ++c;
            });
            local[static_cast<std::size_t>(slot[item])] += c;
            if (opt.progress) {
                std::lock_guard<std::mutex> lock(mu);
                ++done;
                std::size_t step = std::max<std::size_t>(1, diags.size() / 20);
                if (done % step == 0 || done == diags.size())
                    opt.progress("oracle: " + std::to_string(done) + "/" + std::to_string(diags.size()) + " diagonals");
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        for (std::size_t i = 0; i < local.size(); ++i) totals[i] += local[i];
    };
    int nt = std::min<int>(resolve_threads(opt.threads), static_cast<int>(std::max<std::size_t>(diags.size(), 1)));
    std::vector<std::thread> pool;
    for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<BigInt> out;
    for (auto v : totals) out.emplace_back(v);
    return out;
}

}  // namespace detail

/// Every index-n sublattice of Z^dim, each once, in canonical HNF.
template <class F>
void for_each_sublattice(int dim, const BigInt& n, F&& f) {
    if (n < 1 || dim < 1) throw Error(Errc::invalid_argument, "need dim >= 1 and n >= 1");
    std::vector<std::vector<std::int64_t>> diags;
    std::vector<std::int64_t> cur;
    detail::diagonal_tuples(dim, detail::to_i64(n), cur, diags);
    for (auto& d : diags)
        detail::for_each_with_diagonal(d, [&](const std::vector<std::int64_t>& h) {
            IntMatrix m(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) m(i, j) = h[static_cast<std::size_t>(i * dim + j)];
            f(m);
        });
}

inline std::vector<LatticeHNF> enumerate_sublattices(int dim, const BigInt& n) {
    std::vector<LatticeHNF> out;
    for_each_sublattice(dim, n, [&](const IntMatrix& m) { out.emplace_back(m); });
    return out;
}

/// Number of index-n sublattices of Z^dim: sum over d_0...d_{dim-1} = n of prod d_j^j.
inline BigInt count_sublattices(int dim, const BigInt& n) {
    std::vector<std::vector<std::int64_t>> diags;
    std::vector<std::int64_t> cur;
    detail::diagonal_tuples(dim, detail::to_i64(n), cur, diags);
    BigInt total = 0;
    for (auto& d : diags) {
        BigInt term = 1;
        for (int j = 0; j < dim; ++j) term *= ipow(BigInt(d[static_cast<std::size_t>(j)]), static_cast<unsigned>(j));
        total += term;
    }
    return total;
}

/// Closed under multiplication by every basis element?
inline bool is_ideal(const TableAlgebra& t, const LatticeHNF& l) {
    if (l.dim() != t.rank()) throw Error(Errc::dimension_mismatch, "lattice and algebra dimensions differ");
    const int n = t.rank();
    for (int r = 0; r < n; ++r) {
        auto v = l.matrix().row(r);
        for (int k = 1; k < n; ++k) {
            std::vector<BigInt> e(static_cast<std::size_t>(n), BigInt(0));
            e[static_cast<std::size_t>(k)] = 1;
            if (!l.contains(t.multiply(e, v))) return false;
        }
    }
    return true;
}

inline DirichletSeries count_ideals(const TableAlgebra& t, int bound, const OracleOptions& opt = {}) {
    if (bound < 1) throw Error(Errc::invalid_argument, "bound must be positive");
    std::vector<std::vector<std::int64_t>> diags;
    std::vector<int> slot;
    for (int n = 1; n <= bound; ++n) {
        std::vector<std::int64_t> cur;
        std::vector<std::vector<std::int64_t>> dn;
        detail::diagonal_tuples(t.rank(), n, cur, dn);
        for (auto& d : dn) {
            diags.push_back(std::move(d));
            slot.push_back(n);
        }
    }
    auto totals = detail::count_over_diagonals(t, diags, slot, bound + 1, opt);
    DirichletSeries s(bound);
    for (int n = 1; n <= bound; ++n) s[n] = totals[static_cast<std::size_t>(n)];
    return s;
}

/// a_{p^0}, ..., a_{p^kmax}.
inline std::vector<BigInt> count_ideals_at_prime(const TableAlgebra& t, const BigInt& p, int kmax, const OracleOptions& opt = {}) {
    if (kmax < 0) throw Error(Errc::invalid_argument, "kmax must be nonnegative");
    const int dim = t.rank();
    std::vector<std::vector<std::int64_t>> diags;
    std::vector<int> slot;
    std::int64_t pp = detail::to_i64(p);
    detail::to_i64(ipow(p, static_cast<unsigned>(kmax)));
    // Exponent vectors with sum <= kmax, grouped by their sum.
    for (int k = 0; k <= kmax; ++k) {
        std::vector<int> e(static_cast<std::size_t>(dim), 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == dim - 1) {
                e[static_cast<std::size_t>(pos)] = left;
                std::vector<std::int64_t> d;
                for (int x : e) {
                    std::int64_t v = 1;
                    for (int i = 0; i < x; ++i) v *= pp;
                    d.push_back(v);
                }
                diags.push_back(std::move(d));
                slot.push_back(k);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                e[static_cast<std::size_t>(pos)] = x;
                rec(pos + 1, left - x);
            }
        };
        rec(0, k);
    }
    return detail::count_over_diagonals(t, diags, slot, kmax + 1, opt);
}

/// Number of HNFs the prime-power oracle visits up to p^kmax.
inline BigInt prime_power_workload(int dim, const BigInt& p, int kmax) {
    BigInt total = 0;
    for (int k = 0; k <= kmax; ++k) total += count_sublattices(dim, ipow(p, static_cast<unsigned>(k)));
    return total;
}

}  // namespace tazeta
