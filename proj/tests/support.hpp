#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tazeta/tazeta.hpp"

namespace tazeta::test {

/// Sum of c * p^a * t^b, the shape p^(a - b s) used for local factors.
inline Polynomial<PExpr> pt_sum(const std::vector<std::tuple<long, int, int>>& terms) {
    Polynomial<PExpr> out;
    for (auto& [c, a, b] : terms) out += Polynomial<PExpr>::monomial(PExpr(c) * PExpr::p_pow(a), b);
    return out;
}

inline std::vector<BigInt> ints(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

/// Coefficients of (sum c_k t^k) / (1 - t)^2 by direct convolution with k + 1.
inline std::vector<BigInt> over_one_minus_t_squared(const std::vector<BigInt>& c, int kmax) {
    std::vector<BigInt> out(static_cast<std::size_t>(kmax) + 1, BigInt(0));
    for (int k = 0; k <= kmax; ++k)
        for (int j = 0; j <= k && j < static_cast<int>(c.size()); ++j) out[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(j)] * (k - j + 1);
    return out;
}

inline std::vector<TableAlgebra> builtins() {
    std::vector<TableAlgebra> out;
    for (auto& n : fusion_names()) out.push_back(fusion_algebra(n));
    for (long u : {0, 1, 2, 6}) out.push_back(drt_algebra(u));
    for (long u : {1, 3, 7}) out.push_back(conference_algebra(u));
    return out;
}

inline LatticeHNF span(std::initializer_list<std::initializer_list<long>> gens) {
    IntMatrix g(static_cast<int>(gens.size()), 3);
    int r = 0;
    for (auto& row : gens) {
        int c = 0;
        for (long x : row) g(r, c++) = x;
        ++r;
    }
    return LatticeHNF(g);
}

inline IntermediateLattice M(long r, int i, int j) { return {BigInt(r), i, j}; }

/// The eight lattices of the cube case with their index exponents and
/// genus zeta numerators.
struct CubeCase {
    IntermediateLattice lattice;
    int index_exponent;
    Polynomial<PExpr> numerator;
};

inline std::vector<CubeCase> cube_cases() {
    return {
        {M(0, 0, 0), 4, pt_sum({{1, 0, 4}})},
        {M(0, 1, 0), 3, pt_sum({{1, 1, 5}, {-1, 0, 4}, {1, 0, 3}})},
        {M(0, 0, 1), 3, pt_sum({{1, 1, 5}, {-2, 0, 4}, {1, 0, 3}})},
        {M(1, 0, 1), 3, pt_sum({{1, 2, 5}, {-1, 1, 5}, {1, 0, 4}, {-2, 0, 3}, {1, 0, 2}})},
        {M(0, 1, 1), 2, pt_sum({{1, 2, 6}, {-2, 1, 5}, {1, 0, 4}, {1, 1, 3}, {-1, 0, 3}})},
        {M(0, 0, 2), 2, pt_sum({{1, 3, 6}, {-2, 2, 5}, {1, 2, 4}, {1, 0, 3}, {-2, 0, 2}, {1, 0, 1}})},
        {M(0, 1, 2), 1, pt_sum({{1, 3, 7}, {-2, 2, 6}, {1, 1, 5}, {1, 2, 4}, {-2, 1, 3}, {1, 1, 2}})},
        {M(0, 1, 3), 0, pt_sum({{1, 4, 8}, {-2, 3, 7}, {1, 2, 6}, {1, 3, 5}, {-2, 2, 4}, {1, 2, 3}, {1, 0, 2}, {-2, 0, 1}, {1, 0, 0}})},
    };
}

/// Complementary lattices {M : Lambda} at m = 1.
inline LatticeHNF table_complement(const IntermediateLattice& l, long p, long v) {
    long p2 = p * p, p3 = p2 * p;
    std::string n = l.name();
    if (n == "M(0,0,0)") return span({{p2, 0, 0}, {0, p3, 0}, {0, 0, p3}});
    if (n == "M(0,1,0)") return span({{p, 0, 0}, {0, p3, 0}, {0, 0, p3}});
    if (n == "M(0,0,1)") return span({{p2, 0, 0}, {0, p2, p2}, {0, 0, p3}});
    if (n == "M(1,0,1)") return span({{p, p2 * v, p2 * v}, {0, p3, 0}, {0, 0, p3}});
    if (n == "M(0,1,1)") return span({{p, 0, 0}, {0, p2, p2}, {0, 0, p3}});
    if (n == "M(0,0,2)") return span({{p2, 0, 0}, {0, p, p}, {0, 0, p3}});
    if (n == "M(0,1,2)") return span({{p, 0, 0}, {0, p, p}, {0, 0, p3}});
    return span({{p, 0, 0}, {0, 1, 1}, {0, 0, p3}});
}

/// Index list for the automorphism groups at m = 1.
inline IntPoly listed_mu_inv(const IntermediateLattice& l) {
    std::map<std::string, IntPoly> list{
        {"M(0,1,3)", IntPoly(ints({0, 0, 0, -1, 1}))}, {"M(0,1,2)", IntPoly(ints({0, 0, -1, 1}))},
        {"M(0,0,2)", IntPoly(ints({0, 0, -1, 1}))},    {"M(0,1,1)", IntPoly(ints({0, -1, 1}))},
        {"M(1,0,1)", IntPoly(ints({0, -1, 1}))},       {"M(0,1,0)", IntPoly(ints({0, 1}))},
        {"M(0,0,1)", IntPoly(ints({-1, 1}))},          {"M(0,0,0)", IntPoly(ints({1}))},
    };
    return list.at(l.name());
}

}  // namespace tazeta::test
