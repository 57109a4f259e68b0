#pragma once

// Local Euler factors as rational functions of t = p^-s, their expansions, and
// the assembly of truncated global Dirichlet series.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "ideal_oracle.hpp"
#include "pexpr.hpp"

namespace tazeta {

/// numerator(t) / denominator(t) at a fixed prime, denominator(0) = 1.
struct LocalRationalFunction {
    BigInt p;
    IntPoly numerator{BigInt(1)};
    IntPoly denominator{BigInt(1)};

    LocalRationalFunction() = default;
    LocalRationalFunction(BigInt prime, IntPoly num, IntPoly den) : p(std::move(prime)), numerator(std::move(num)), denominator(std::move(den)) {
        if (denominator[0] != 1) throw Error(Errc::invalid_argument, "local factor denominator must be 1 at t = 0");
    }

    /// Coefficients of t^0..t^kmax.
    std::vector<BigInt> expand(int kmax) const { return series_divide(numerator, denominator, kmax); }

    std::string to_string() const {
        return "(" + numerator.to_string("t") + ") / (" + denominator.to_string("t") + ") @ p=" + p.str();
    }

    /// Same function: cross-multiplication.
    bool equivalent(const LocalRationalFunction& o) const {
        return p == o.p && numerator * o.denominator == o.numerator * denominator;
    }

    friend LocalRationalFunction operator*(const LocalRationalFunction& a, const LocalRationalFunction& b) {
        if (a.p != b.p) throw Error(Errc::invalid_argument, "local factors at different primes");
        return {a.p, a.numerator * b.numerator, a.denominator * b.denominator};
    }
    friend bool operator==(const LocalRationalFunction& a, const LocalRationalFunction& b) {
        return a.p == b.p && a.numerator == b.numerator && a.denominator == b.denominator;
    }
};

/// A rational function of t whose coefficients are polynomials in p.
struct SymbolicRationalFunction {
    Polynomial<PExpr> numerator{PExpr(1)};
    IntPoly denominator{BigInt(1)};

    std::string to_string() const {
        return "(" + numerator.to_string("t") + ") / (" + denominator.to_string("t") + ")";
    }

    /// Substitute a concrete prime.
    LocalRationalFunction at(const BigInt& p) const {
        std::vector<BigInt> c;
        for (auto& x : numerator.coeffs()) {
            Rational v = x.eval(Rational(p));
            if (!is_integer(v)) throw Error(Errc::non_integral_quotient, "coefficient is not integral at p = " + p.str());
            c.push_back(num(v));
        }
        return {p, IntPoly(std::move(c)), denominator};
    }

    friend bool operator==(const SymbolicRationalFunction& a, const SymbolicRationalFunction& b) {
        return a.numerator == b.numerator && a.denominator == b.denominator;
    }
};

/// (1 - t)^-k as a local factor.
inline LocalRationalFunction zeta_power(const BigInt& p, int k) { return {p, IntPoly(BigInt(1)), one_minus_t_pow<BigInt>(k)}; }

namespace detail {

inline BigInt eval_mod(const IntPoly& f, const BigInt& x, const BigInt& p) {
    BigInt acc = 0;
    for (int k = f.degree(); k >= 0; --k) acc = mod(acc * x + f[k], p);
    return acc;
}

/// Quotient of f by (x - r) over Z/p, coefficients reduced.
inline IntPoly divide_root_mod(const IntPoly& f, const BigInt& r, const BigInt& p) {
    std::vector<BigInt> q(static_cast<std::size_t>(f.degree()), BigInt(0));
    BigInt carry = 0;
    for (int k = f.degree(); k >= 1; --k) {
        carry = mod(carry * r + f[k], p);
        q[static_cast<std::size_t>(k - 1)] = carry;
    }
    return IntPoly(std::move(q));
}

}  // namespace detail

/// Residue degrees of the distinct prime factors of p in a ring presented by
/// a monic defining polynomial of degree <= 3.
inline std::vector<int> residue_degrees(const IntPoly& f, const BigInt& p) {
    if (f.degree() > 3) throw Error(Errc::degree_too_large, "residue degrees need degree <= 3");
    std::vector<int> out;
    IntPoly g = f;
    std::vector<BigInt> roots;
    for (BigInt r = 0; r < p && g.degree() >= 1; ++r) {
        while (g.degree() >= 1 && detail::eval_mod(g, r, p) == 0) {
            g = detail::divide_root_mod(g, r, p);
            if (roots.empty() || roots.back() != r) roots.push_back(r);
        }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) out.push_back(1);
    // What is left has no roots mod p, so it is irreducible (degree <= 3).
    if (g.degree() >= 2) out.push_back(g.degree());
    return out;
}

inline LocalRationalFunction dedekind_euler_factor(const NumberRing& ring, const BigInt& p) {
    if (!ring.is_maximal_certified)
        throw Error(Errc::not_certified_maximal, "ring defined by " + ring.defining_poly.to_string() + " is not certified maximal");
    IntPoly den(BigInt(1));
    for (int f : residue_degrees(ring.defining_poly, p)) den *= IntPoly(BigInt(1)) - IntPoly::monomial(BigInt(1), f);
    return {p, IntPoly(BigInt(1)), den};
}

/// Local factor of the maximal order: the product over the components.
inline LocalRationalFunction maximal_local_factor(const RationalDecomposition& d, const BigInt& p) {
    LocalRationalFunction acc{p, IntPoly(BigInt(1)), IntPoly(BigInt(1))};
    for (auto& ring : d.component_rings) acc = acc * dedekind_euler_factor(ring, p);
    return acc;
}

enum class ValuationCase { v1, v3 };

/// Numerator polynomial in t with coefficients in p, over (1 - t)^2.
inline Polynomial<PExpr> closed_form_numerator(ValuationCase c) {
    const PExpr P = PExpr::p();
    auto mono = [](const PExpr& coeff, int k) { return Polynomial<PExpr>::monomial(coeff, k); };
    Polynomial<PExpr> f = mono(PExpr(1), 0) - mono(PExpr(1), 1) + mono(P, 2);
    if (c == ValuationCase::v1) return f;
    const PExpr P2 = P * P, P3 = P2 * P, P4 = P3 * P;
    return f + mono(P2 - P, 3) + mono(P3 - P2, 5) + mono(P3, 6) - mono(P3, 7) + mono(P4, 8);
}

inline SymbolicRationalFunction closed_form_factor_symbolic(ValuationCase c) {
    return {closed_form_numerator(c), one_minus_t_pow<BigInt>(2)};
}

inline LocalRationalFunction closed_form_factor(ValuationCase c, const BigInt& p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(Errc::invalid_argument, "needs an odd prime, got " + p.str());
    return closed_form_factor_symbolic(c).at(p);
}

/// 1 - t + p t^2 at the given prime, the factor shared by the Ising, E6,
/// Rep(S3) and C3 examples.
inline LocalRationalFunction cyclic_type_polynomial(const BigInt& p) {
    return {p, IntPoly{BigInt(1), BigInt(-1), p}, IntPoly(BigInt(1))};
}

/// Exceptional local factors (full factors, not just the polynomial part)
/// known in closed form for the built-in fusion rings.
inline std::map<BigInt, LocalRationalFunction> fusion_exceptional_factors(const std::string& name, const RationalDecomposition& d) {
    std::map<BigInt, LocalRationalFunction> out;
    auto add = [&](long p) { out[BigInt(p)] = cyclic_type_polynomial(p) * maximal_local_factor(d, p); };
    if (name == "ising" || name == "e6") add(2);
    if (name == "reps3") {
        add(2);
        add(3);
    }
    if (name == "c3") add(3);
    return out;
}

/// Closed-form factors for the rank-3 families of order n: primes with
/// v_p(n) = 1 or 3. Others are absent from the map.
inline std::map<BigInt, LocalRationalFunction> rank3_exceptional_factors(const BigInt& n) {
    std::map<BigInt, LocalRationalFunction> out;
    for (auto& [p, e] : factorize(n)) {
        if (p == 2) continue;
        if (e == 1) out[p] = closed_form_factor(ValuationCase::v1, p);
        if (e == 3) out[p] = closed_form_factor(ValuationCase::v3, p);
    }
    return out;
}

/// Truncated Euler product: good primes use the maximal order's factor, bad
/// primes the supplied one.
inline DirichletSeries assemble_global(const RationalDecomposition& d, const std::vector<BigInt>& bad_primes,
                                       const std::map<BigInt, LocalRationalFunction>& exceptional, int bound) {
    for (auto& p : bad_primes)
        if (!exceptional.count(p)) throw Error(Errc::missing_bad_prime, "no local factor supplied for bad prime " + p.str());
    DirichletSeries s(bound);
    s[1] = 1;
    for (auto p64 : primes_up_to(static_cast<std::uint64_t>(bound))) {
        BigInt p(p64);
        auto it = exceptional.find(p);
        LocalRationalFunction f = it != exceptional.end() ? it->second : maximal_local_factor(d, p);
        int kmax = 0;
        for (BigInt q = p; q <= bound; q *= p) ++kmax;
        auto c = f.expand(kmax);
        DirichletSeries next(bound);
        for (int n = 1; n <= bound; ++n) {
            if (s[n] == 0) continue;
            BigInt q = 1;
            for (int k = 0; k <= kmax && n * q <= bound; ++k, q *= p) next[static_cast<int>(n * q)] += s[n] * c[static_cast<std::size_t>(k)];
        }
        s = std::move(next);
    }
    return s;
}

inline DirichletSeries assemble_global(const TableAlgebra& t, const std::map<BigInt, LocalRationalFunction>& exceptional, int bound) {
    RationalDecomposition d = decompose(t);
    MaximalOrder mo = maximal_order(t, d);
    return assemble_global(d, mo.bad_primes, exceptional, bound);
}

struct InferredPolynomial {
    IntPoly polynomial;
    bool stabilized = false;
    std::vector<BigInt> quotient;  // the full quotient series up to kmax
};

/// delta_p(t) = (sum a_{p^k} t^k) / maximal_factor, read off once at least
/// three trailing zero coefficients are seen.
inline InferredPolynomial infer_local_polynomial(const std::vector<BigInt>& counts, const LocalRationalFunction& maximal_factor) {
    if (counts.empty()) throw Error(Errc::invalid_argument, "no oracle counts");
    const int kmax = static_cast<int>(counts.size()) - 1;
    IntPoly a(counts);
    IntPoly top = (a * maximal_factor.denominator).truncate(kmax);
    InferredPolynomial out;
    out.quotient = series_divide(top, maximal_factor.numerator, kmax);
    int last = -1;
    for (int k = 0; k <= kmax; ++k)
        if (out.quotient[static_cast<std::size_t>(k)] != 0) last = k;
    out.stabilized = kmax - last >= 3;
    out.polynomial = IntPoly(std::vector<BigInt>(out.quotient.begin(), out.quotient.begin() + (last + 1)));
    return out;
}

/// Writes a series as `n<TAB>a_n` lines.
inline std::string series_tsv(const DirichletSeries& s) {
    std::string out;
    for (int n = 1; n <= s.bound(); ++n) out += std::to_string(n) + "\t" + s[n].str() + "\n";
    return out;
}

}  // namespace tazeta
