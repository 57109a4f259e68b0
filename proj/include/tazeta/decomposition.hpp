#pragma once

// Wedderburn decomposition of QB for monogenic commutative table algebras:
// primitive idempotents, characters, the maximal order and its conductor.

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace tazeta {

/// The one cubic ring accepted as maximal without a general algorithm.
inline const IntPoly& certified_cubic() {
    static const IntPoly f{BigInt(1), BigInt(-1), BigInt(-2), BigInt(1)};  // x^3 - 2x^2 - x + 1
    return f;
}

/// Ring of integers of Q[x]/(factor), presented by a Z-basis of polynomials in
/// a root of `factor`.
struct NumberRing {
    IntPoly factor;
    IntPoly defining_poly;  // minimal polynomial of the ring's generator
    bool is_maximal_certified = false;
    BigInt discriminant;
    std::vector<RatPoly> basis;
};

inline BigInt poly_discriminant(const IntPoly& f) {
    switch (f.degree()) {
        case 1: return 1;
        case 2: return f[1] * f[1] - 4 * f[0] * f[2];
        case 3: {
            const BigInt &a = f[3], &b = f[2], &c = f[1], &d = f[0];
            return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
        }
        default: throw Error(Errc::degree_too_large, "discriminant of degree " + std::to_string(f.degree()));
    }
}

inline NumberRing component_ring(const IntPoly& f) {
    NumberRing r;
    r.factor = f;
    switch (f.degree()) {
        case 1:
            r.defining_poly = f;
            r.is_maximal_certified = true;
            r.discriminant = 1;
            r.basis = {RatPoly(Rational(1))};
            return r;
        case 2: {
            // sqrt(D) = 2x + b for x^2 + bx + c; D = d0 f^2 with d0 squarefree.
            const BigInt b = f[1];
            const BigInt disc = poly_discriminant(f);
            auto [d0, cond] = squarefree_decomposition(disc);
            RatPoly omega;
            if (mod(d0, 4) == 1) {
                omega = RatPoly{Rational(cond + b, 2 * cond), Rational(1, cond)};
                r.defining_poly = IntPoly{(1 - d0) / 4, BigInt(-1), BigInt(1)};
                r.discriminant = d0;
            } else {
                omega = RatPoly{Rational(b, cond), Rational(2, cond)};
                r.defining_poly = IntPoly{BigInt(-d0), BigInt(0), BigInt(1)};
                r.discriminant = 4 * d0;
            }
            r.is_maximal_certified = true;
            r.basis = {RatPoly(Rational(1)), omega};
            return r;
        }
        case 3:
            r.defining_poly = f;
            r.discriminant = poly_discriminant(f);
            r.is_maximal_certified = f == certified_cubic();
            r.basis = {RatPoly(Rational(1)), RatPoly::x(), RatPoly::monomial(Rational(1), 2)};
            return r;
        default:
            r.defining_poly = f;
            r.is_maximal_certified = false;
            r.basis.clear();
            for (int k = 0; k < f.degree(); ++k) r.basis.push_back(RatPoly::monomial(Rational(1), k));
            return r;
    }
}

struct RationalDecomposition {
    int generator_index = 0;
    IntPoly minpoly;
    std::vector<IntPoly> factors;
    std::vector<std::vector<Rational>> idempotents;
    std::vector<NumberRing> component_rings;
    PowerBasis power;
};

namespace detail {

inline bool factors_certifiable(const std::vector<IntPoly>& factors) {
    for (auto& f : factors)
        if (f.degree() > 3 || (f.degree() == 3 && f != certified_cubic())) return false;
    return true;
}

/// Generating index: the least one whose components all have certified
/// maximal orders, falling back to the least generating index.
inline PowerBasis choose_generator(const TableAlgebra& t) {
    if (!is_commutative(t)) throw Error(Errc::non_commutative, "decomposition needs a commutative algebra");
    if (t.rank() == 1) return *first_power_basis(t);
    std::optional<PowerBasis> first;
    for (int g = 1; g < t.rank(); ++g) {
        auto pb = power_basis(t, g);
        if (!pb) continue;
        if (!first) first = pb;
        if (pb->minpoly.degree() <= 4 && factors_certifiable(factor_min_poly(pb->minpoly))) return *pb;
    }
    if (!first) throw Error(Errc::not_monogenic, "no basis element generates the algebra");
    return *first;
}

}  // namespace detail

inline std::pair<int, IntPoly> find_generator(const TableAlgebra& t) {
    PowerBasis pb = detail::choose_generator(t);
    return {pb.generator, pb.minpoly};
}

/// CRT projectors e_f = (mu/f) * ((mu/f)^{-1} mod f), in B-coordinates.
inline std::vector<std::vector<Rational>> primitive_idempotents(const PowerBasis& pb, const std::vector<IntPoly>& factors) {
    std::vector<std::vector<Rational>> out;
    for (auto& f : factors) {
        RatPoly h = to_rational(pb.minpoly.exact_div(f));
        NumberField field(f);
        RatPoly e = (h * field.inv(h)).divmod(to_rational(pb.minpoly)).second;
        out.push_back(coordinates_of(pb, e));
    }
    return out;
}

inline std::vector<std::vector<Rational>> primitive_idempotents(const TableAlgebra& t) {
    PowerBasis pb = detail::choose_generator(t);
    return primitive_idempotents(pb, factor_min_poly(pb.minpoly));
}

inline RationalDecomposition decompose(const TableAlgebra& t) {
    RationalDecomposition d;
    d.power = detail::choose_generator(t);
    d.generator_index = d.power.generator;
    d.minpoly = d.power.minpoly;
    d.factors = factor_min_poly(d.minpoly);
    d.idempotents = primitive_idempotents(d.power, d.factors);
    for (auto& f : d.factors) d.component_rings.push_back(component_ring(f));
    return d;
}

/// Characters chi(b_i) as elements of Q[x]/(f), one row per factor.
struct CharacterTable {
    std::vector<std::vector<RatPoly>> characters;
    std::vector<std::optional<Rational>> multiplicities;
    std::optional<Rational> order_n;
};

inline BasisKind resolved_kind(const TableAlgebra& t) {
    return t.basis_kind == BasisKind::raw ? classify_basis(t) : t.basis_kind;
}

inline CharacterTable character_table(const TableAlgebra& t, const RationalDecomposition& d) {
    CharacterTable ct;
    for (auto& f : d.factors) {
        NumberField field(f);
        std::vector<RatPoly> row;
        for (int i = 0; i < t.rank(); ++i) row.push_back(field.reduce(basis_polynomial(d.power, i)));
        ct.characters.push_back(std::move(row));
    }
    // n = sum_i delta_i^2 / lambda_{ii*0}, rational whenever all degrees are.
    auto deg = degree_map(t);
    bool rational = true;
    Rational n = 0;
    for (int i = 0; i < t.rank(); ++i) {
        if (!deg[static_cast<std::size_t>(i)].is_rational()) {
            rational = false;
            break;
        }
        Rational di(deg[static_cast<std::size_t>(i)].rational_value());
        n += di * di / Rational(t.lambda(i, t.star(i), 0));
    }
    if (rational) ct.order_n = n;
    for (std::size_t c = 0; c < d.factors.size(); ++c) {
        NumberField field(d.factors[c]);
        RatPoly s;
        for (int i = 0; i < t.rank(); ++i)
            s += field.mul(ct.characters[c][static_cast<std::size_t>(i)], ct.characters[c][static_cast<std::size_t>(t.star(i))]) *
                 RatPoly(Rational(1) / Rational(t.lambda(i, t.star(i), 0)));
        s = field.reduce(s);
        std::optional<Rational> m;
        if (rational) {
            RatPoly mv = field.mul(RatPoly(n), field.inv(s));
            if (mv.degree() <= 0) m = mv[0];
        }
        ct.multiplicities.push_back(m);
    }
    return ct;
}

/// Galois-orbit sums of e_chi = (m_chi / n) sum_i chi(b_i*) / lambda_{ii*0} b_i,
/// with m_chi / n fixed by chi(e_chi) = 1.
inline std::vector<std::vector<Rational>> character_formula_idempotents(const TableAlgebra& t) {
    if (resolved_kind(t) == BasisKind::raw) throw Error(Errc::basis_kind_mismatch, "basis is neither standard nor transitional");
    RationalDecomposition d = decompose(t);
    CharacterTable ct = character_table(t, d);
    std::vector<std::vector<Rational>> out;
    for (std::size_t c = 0; c < d.factors.size(); ++c) {
        NumberField field(d.factors[c]);
        const auto& chi = ct.characters[c];
        RatPoly s;
        for (int i = 0; i < t.rank(); ++i)
            s += field.mul(chi[static_cast<std::size_t>(i)], chi[static_cast<std::size_t>(t.star(i))]) *
                 RatPoly(Rational(1) / Rational(t.lambda(i, t.star(i), 0)));
        RatPoly scale = field.inv(field.reduce(s));
        std::vector<Rational> e;
        for (int i = 0; i < t.rank(); ++i) {
            RatPoly coef = field.mul(chi[static_cast<std::size_t>(t.star(i))], scale) *
                           RatPoly(Rational(1) / Rational(t.lambda(i, t.star(i), 0)));
            e.push_back(field.trace(field.reduce(coef)));
        }
        out.push_back(std::move(e));
    }
    return out;
}

struct MaximalOrder {
    RatMatrix basis;  // rows: Lambda_0 basis in B-coordinates
    BigInt index;
    BigInt conductor;
    std::vector<BigInt> bad_primes;
    BigInt disc_zb;
    BigInt disc_max;
};

/// det of the trace form Tr(b_i b_j) on the basis B.
inline BigInt discriminant_of_basis(const TableAlgebra& t) {
    const int n = t.rank();
    std::vector<BigInt> tr(static_cast<std::size_t>(n), BigInt(0));
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) tr[static_cast<std::size_t>(l)] += t.lambda(l, j, j);
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) g(i, j) += t.lambda(i, j, l) * tr[static_cast<std::size_t>(l)];
    return determinant(g);
}

inline MaximalOrder maximal_order(const TableAlgebra& t, const RationalDecomposition& d) {
    for (auto& ring : d.component_rings)
        if (!ring.is_maximal_certified)
            throw Error(Errc::maximality_uncertified, "no certified maximal order for the component " + ring.factor.to_string());
    const int n = t.rank();
    MaximalOrder mo;
    mo.basis = RatMatrix(n, n);
    int row = 0;
    const RatPoly mu = to_rational(d.minpoly);
    for (std::size_t c = 0; c < d.factors.size(); ++c) {
        RatPoly h = to_rational(d.minpoly.exact_div(d.factors[c]));
        RatPoly e = (h * NumberField(d.factors[c]).inv(h)).divmod(mu).second;
        for (auto& w : d.component_rings[c].basis) {
            auto coords = coordinates_of(d.power, (w * e).divmod(mu).second);
            mo.basis.set_row(row++, coords);
        }
    }
    Rational det = determinant(mo.basis);
    if (det == 0) throw Error(Errc::not_full_rank, "maximal order basis is degenerate");
    Rational idx = Rational(1) / (det < 0 ? Rational(-det) : det);
    if (!is_integer(idx)) throw Error(Errc::invalid_argument, "ZB is not contained in the computed maximal order");
    mo.index = num(idx);
    RatMatrix inv = inverse(mo.basis);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!is_integer(inv(i, j))) throw Error(Errc::invalid_argument, "ZB is not contained in the computed maximal order");
    // Closure under multiplication, transported through the structure tensor.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto prod = t.multiply(mo.basis.row(i), mo.basis.row(j));
            for (int k = 0; k < n; ++k) {
                Rational c = 0;
                for (int l = 0; l < n; ++l) c += prod[static_cast<std::size_t>(l)] * inv(l, k);
                if (!is_integer(c)) throw Error(Errc::invalid_argument, "computed maximal order is not closed under multiplication");
            }
        }
    mo.conductor = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mo.conductor = lcm(mo.conductor, den(mo.basis(i, j)));
    mo.bad_primes = prime_divisors(mo.conductor);
    mo.disc_zb = discriminant_of_basis(t);
    mo.disc_max = mo.disc_zb / (mo.index * mo.index);
    return mo;
}

inline MaximalOrder maximal_order(const TableAlgebra& t) { return maximal_order(t, decompose(t)); }

}  // namespace tazeta
