#pragma once

// Local genus zeta functions of Z_pB for the rank-3 families at a prime p with
// v_p(n) = 2m+1. Elements of Lambda_0 = R (+) Z_p, R = Z_p[pi], pi^2 = pv, are
// written in coordinates (x, y, z) meaning x*pi*e1 + y*e1 + z*e0.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dirichlet.hpp"
#include "families.hpp"
#include "lattice.hpp"
#include "pexpr.hpp"

namespace tazeta {

enum class Rank3Family { drt, conference };

struct LocalModel {
    BigInt p;
    int m = 0;
    BigInt v;  // pi^2 = p v
    std::optional<Rank3Family> family;
    long u = 0;

    LocalModel() = default;
    LocalModel(BigInt prime, int m_, BigInt unit) : p(std::move(prime)), m(m_), v(std::move(unit)) {
        if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(Errc::invalid_argument, "the local model needs an odd prime, got " + p.str());
        if (m < 0) throw Error(Errc::invalid_argument, "m must be nonnegative");
        if (mod(v, p) == 0) throw Error(Errc::invalid_argument, "v must be a unit mod p");
    }

    BigInt pow(int e) const { return ipow(p, static_cast<unsigned>(e)); }

    /// (x*pi + y)(x'*pi + y') and z*z' componentwise.
    std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const {
        return {a[0] * b[1] + a[1] * b[0], a[1] * b[1] + p * v * a[0] * b[0], a[2] * b[2]};
    }

    /// Matrix G with x * G = x * a for row vectors x.
    IntMatrix multiplication_matrix(const std::vector<BigInt>& a) const {
        IntMatrix g(3, 3);
        g(0, 0) = a[1];
        g(0, 1) = p * v * a[0];
        g(1, 0) = a[0];
        g(1, 1) = a[1];
        g(2, 2) = a[2];
        return g;
    }
};

/// Model for drt(u) or conference(u) at an odd prime p with v_p(n) odd.
inline LocalModel local_model(Rank3Family fam, long u, const BigInt& p) {
    BigInt n = fam == Rank3Family::drt ? drt_order(u) : conference_order(u);
    if (fam == Rank3Family::conference && is_square(n)) throw Error(Errc::invalid_argument, "conference order " + n.str() + " is a perfect square");
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(Errc::invalid_argument, "needs an odd prime, got " + p.str());
    int e = valuation(n, p);
    if (e <= 0) throw Error(Errc::unsupported_case, "p = " + p.str() + " does not divide n = " + n.str() + "; Z_pB is maximal there");
    if (e % 2 == 0) throw Error(Errc::unsupported_case, "even valuation v_p(n) = " + std::to_string(e) + " is not covered");
    BigInt rest = n / ipow(p, static_cast<unsigned>(e));
    LocalModel model(p, (e - 1) / 2, fam == Rank3Family::drt ? BigInt(-rest) : rest);
    model.family = fam;
    model.u = u;
    return model;
}

// ---------------------------------------------------------------------------
// Intermediate lattices M(r,i,j) = <e0+e1, r e0 + p^i pi e1, p^j e0>

struct IntermediateLattice {
    BigInt r;
    int i = 0;
    int j = 0;

    std::string name() const { return "M(" + r.str() + "," + std::to_string(i) + "," + std::to_string(j) + ")"; }
    friend bool operator==(const IntermediateLattice& a, const IntermediateLattice& b) { return a.r == b.r && a.i == b.i && a.j == b.j; }
    friend bool operator!=(const IntermediateLattice& a, const IntermediateLattice& b) { return !(a == b); }
    /// Presentation order: by j, then i, then r.
    friend bool operator<(const IntermediateLattice& a, const IntermediateLattice& b) {
        if (a.j != b.j) return a.j < b.j;
        if (a.i != b.i) return a.i < b.i;
        return a.r < b.r;
    }
};

inline LatticeHNF hnf(const LocalModel& model, const IntermediateLattice& l) {
    IntMatrix g{{model.pow(l.i), BigInt(0), l.r}, {BigInt(0), BigInt(1), BigInt(1)}, {BigInt(0), BigInt(0), model.pow(l.j)}};
    return LatticeHNF(g);
}

inline IntermediateLattice order_params(const LocalModel& model) { return {BigInt(0), model.m, 2 * model.m + 1}; }
inline LatticeHNF order_lattice(const LocalModel& model) { return hnf(model, order_params(model)); }
inline LatticeHNF maximal_lattice() { return LatticeHNF::full(3); }

inline bool admissible(const LocalModel& model, const IntermediateLattice& l) {
    const int m = model.m;
    if (l.i < 0 || l.i > m || l.j < 0 || l.j > 2 * m + 1) return false;
    if (l.r < 0 || l.r >= model.pow(l.j)) return false;
    if (m + l.i + 1 < l.j) return false;
    if (l.r == 0) return true;
    int k = valuation(l.r, model.p);
    return k < l.j && m + k >= l.i + l.j;
}

/// All admissible triples, r reduced modulo p^j.
inline std::vector<IntermediateLattice> enumerate_admissible(const LocalModel& model) {
    std::vector<IntermediateLattice> out;
    for (int j = 0; j <= 2 * model.m + 1; ++j)
        for (int i = 0; i <= model.m; ++i)
            for (BigInt r = 0; r < model.pow(j); ++r) {
                IntermediateLattice l{r, i, j};
                if (admissible(model, l)) out.push_back(l);
            }
    std::sort(out.begin(), out.end());
    return out;
}

/// Isomorphism by solving beta (s r - p^{2i+1} v) = r - s mod p^j over all
/// beta mod p^j with 1 + beta r a unit.
inline bool lattices_isomorphic(const LocalModel& model, const IntermediateLattice& a, const IntermediateLattice& b) {
    if (a.i != b.i || a.j != b.j) return false;
    const BigInt q = model.pow(a.j);
    const BigInt& r = a.r;
    const BigInt& s = b.r;
    const BigInt coeff = mod(s * r - model.pow(2 * a.i + 1) * model.v, q);
    const BigInt rhs = mod(r - s, q);
    for (BigInt beta = 0; beta < q; ++beta) {
        if (mod(1 + beta * r, model.p) == 0) continue;
        if (mod(beta * coeff, q) == rhs) return true;
    }
    return false;
}

/// The three listed criteria, read literally.
inline bool isomorphic_by_rules(const LocalModel& model, const IntermediateLattice& a, const IntermediateLattice& b) {
    if (a.i != b.i || a.j != b.j) return false;
    if (a == b) return true;
    const BigInt& p = model.p;
    const int twoi1 = 2 * a.i + 1;
    if (mod(a.r, p) != 0 && mod(b.r, p) != 0) return true;
    if (a.r == 0 || b.r == 0) {
        const BigInt& nz = a.r == 0 ? b.r : a.r;
        if (nz == 0) return false;
        int k = valuation(nz, p);
        return 1 <= twoi1 && twoi1 <= k && k < a.j;
    }
    int k = std::max(valuation(a.r, p), valuation(b.r, p));
    int l = std::min(valuation(a.r, p), valuation(b.r, p));
    return 1 <= l && l == twoi1 && twoi1 <= k && k < a.j;
}

struct RuleDisagreement {
    IntermediateLattice a, b;
    bool by_congruence = false;
    bool by_rules = false;
};

/// Pairs where the congruence test and the listed criteria differ.
inline std::vector<RuleDisagreement> isomorphism_rule_disagreements(const LocalModel& model) {
    std::vector<RuleDisagreement> out;
    auto all = enumerate_admissible(model);
    for (auto& a : all)
        for (auto& b : all) {
            if (a.i != b.i || a.j != b.j) continue;
            bool c = lattices_isomorphic(model, a, b), r = isomorphic_by_rules(model, a, b);
            if (c != r) out.push_back({a, b, c, r});
        }
    return out;
}

/// One representative per isomorphism class: smallest r within the class.
/// Classification is certified for m <= 1 only.
inline std::vector<IntermediateLattice> enumerate_genus_representatives(const LocalModel& model) {
    if (model.m >= 2) throw Error(Errc::unsupported_m, "isomorphism classification is only supported for m <= 1 (got m = " + std::to_string(model.m) + ")");
    auto all = enumerate_admissible(model);
    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            if (lattices_isomorphic(model, all[a], all[b])) parent[find(b)] = find(a);
    std::map<std::size_t, IntermediateLattice> best;
    for (std::size_t a = 0; a < all.size(); ++a) {
        auto root = find(a);
        auto it = best.find(root);
        if (it == best.end() || all[a].r < it->second.r) best[root] = all[a];
    }
    std::vector<IntermediateLattice> out;
    for (auto& [root, l] : best) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Block triangular form and complementary lattices

/// HNF over the basis (pi e1, e1, e0) of a lattice of p-power index in Lambda_0.
inline LatticeHNF block_triangularize(const LocalModel& model, const IntMatrix& rows) {
    LatticeHNF l(rows);
    BigInt idx = l.index();
    int e = valuation(idx, model.p);
    if (ipow(model.p, static_cast<unsigned>(e)) != idx) throw Error(Errc::invalid_argument, "lattice index " + idx.str() + " is not a power of p");
    return LatticeHNF(stack(rows, IntMatrix::identity(3).scaled(model.pow(e))));
}

/// Images of the defining basis (1, b, b*) or (1, b1, b2) in Lambda_0, exact
/// modulo p^precision.
inline IntMatrix basis_images(const LocalModel& model, int precision) {
    if (!model.family) throw Error(Errc::invalid_argument, "basis images need a family-backed model");
    const BigInt q = model.pow(precision);
    const BigInt half = inv_mod(BigInt(2), q);
    const BigInt pm = model.pow(model.m);
    const BigInt deg = *model.family == Rank3Family::drt ? BigInt(2 * model.u + 1) : BigInt(2 * model.u);
    // b e1 = (p^m pi - 1)/2, since (1 + 2b) e1 = sqrt(+-n) = p^m pi.
    IntMatrix img{{BigInt(0), BigInt(1), BigInt(1)},
                  {mod(pm * half, q), mod(-half, q), deg},
                  {mod(-pm * half, q), mod(-half, q), deg}};
    return img;
}

/// A lattice given by rows over the defining basis, in block triangular HNF.
inline LatticeHNF lattice_from_defining_basis(const LocalModel& model, const IntMatrix& rows) {
    const int precision = 2 * model.m + 2;
    IntMatrix amb = rows * basis_images(model, precision);
    return LatticeHNF(stack(amb, IntMatrix::identity(3).scaled(model.pow(precision))));
}

namespace detail {

inline LatticeHNF complement_at(const LocalModel& model, const LatticeHNF& m, const LatticeHNF& target, int precision) {
    LatticeHNF tk = lattice_sum(target, LatticeHNF(IntMatrix::identity(3).scaled(model.pow(precision))));
    LatticeHNF s = maximal_lattice();
    for (int r = 0; r < 3; ++r) s = preimage(s, model.multiplication_matrix(m.matrix().row(r)), tk);
    return s;
}

}  // namespace detail

/// {M : T} = {x : M x in T}, for M containing 1, at precision p^(2m+2) with a
/// re-check at p^(2m+4).
inline LatticeHNF complementary_lattice(const LocalModel& model, const LatticeHNF& m, const LatticeHNF& target) {
    if (!m.contains(std::vector<BigInt>{0, 1, 1})) throw Error(Errc::invalid_argument, "lattice must contain 1");
    const int k = 2 * model.m + 2;
    LatticeHNF a = detail::complement_at(model, m, target, k);
    LatticeHNF b = detail::complement_at(model, m, target, k + 2);
    if (a != b) throw Error(Errc::precision_unstable, "complementary lattice differs between precisions p^" + std::to_string(k) + " and p^" + std::to_string(k + 2));
    return a;
}

inline LatticeHNF complementary_lattice(const LocalModel& model, const IntermediateLattice& m) {
    return complementary_lattice(model, hnf(model, m), order_lattice(model));
}

inline LatticeHNF multiplier_ring(const LocalModel& model, const LatticeHNF& m) { return complementary_lattice(model, m, m); }

// ---------------------------------------------------------------------------
// Residue cell counts

/// pi^alpha R (+) p^beta Z_p.
inline LatticeHNF box(const LocalModel& model, int alpha, int beta) {
    IntMatrix g{{model.pow(alpha / 2), BigInt(0), BigInt(0)}, {BigInt(0), model.pow((alpha + 1) / 2), BigInt(0)}, {BigInt(0), BigInt(0), model.pow(beta)}};
    return LatticeHNF(g);
}

/// Counts of residues of L modulo pi^A R (+) p^B Z_p, split by the valuations
/// of the two components. Each count is a polynomial in p.
struct CellCounts {
    int quad_precision = 0;  // A, in powers of pi
    int rat_precision = 0;   // B, in powers of p
    std::vector<std::vector<int>> exponent;  // C(alpha, beta) = p^exponent

    /// Residues with v_pi(a) = alpha (alpha = A: a = 0) and v_p(b) = beta (beta = B: b = 0).
    IntPoly exact(int alpha, int beta) const {
        auto c = [&](int a, int b) -> IntPoly {
            if (a > quad_precision || b > rat_precision) return {};
            return IntPoly::monomial(BigInt(1), exponent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        };
        return c(alpha, beta) - c(alpha + 1, beta) - c(alpha, beta + 1) + c(alpha + 1, beta + 1);
    }

    friend bool operator==(const CellCounts& x, const CellCounts& y) {
        return x.quad_precision == y.quad_precision && x.rat_precision == y.rat_precision && x.exponent == y.exponent;
    }
};

inline CellCounts cell_counts(const LocalModel& model, const LatticeHNF& l, int quad_precision, int rat_precision) {
    if (!l.contains(box(model, quad_precision, rat_precision))) throw Error(Errc::invalid_argument, "lattice does not contain the precision box");
    CellCounts out;
    out.quad_precision = quad_precision;
    out.rat_precision = rat_precision;
    out.exponent.assign(static_cast<std::size_t>(quad_precision) + 1, std::vector<int>(static_cast<std::size_t>(rat_precision) + 1, 0));
    for (int a = 0; a <= quad_precision; ++a)
        for (int b = 0; b <= rat_precision; ++b) {
            BigInt idx = intersection(l, box(model, a, b)).index();
            int e = valuation(idx, model.p);
            if (ipow(model.p, static_cast<unsigned>(e)) != idx) throw Error(Errc::invalid_argument, "cell index is not a power of p");
            out.exponent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = quad_precision + rat_precision - e;
        }
    return out;
}

/// Smallest A and B with pi^A R (+) p^B Z_p inside L.
inline std::pair<int, int> natural_precisions(const LocalModel& model, const LatticeHNF& l) {
    const int bound = 2 * (2 * model.m + 1) + 2;
    std::optional<int> a, b;
    for (int x = 0; x <= bound && !a; ++x) {
        std::vector<BigInt> u0{model.pow(x / 2), BigInt(0), BigInt(0)}, u1{BigInt(0), model.pow((x + 1) / 2), BigInt(0)};
        if (l.contains(u0) && l.contains(u1)) a = x;
    }
    for (int x = 0; x <= bound && !b; ++x)
        if (l.contains(std::vector<BigInt>{BigInt(0), BigInt(0), model.pow(x)})) b = x;
    if (!a || !b) throw Error(Errc::depth_exceeded, "no tail containment by depth " + std::to_string(bound));
    return {*a, *b};
}

// ---------------------------------------------------------------------------
// Regions and their integrals

/// One component of a region: either the tail pi^valuation R - {0}, or a
/// multiplicative translate of pi^valuation U^(depth).
struct ComponentCell {
    bool tail = false;
    int valuation = 0;
    int depth = 0;

    friend bool operator==(const ComponentCell& a, const ComponentCell& b) {
        return a.tail == b.tail && a.valuation == b.valuation && a.depth == b.depth;
    }
    friend bool operator<(const ComponentCell& a, const ComponentCell& b) {
        return std::tie(a.tail, a.valuation, a.depth) < std::tie(b.tail, b.valuation, b.depth);
    }
};

/// `count` disjoint translates of quad (+) rat, count a polynomial in p.
struct Region {
    ComponentCell quad;
    ComponentCell rat;
    IntPoly count;
};

struct DomainDecomposition {
    CellCounts cells;
    std::vector<Region> regions;
};

namespace detail {

/// Measure weight of one coset: 1 / (p^(depth-1) (p-1)).
inline PExpr coset_measure(int depth) { return PExpr(1) / (PExpr::p_pow(depth - 1) * (PExpr::p() - PExpr(1))); }

/// Integral of the region, written over (1 - t)^2.
inline Polynomial<PExpr> region_numerator(const Region& r) {
    PExpr w = PExpr(RatPoly(to_rational(r.count)), RatPoly(Rational(1)));
    int tails = 0;
    for (const ComponentCell* c : {&r.quad, &r.rat}) {
        if (c->tail)
            ++tails;
        else
            w *= coset_measure(c->depth);
    }
    Polynomial<PExpr> out = Polynomial<PExpr>::monomial(w, r.quad.valuation + r.rat.valuation);
    return out * one_minus_t_pow<PExpr>(2 - tails);
}

inline std::vector<Region> regions_from_cells(const CellCounts& c) {
    std::vector<Region> out;
    for (int a = 0; a <= c.quad_precision; ++a)
        for (int b = 0; b <= c.rat_precision; ++b) {
            IntPoly n = c.exact(a, b);
            if (n.is_zero()) continue;
            ComponentCell q{a == c.quad_precision, a, c.quad_precision - a};
            ComponentCell z{b == c.rat_precision, b, c.rat_precision - b};
            if (q.tail) q.depth = 0;
            if (z.tail) z.depth = 0;
            out.push_back({q, z, n});
        }
    return out;
}

/// Sum of the region integrals over (1 - t)^2. Accumulated with integer
/// polynomial coefficients over the common denominator p^(A+B) (p-1)^2.
inline Polynomial<PExpr> cells_numerator(const CellCounts& c) {
    const IntPoly P = IntPoly::x();
    const IntPoly pm1 = P - IntPoly(BigInt(1));
    auto scale = [&](const ComponentCell& cell, int precision) {
        return cell.tail ? IntPoly::monomial(BigInt(1), precision) * pm1 : IntPoly::monomial(BigInt(1), precision - cell.depth + 1);
    };
    std::vector<IntPoly> acc;
    for (auto& r : regions_from_cells(c)) {
        IntPoly w = r.count * scale(r.quad, c.quad_precision) * scale(r.rat, c.rat_precision);
        int tails = (r.quad.tail ? 1 : 0) + (r.rat.tail ? 1 : 0);
        auto shape = one_minus_t_pow<BigInt>(2 - tails);
        const int base = r.quad.valuation + r.rat.valuation;
        for (int k = 0; k <= shape.degree(); ++k) {
            std::size_t at = static_cast<std::size_t>(base + k);
            if (acc.size() <= at) acc.resize(at + 1);
            acc[at] = acc[at] + w * IntPoly(shape[k]);
        }
    }
    const RatPoly denom = to_rational(IntPoly::monomial(BigInt(1), c.quad_precision + c.rat_precision) * pm1 * pm1);
    std::vector<PExpr> coeffs;
    for (auto& a : acc) coeffs.push_back(a.is_zero() ? PExpr(0) : PExpr(to_rational(a), denom));
    return Polynomial<PExpr>(std::move(coeffs));
}

}  // namespace detail

/// Integral of one component cell over a local field with residue field F_p.
inline SymbolicRationalFunction component_integral(const ComponentCell& c) {
    if (c.tail) return {Polynomial<PExpr>::monomial(PExpr(1), c.valuation), one_minus_t_pow<BigInt>(1)};
    return {Polynomial<PExpr>::monomial(detail::coset_measure(c.depth), c.valuation), IntPoly(BigInt(1))};
}

/// Integral of ||x||^s over the region (all `count` translates).
inline SymbolicRationalFunction region_integral(const Region& r) {
    int tails = (r.quad.tail ? 1 : 0) + (r.rat.tail ? 1 : 0);
    Polynomial<PExpr> num = detail::region_numerator(r);
    // region_numerator is over (1-t)^2; cancel the (1-t) factors it added.
    num = num.exact_div(one_minus_t_pow<PExpr>(2 - tails));
    return {num, one_minus_t_pow<BigInt>(tails)};
}

/// Disjoint regions covering L intersected with the units of A.
inline DomainDecomposition decompose_domain(const LocalModel& model, const LatticeHNF& l) {
    if (!maximal_lattice().contains(l)) throw Error(Errc::invalid_argument, "lattice is not inside Lambda_0");
    auto [a, b] = natural_precisions(model, l);
    DomainDecomposition d;
    d.cells = cell_counts(model, l, a, b);
    d.regions = detail::regions_from_cells(d.cells);
    return d;
}

struct DomainCertificate {
    int precision = 0;
    BigInt lattice_residues;  // |L / p^K Lambda_0|
    BigInt region_residues;   // sum over regions of residues covered
    bool disjoint = false;
    bool ok() const { return disjoint && lattice_residues == region_residues; }
};

/// Residue count check of a decomposition modulo p^K Lambda_0.
inline DomainCertificate certify_domain(const LocalModel& model, const LatticeHNF& l, const DomainDecomposition& d, int precision) {
    DomainCertificate c;
    c.precision = precision;
    const int A = d.cells.quad_precision, B = d.cells.rat_precision;
    if (A > 2 * precision || B > precision) throw Error(Errc::depth_exceeded, "certificate precision below the decomposition depth");
    c.lattice_residues = model.pow(3 * precision) / l.index();
    c.region_residues = 0;
    const BigInt per = model.pow(2 * precision - A) * model.pow(precision - B);
    for (auto& r : d.regions) c.region_residues += r.count.eval(model.p) * per;
    c.disjoint = true;
    for (std::size_t i = 0; i < d.regions.size(); ++i)
        for (std::size_t j = i + 1; j < d.regions.size(); ++j)
            if (d.regions[i].quad == d.regions[j].quad && d.regions[i].rat == d.regions[j].rat) c.disjoint = false;
    return c;
}

/// Integral over L intersected with the units of A, written over (1 - t)^2;
/// computed at the natural precision and checked against uniform precisions
/// p^(2m+2) and p^(2m+4).
inline Polynomial<PExpr> domain_integral(const LocalModel& model, const LatticeHNF& l) {
    Polynomial<PExpr> main = detail::cells_numerator(decompose_domain(model, l).cells);
    for (int k : {2 * model.m + 2, 2 * model.m + 4}) {
        if (!l.contains(box(model, 2 * k, k))) throw Error(Errc::depth_exceeded, "lattice does not contain p^" + std::to_string(k) + " Lambda_0");
        if (detail::cells_numerator(cell_counts(model, l, 2 * k, k)) != main)
            throw Error(Errc::precision_unstable, "domain integral differs at precision p^" + std::to_string(k));
    }
    return main;
}

// ---------------------------------------------------------------------------
// Automorphism measures and genus zeta functions

namespace detail {

/// Units of L modulo p^k Lambda_0, from the four cells around valuation (0, 0).
inline IntPoly unit_residues(const LocalModel& model, const LatticeHNF& l, int k) {
    if (!l.contains(box(model, 2 * k, k))) throw Error(Errc::depth_exceeded, "lattice does not contain p^" + std::to_string(k) + " Lambda_0");
    IntPoly acc;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            BigInt idx = intersection(l, box(model, a, b)).index();
            int e = 3 * k - valuation(idx, model.p);
            IntPoly term = IntPoly::monomial(BigInt(1), e);
            acc = (a + b) % 2 == 0 ? acc + term : acc - term;
        }
    return acc;
}

inline IntPoly poly_quotient(const IntPoly& a, const IntPoly& b, const std::string& what) {
    PExpr q = PExpr(to_rational(a), RatPoly(Rational(1))) / PExpr(to_rational(b), RatPoly(Rational(1)));
    if (!q.is_polynomial()) throw Error(Errc::non_integral_quotient, what + " is not a polynomial in p");
    return q.to_int_poly();
}

}  // namespace detail

/// [Lambda_0^x : {M:M}^x] as a polynomial in p, from unit counts modulo
/// p^K Lambda_0 at K = 2m+2, re-checked at K = 2m+4.
inline IntPoly automorphism_measure_inverse(const LocalModel& model, const LatticeHNF& m) {
    LatticeHNF o = multiplier_ring(model, m);
    std::optional<IntPoly> first;
    for (int k : {2 * model.m + 2, 2 * model.m + 4}) {
        IntPoly q = detail::poly_quotient(detail::unit_residues(model, maximal_lattice(), k), detail::unit_residues(model, o, k), "automorphism index");
        if (first && *first != q) throw Error(Errc::precision_unstable, "unit index differs between precisions");
        first = q;
    }
    return *first;
}

inline IntPoly automorphism_measure_inverse(const LocalModel& model, const IntermediateLattice& m) {
    return automorphism_measure_inverse(model, hnf(model, m));
}

struct GenusEntry {
    IntermediateLattice lattice;
    int index_exponent = 0;  // [M : Lambda] = p^index_exponent
    LatticeHNF complement;
    LatticeHNF multiplier;
    IntPoly mu_inv;
    DomainDecomposition domain;
    SymbolicRationalFunction zeta;
};

inline GenusEntry genus_zeta(const LocalModel& model, const IntermediateLattice& m) {
    if (!admissible(model, m)) throw Error(Errc::invalid_argument, m.name() + " is not admissible");
    GenusEntry g;
    g.lattice = m;
    LatticeHNF mh = hnf(model, m);
    LatticeHNF lam = order_lattice(model);
    g.index_exponent = valuation(lam.index(), model.p) - valuation(mh.index(), model.p);
    g.complement = complementary_lattice(model, mh, lam);
    g.multiplier = multiplier_ring(model, mh);
    g.mu_inv = automorphism_measure_inverse(model, mh);
    g.domain = decompose_domain(model, g.complement);
    Polynomial<PExpr> integral = domain_integral(model, g.complement);
    const int c = g.index_exponent;
    std::vector<PExpr> coeffs;
    for (int k = 0; k <= integral.degree(); ++k) {
        if (k < c) {
            if (!integral[k].is_zero()) throw Error(Errc::invalid_argument, "genus integral has terms below t^" + std::to_string(c));
            continue;
        }
        PExpr v = integral[k] * PExpr(to_rational(g.mu_inv), RatPoly(Rational(1)));
        if (!v.is_polynomial()) throw Error(Errc::non_integral_quotient, "genus zeta coefficient " + v.to_string() + " is not a polynomial in p");
        coeffs.push_back(v);
    }
    g.zeta = {Polynomial<PExpr>(std::move(coeffs)), one_minus_t_pow<BigInt>(2)};
    return g;
}

struct GenusReport {
    LocalModel model;
    std::vector<GenusEntry> entries;
    SymbolicRationalFunction total;
};

inline GenusReport genus_report(const LocalModel& model) {
    GenusReport rep;
    rep.model = model;
    Polynomial<PExpr> acc;
    for (auto& m : enumerate_genus_representatives(model)) {
        rep.entries.push_back(genus_zeta(model, m));
        acc += rep.entries.back().zeta.numerator;
    }
    rep.total = {acc, one_minus_t_pow<BigInt>(2)};
    return rep;
}

inline LocalRationalFunction total_local_zeta(const LocalModel& model) { return genus_report(model).total.at(model.p); }

/// Reference models used to certify that counts are uniform in p.
inline std::vector<LocalModel> reference_models(int m) {
    std::vector<LocalModel> out;
    for (long p : {3, 5, 7})
        for (long v : {1, -1, 2}) out.emplace_back(BigInt(p), m, BigInt(v));
    return out;
}

/// The report with coefficients as polynomials in p: computed on several
/// (p, v) and required to agree exactly.
inline GenusReport symbolic_genus_report(int m) {
    auto models = reference_models(m);
    GenusReport first = genus_report(models.front());
    for (std::size_t i = 1; i < models.size(); ++i) {
        GenusReport other = genus_report(models[i]);
        bool same = other.entries.size() == first.entries.size() && other.total == first.total;
        for (std::size_t e = 0; same && e < first.entries.size(); ++e) {
            const auto &x = first.entries[e], &y = other.entries[e];
            same = x.lattice == y.lattice && x.index_exponent == y.index_exponent && x.mu_inv == y.mu_inv && x.zeta == y.zeta;
        }
        if (!same)
            throw Error(Errc::precision_unstable, "genus data at p = " + models[i].p.str() + ", v = " + models[i].v.str() + " is not uniform in p");
    }
    return first;
}

}  // namespace tazeta
