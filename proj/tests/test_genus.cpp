#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace tazeta;
using test::M;
using test::pt_sum;
using test::span;

namespace {

// Brute-force helpers in machine integers over the basis (pi e1, e1, e0),
// pi^2 = p v.

struct Vec {
    long x, y, z;
};

long lpow(long p, int e) {
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

int lval(long a, long p) {
    if (a == 0) return 1 << 20;
    int k = 0;
    while (a % p == 0) {
        a /= p;
        ++k;
    }
    return k;
}

/// Membership in a lattice given by its upper-triangular HNF rows.
bool member(const LatticeHNF& l, Vec w) {
    long h[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = static_cast<long>(l.matrix()(i, j));
    long v[3] = {w.x, w.y, w.z};
    for (int c = 0; c < 3; ++c) {
        if (v[c] % h[c][c] != 0) return false;
        long q = v[c] / h[c][c];
        for (int j = c; j < 3; ++j) v[j] -= q * h[c][j];
    }
    return true;
}

Vec mul(const LocalModel& m, Vec a, Vec b) {
    long p = static_cast<long>(m.p), v = static_cast<long>(m.v);
    return {a.x * b.y + a.y * b.x, a.y * b.y + p * v * a.x * b.x, a.z * b.z};
}

std::vector<Vec> rows(const LatticeHNF& l) {
    std::vector<Vec> out;
    for (int i = 0; i < 3; ++i)
        out.push_back({static_cast<long>(l.matrix()(i, 0)), static_cast<long>(l.matrix()(i, 1)), static_cast<long>(l.matrix()(i, 2))});
    return out;
}

/// Calls f on every residue of Lambda_0 modulo p^k Lambda_0.
template <class F>
void for_each_residue(long q, F&& f) {
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y)
            for (long z = 0; z < q; ++z) f(Vec{x, y, z});
}

/// {x in Lambda_0 : x M in T} found by enumerating residues mod p^k.
std::vector<Vec> brute_colon(const LocalModel& model, const LatticeHNF& m, const LatticeHNF& t, int k) {
    const long q = lpow(static_cast<long>(model.p), k);
    auto gens = rows(m);
    std::vector<Vec> out;
    for_each_residue(q, [&](Vec x) {
        for (auto& g : gens)
            if (!member(t, mul(model, x, g))) return;
        out.push_back(x);
    });
    return out;
}

std::vector<LocalModel> models(int m, std::initializer_list<long> ps) {
    std::vector<LocalModel> out;
    for (long p : ps)
        for (long v : {1, -1, 2}) out.emplace_back(BigInt(p), m, BigInt(v));
    return out;
}

}  // namespace

TEST(LocalModel, FromFamilies) {
    LocalModel a = local_model(Rank3Family::drt, 6, BigInt(3));
    EXPECT_EQ(a.m, 1);
    EXPECT_EQ(a.v, BigInt(-1));
    LocalModel b = local_model(Rank3Family::conference, 3, BigInt(13));
    EXPECT_EQ(b.m, 0);
    EXPECT_EQ(b.v, BigInt(1));
    LocalModel c = local_model(Rank3Family::drt, 1, BigInt(7));
    EXPECT_EQ(c.v, BigInt(-1));
    LocalModel d = local_model(Rank3Family::drt, 3, BigInt(3));  // n = 15
    EXPECT_EQ(d.m, 0);
    EXPECT_EQ(d.v, BigInt(-5));
}

TEST(LocalModel, UnsupportedPrimes) {
    auto code = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::invalid_argument;
    };
    EXPECT_EQ(code([] { local_model(Rank3Family::drt, 1, BigInt(3)); }), Errc::unsupported_case);
    EXPECT_EQ(code([] { local_model(Rank3Family::conference, 11, BigInt(3)); }), Errc::unsupported_case);  // n = 45
    EXPECT_THROW(LocalModel(BigInt(2), 0, BigInt(1)), Error);
    EXPECT_THROW(LocalModel(BigInt(3), 0, BigInt(3)), Error);
}

TEST(DefiningBasis, ImageOfZBIsTheOrderLattice) {
    for (auto [fam, u, p] : std::vector<std::tuple<Rank3Family, long, long>>{
             {Rank3Family::drt, 6, 3}, {Rank3Family::drt, 1, 7}, {Rank3Family::drt, 3, 5}, {Rank3Family::conference, 3, 13}, {Rank3Family::conference, 1, 5}}) {
        LocalModel model = local_model(fam, u, BigInt(p));
        EXPECT_EQ(lattice_from_defining_basis(model, IntMatrix::identity(3)), order_lattice(model)) << p;
    }
}

TEST(DefiningBasis, ImagesMultiplyLikeTheTable) {
    // b_i b_j = sum lambda_ijk b_k holds for the images modulo p^(2m+2).
    for (auto [fam, u, p] : std::vector<std::tuple<Rank3Family, long, long>>{{Rank3Family::drt, 6, 3}, {Rank3Family::conference, 3, 13}}) {
        LocalModel model = local_model(fam, u, BigInt(p));
        TableAlgebra t = fam == Rank3Family::drt ? drt_algebra(u) : conference_algebra(u);
        const int k = 2 * model.m + 2;
        IntMatrix img = basis_images(model, k);
        LatticeHNF fine(IntMatrix::identity(3).scaled(model.pow(k)));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                auto lhs = model.multiply(img.row(i), img.row(j));
                for (int c = 0; c < 3; ++c) {
                    BigInt s = 0;
                    for (int l = 0; l < 3; ++l) s += t.lambda(i, j, l) * img(l, c);
                    lhs[static_cast<std::size_t>(c)] -= s;
                }
                EXPECT_TRUE(fine.contains(lhs)) << i << j;
            }
    }
}

TEST(Classification, IsomorphismIsAnEquivalenceRelation) {
    for (int m : {0, 1})
        for (auto& model : models(m, {3, 5})) {
            auto all = enumerate_admissible(model);
            const std::size_t n = all.size();
            std::vector<std::vector<char>> rel(n, std::vector<char>(n));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) rel[a][b] = lattices_isomorphic(model, all[a], all[b]);
            for (std::size_t a = 0; a < n; ++a) {
                ASSERT_TRUE(rel[a][a]) << all[a].name();
                for (std::size_t b = 0; b < n; ++b) {
                    ASSERT_EQ(rel[a][b], rel[b][a]) << all[a].name() << " " << all[b].name();
                    if (!rel[a][b]) continue;
                    for (std::size_t c = 0; c < n; ++c) {
                        if (!rel[b][c]) continue;
                        ASSERT_TRUE(rel[a][c]) << all[a].name() << " " << all[b].name() << " " << all[c].name();
                    }
                }
            }
        }
}

TEST(Classification, ListedCriteriaAgreeWithCongruenceTest) {
    for (int m : {0, 1})
        for (auto& model : models(m, {3, 5, 7})) EXPECT_TRUE(isomorphism_rule_disagreements(model).empty()) << "p=" << model.p << " v=" << model.v;
}

TEST(Classification, Representatives) {
    std::vector<std::string> cube;
    for (auto& c : test::cube_cases()) cube.push_back(c.lattice.name());
    std::sort(cube.begin(), cube.end());
    for (auto& model : models(1, {3, 5, 7})) {
        std::vector<std::string> got;
        for (auto& l : enumerate_genus_representatives(model)) got.push_back(l.name());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, cube);
    }
    for (auto& model : models(0, {3, 5, 7})) {
        auto reps = enumerate_genus_representatives(model);
        ASSERT_EQ(reps.size(), 2u);
        EXPECT_EQ(reps[0], M(0, 0, 0));
        EXPECT_EQ(reps[1], M(0, 0, 1));
    }
}

TEST(Classification, HigherValuationUnsupported) {
    try {
        enumerate_genus_representatives(LocalModel(BigInt(3), 2, BigInt(1)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unsupported_m);
        EXPECT_TRUE(e.is_unsupported());
    }
}

TEST(Complements, MatchTableOne) {
    for (auto& model : models(1, {3, 5, 7})) {
        long p = static_cast<long>(model.p), v = static_cast<long>(model.v);
        for (auto& c : test::cube_cases())
            EXPECT_EQ(complementary_lattice(model, c.lattice), test::table_complement(c.lattice, p, v)) << c.lattice.name() << " p=" << p << " v=" << v;
    }
}

TEST(Complements, BruteForceAtThree) {
    for (auto& model : models(1, {3})) {
        LatticeHNF lam = order_lattice(model);
        for (auto& c : test::cube_cases()) {
            LatticeHNF comp = complementary_lattice(model, c.lattice);
            auto found = brute_colon(model, hnf(model, c.lattice), lam, 3);
            EXPECT_EQ(BigInt(found.size()) * comp.index(), BigInt(lpow(3, 9))) << c.lattice.name();
            for (auto& x : found) EXPECT_TRUE(member(comp, x));
        }
    }
}

TEST(Complements, MultiplierRings) {
    for (auto& model : models(1, {3, 5})) {
        EXPECT_EQ(multiplier_ring(model, hnf(model, M(0, 0, 2))), hnf(model, M(0, 1, 2)));
        EXPECT_EQ(multiplier_ring(model, hnf(model, M(1, 0, 1))), hnf(model, M(0, 1, 1)));
        for (auto l : {M(0, 0, 0), M(0, 1, 0), M(0, 0, 1), M(0, 1, 1), M(0, 1, 2), M(0, 1, 3)})
            EXPECT_EQ(multiplier_ring(model, hnf(model, l)), hnf(model, l)) << l.name();
    }
}

TEST(Complements, MultiplierRingsBruteForceAtThree) {
    for (auto& model : models(1, {3})) {
        for (auto& c : test::cube_cases()) {
            LatticeHNF l = hnf(model, c.lattice);
            LatticeHNF o = multiplier_ring(model, l);
            auto found = brute_colon(model, l, l, 3);
            EXPECT_EQ(BigInt(found.size()) * o.index(), BigInt(lpow(3, 9))) << c.lattice.name();
            for (auto& x : found) EXPECT_TRUE(member(o, x));
        }
    }
}

TEST(Automorphisms, IndexListAtSmallPrimes) {
    for (auto& model : models(1, {3, 5})) {
        for (auto& c : test::cube_cases()) EXPECT_EQ(automorphism_measure_inverse(model, c.lattice), test::listed_mu_inv(c.lattice)) << c.lattice.name();
    }
    for (auto& model : models(0, {3, 5})) {
        EXPECT_EQ(automorphism_measure_inverse(model, M(0, 0, 0)), IntPoly(BigInt(1)));
        EXPECT_EQ(automorphism_measure_inverse(model, M(0, 0, 1)), IntPoly(test::ints({-1, 1})));
    }
}

TEST(Automorphisms, UnitCountBruteForceAtThree) {
    // [Lambda_0^x : O^x] = |units of Lambda_0 / 27| / |units of O / 27|.
    for (auto& model : models(1, {3})) {
        for (auto& c : test::cube_cases()) {
            LatticeHNF o = multiplier_ring(model, hnf(model, c.lattice));
            long all = 0, in_o = 0;
            for_each_residue(27, [&](Vec x) {
                if (x.y % 3 == 0 || x.z % 3 == 0) return;
                ++all;
                if (member(o, x)) ++in_o;
            });
            ASSERT_EQ(all % in_o, 0);
            EXPECT_EQ(BigInt(all / in_o), automorphism_measure_inverse(model, c.lattice).eval(BigInt(3))) << c.lattice.name();
        }
    }
}

TEST(Cells, BruteForceResidueCountsAtThree) {
    for (int m : {0, 1})
        for (auto& model : models(m, {3})) {
            const long p = 3;
            for (auto& l : enumerate_genus_representatives(model)) {
                LatticeHNF lat = hnf(model, l);
                auto [na, nb] = natural_precisions(model, lat);
                const int k = 2 * m + 2;
                for (auto [A, B] : std::vector<std::pair<int, int>>{{na, nb}, {2 * k, k}}) {
                    CellCounts cells = cell_counts(model, lat, A, B);
                    std::map<std::pair<int, int>, long> hist;
                    for (long x = 0; x < lpow(p, A / 2); ++x)
                        for (long y = 0; y < lpow(p, (A + 1) / 2); ++y)
                            for (long z = 0; z < lpow(p, B); ++z) {
                                if (!member(lat, {x, y, z})) continue;
                                int a = std::min({2 * lval(y, p), 2 * lval(x, p) + 1, A});
                                int b = std::min(lval(z, p), B);
                                ++hist[{a, b}];
                            }
                    for (int a = 0; a <= A; ++a)
                        for (int b = 0; b <= B; ++b)
                            EXPECT_EQ(cells.exact(a, b).eval(BigInt(p)), BigInt(hist[{a, b}])) << l.name() << " A=" << A << " B=" << B << " cell " << a << "," << b;
                }
            }
        }
}

TEST(Cells, NaturalPrecisions) {
    LocalModel model(BigInt(5), 1, BigInt(2));
    EXPECT_EQ(natural_precisions(model, hnf(model, M(0, 1, 0))), std::make_pair(2, 0));
    EXPECT_EQ(natural_precisions(model, complementary_lattice(model, M(0, 1, 0))), std::make_pair(5, 3));
    EXPECT_EQ(natural_precisions(model, maximal_lattice()), std::make_pair(0, 0));
    EXPECT_EQ(natural_precisions(model, order_lattice(model)), std::make_pair(5, 3));
}

TEST(Domains, CertificatesAtBothPrecisions) {
    for (int m : {0, 1})
        for (auto& model : models(m, {3, 5})) {
            for (auto& l : enumerate_genus_representatives(model)) {
                LatticeHNF lat = complementary_lattice(model, l);
                DomainDecomposition nat = decompose_domain(model, lat);
                for (int k : {2 * m + 2, 2 * m + 4}) {
                    auto c = certify_domain(model, lat, nat, k);
                    EXPECT_TRUE(c.ok()) << l.name() << " K=" << k << ": " << c.lattice_residues << " vs " << c.region_residues;
                    DomainDecomposition uni;
                    uni.cells = cell_counts(model, lat, 2 * k, k);
                    uni.regions = detail::regions_from_cells(uni.cells);
                    EXPECT_TRUE(certify_domain(model, lat, uni, k).ok()) << l.name() << " uniform K=" << k;
                }
            }
        }
}

TEST(Domains, UnitMeasureIsOne) {
    for (auto& model : models(1, {3, 5}))
        for (auto [A, B] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {4, 2}, {8, 4}}) {
            CellCounts c = cell_counts(model, maximal_lattice(), A, B);
            PExpr total(0);
            for (auto& r : detail::regions_from_cells(c)) {
                if (r.quad.valuation != 0 || r.rat.valuation != 0) continue;
                ASSERT_FALSE(r.quad.tail || r.rat.tail);
                total += PExpr(to_rational(r.count), RatPoly(Rational(1))) * detail::coset_measure(r.quad.depth) * detail::coset_measure(r.rat.depth);
            }
            EXPECT_EQ(total, PExpr(1)) << "A=" << A << " B=" << B;
        }
}

TEST(Domains, MaximalOrderIntegral) {
    LocalModel model(BigInt(7), 1, BigInt(-1));
    EXPECT_EQ(domain_integral(model, maximal_lattice()), Polynomial<PExpr>(PExpr(1)));
}

TEST(Domains, RegionsOfM010) {
    // (p - 1) translates of pi^3 U^(2) x p^3 Z_p, plus pi^5 R x p^3 Z_p.
    for (auto& model : models(1, {3, 5})) {
        DomainDecomposition d = decompose_domain(model, complementary_lattice(model, M(0, 1, 0)));
        ASSERT_EQ(d.regions.size(), 2u);
        const Region& a = d.regions[0];
        const Region& b = d.regions[1];
        EXPECT_EQ(a.quad, (ComponentCell{false, 3, 2}));
        EXPECT_EQ(a.rat, (ComponentCell{true, 3, 0}));
        EXPECT_EQ(a.count, IntPoly(test::ints({-1, 1})));
        EXPECT_EQ(b.quad, (ComponentCell{true, 5, 0}));
        EXPECT_EQ(b.rat, (ComponentCell{true, 3, 0}));
        EXPECT_EQ(b.count, IntPoly(BigInt(1)));
        auto ia = region_integral(a);
        // p^(-6s) / p * zeta
        EXPECT_EQ(ia.numerator, Polynomial<PExpr>::monomial(PExpr::p_pow(-1), 6));
        EXPECT_EQ(ia.denominator, one_minus_t_pow<BigInt>(1));
    }
}

TEST(Domains, SmallIntegrals) {
    auto tail = component_integral({true, 3, 0});
    EXPECT_EQ(tail.numerator, Polynomial<PExpr>::monomial(PExpr(1), 3));
    EXPECT_EQ(tail.denominator, one_minus_t_pow<BigInt>(1));
    auto unit = component_integral({false, 2, 3});
    EXPECT_EQ(unit.numerator, Polynomial<PExpr>::monomial(PExpr(1) / (PExpr::p_pow(2) * (PExpr::p() - PExpr(1))), 2));
}

TEST(GenusZeta, CubeCaseSymbolic) {
    GenusReport rep = symbolic_genus_report(1);
    ASSERT_EQ(rep.entries.size(), 8u);
    for (auto& c : test::cube_cases()) {
        auto it = std::find_if(rep.entries.begin(), rep.entries.end(), [&](const GenusEntry& e) { return e.lattice == c.lattice; });
        ASSERT_NE(it, rep.entries.end()) << c.lattice.name();
        EXPECT_EQ(it->index_exponent, c.index_exponent) << c.lattice.name();
        EXPECT_EQ(it->mu_inv, test::listed_mu_inv(c.lattice)) << c.lattice.name();
        EXPECT_EQ(it->zeta.numerator, c.numerator) << c.lattice.name() << ": " << it->zeta.to_string();
        EXPECT_EQ(it->zeta.denominator, one_minus_t_pow<BigInt>(2));
    }
    EXPECT_EQ(rep.total, closed_form_factor_symbolic(ValuationCase::v3));
}

TEST(GenusZeta, SimpleCaseSymbolic) {
    GenusReport rep = symbolic_genus_report(0);
    ASSERT_EQ(rep.entries.size(), 2u);
    EXPECT_EQ(rep.entries[0].zeta.numerator, pt_sum({{1, 0, 1}}));
    EXPECT_EQ(rep.entries[1].zeta.numerator, pt_sum({{1, 0, 0}, {-2, 0, 1}, {1, 1, 2}}));
    EXPECT_EQ(rep.total, closed_form_factor_symbolic(ValuationCase::v1));
}

TEST(GenusZeta, TotalsAtConcretePrimes) {
    for (long p : {3, 5, 7, 11, 13})
        for (long v : {1, -1, 2}) {
            EXPECT_TRUE(total_local_zeta(LocalModel(BigInt(p), 0, BigInt(v))).equivalent(closed_form_factor(ValuationCase::v1, BigInt(p))));
            EXPECT_TRUE(total_local_zeta(LocalModel(BigInt(p), 1, BigInt(v))).equivalent(closed_form_factor(ValuationCase::v3, BigInt(p))));
        }
}

TEST(GenusZeta, FamilyModelMatchesOracle) {
    LocalModel model = local_model(Rank3Family::drt, 6, BigInt(3));
    auto counts = count_ideals_at_prime(drt_algebra(6), BigInt(3), 6);
    EXPECT_EQ(total_local_zeta(model).expand(6), counts);
}
