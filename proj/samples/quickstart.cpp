// Counts ideals of ZB for the Ising fusion ring, rebuilds the same numbers
// from Euler factors, and prints the local genus report for n = 27 at p = 3.

#include <iostream>

#include "tazeta/tazeta.hpp"

using namespace tazeta;

int main() {
    TableAlgebra ising = checked(fusion_algebra("ising"));
    RationalDecomposition d = decompose(ising);
    MaximalOrder mo = maximal_order(ising, d);
    std::cout << "conductor " << mo.conductor << ", index " << mo.index << "\n";

    DirichletSeries oracle = count_ideals(ising, 32);
    DirichletSeries euler = assemble_global(d, mo.bad_primes, fusion_exceptional_factors("ising", d), 32);
    for (int n = 1; n <= 32; ++n) std::cout << n << "\t" << oracle[n] << "\t" << euler[n] << "\n";

    LocalModel model = local_model(Rank3Family::drt, 6, BigInt(3));
    GenusReport rep = genus_report(model);
    for (auto& g : rep.entries) std::cout << g.lattice.name() << "\t" << g.mu_inv.eval(model.p) << "\t" << g.zeta.at(model.p).to_string() << "\n";
    std::cout << "total\t" << rep.total.at(model.p).to_string() << "\n";
}
