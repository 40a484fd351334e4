#pragma once

#include <string>
#include <vector>

#include "polymat/ideal.hpp"

namespace polymat {

struct HomologyBudget {
    std::size_t max_generators = 20;   // exhaustive lcm closure guard
    std::size_t max_cost = 2000000;    // sum over lattice of 2^|supp|
};

/// All least common multiples of nonempty subsets of G(I), deduplicated and
/// in canonical order (computed as the join closure of the generators).
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const HomologyBudget& budget = {});

struct BettiEntry {
    int i = 0;       // homological index, Betti number of the ideal I
    Monomial a;      // multidegree
    int rank = 0;
};

/// Multigraded Betti numbers of I over the rationals, together with
/// pd(R/I) = 1 + max{i : beta_{i,a}(I) != 0} and depth R/I = n - pd
/// (Auslander–Buchsbaum).
struct BettiTable {
    int n = 0;
    std::vector<BettiEntry> entries;
    int pd = 0;     // projective dimension of R/I
    int depth = 0;  // n - pd
};

/// beta_{i,a}(I) = rank of the reduced homology in degree i-1 of the upper
/// Koszul complex at a: the simplicial complex of square-free tau <= a with
/// x^{a-tau} in I. Boundary ranks are computed by exact fraction-free
/// elimination.
BettiTable betti_table(const MonomialIdeal& ideal, const HomologyBudget& budget = {});

int depth_oracle(const MonomialIdeal& ideal, const HomologyBudget& budget = {});

/// {"pd": int, "depth": int, "betti": [{"i": int, "a": [..], "rank": int}]}
std::string betti_json(const BettiTable& table);

}  // namespace polymat
