#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polymat/ideal.hpp"

namespace polymat {

/// An irreducible monomial ideal (x_{i1}^{a1}, ..., x_{ik}^{ak}), stored as
/// its variable -> exponent bounds.
struct IrreducibleComponent {
    int n = 0;
    std::vector<std::pair<int, int>> bounds;  // (0-based var, exponent), sorted by var

    MonomialIdeal to_ideal() const;
    std::uint64_t support() const;
    bool contains(const IrreducibleComponent& other) const;  // other's ideal ⊆ this ideal
    bool operator==(const IrreducibleComponent&) const = default;
};

struct AssociatedPrimes {
    int n = 0;
    std::vector<std::uint64_t> primes;  // variable masks, sorted ascending
    bool contains_maximal = false;

    bool contains(std::uint64_t mask) const;
    bool operator==(const AssociatedPrimes&) const = default;
};

struct DecompositionBudget {
    std::size_t max_nodes = 200000;    // recursion nodes per top-level call
    std::size_t memo_capacity = 100000;
};

/// Irredundant irreducible decomposition via recursive generator splitting:
/// any generator with two or more support variables splits into its highest
/// variable power versus the rest; redundant components are pruned by
/// pairwise containment after expansion. Decompositions of intermediate
/// ideals are memoized process-wide (thread safe).
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            const DecompositionBudget& budget = {});

/// Ass(R/I) as the radicals of the irredundant irreducible components.
AssociatedPrimes associated_primes(const MonomialIdeal& ideal,
                                   const DecompositionBudget& budget = {});

/// Brute-force cross-check: p in Ass(R/I) iff p = (I : u) for a monomial u
/// dividing lcm(G(I)). Throws BudgetExceeded when the divisor count exceeds
/// the budget.
AssociatedPrimes ass_colon_oracle(const MonomialIdeal& ideal,
                                  std::size_t divisor_budget = 200000);

/// Fast path for polymatroidal ideals: p_A is associated iff the monomial
/// localization at A has depth 0 over its support ring, detected through the
/// linear-quotients q-value. Rejects non-polymatroidal input.
AssociatedPrimes ass_polymatroidal_fast(const MonomialIdeal& ideal);

/// {"components":[{"bounds":{"1":2,...}},...], "ass":[[1,2],...]}
std::string decomposition_json(const std::vector<IrreducibleComponent>& components,
                               const AssociatedPrimes& ass);

}  // namespace polymat
