#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polymat/ideal.hpp"

namespace polymat {

/// Parameters for an ideal of Veronese type I_(d; a1..an): all monomials of
/// degree d whose j-th exponent is at most a_j. Caps follow the ascending
/// indexing 1 <= a_1 <= ... <= a_n <= d.
struct VeroneseSpec {
    int n = 0;
    int d = 0;
    std::vector<int> caps;

    void validate() const;
};

MonomialIdeal veronese_type(const VeroneseSpec& spec);

/// I_{d;n}, the square-free Veronese ideal (all caps 1).
MonomialIdeal squarefree_veronese(int n, int d);

/// G(I_{d;n}) minus one optional square-free degree-d generator. Without an
/// omission this is I_{d;n} itself.
MonomialIdeal almost_squarefree_veronese(int n, int d, const std::optional<Monomial>& omit);

/// The product p_1 * ... * p_d of primes on pairwise disjoint variable sets;
/// matroidal of degree d.
MonomialIdeal product_of_primes(int n, const std::vector<std::vector<int>>& parts_one_based);

/// All matroidal ideals generated in degree d on exactly n variables that
/// are full-supported with gcd 1, deduplicated as generator sets (not up to
/// variable permutation). Refused when C(n, d) > 20.
std::vector<MonomialIdeal> enumerate_matroidal(int n, int d);

/// Reproducible random matroidal ideals: seed a random square-free generator
/// subset, repair exchange-property violations by inserting the forced
/// generator until closure, keep the result when it is full-supported with
/// gcd 1 and not seen before.
std::vector<MonomialIdeal> sample_matroidal(int n, int d, std::uint64_t seed, int count);

}  // namespace polymat
