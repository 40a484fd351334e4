#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polymat/errors.hpp"

namespace polymat {

/// Hard cap on the ring dimension; variable subsets are stored as 64-bit masks.
inline constexpr int kMaxRingVars = 64;

/// A monomial in a fixed polynomial ring K[x1..xn], stored as its exponent
/// vector. Immutable after construction; the total degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int n);
    static Monomial variable(int n, int var);  // var is 0-based

    int dim() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_one() const { return degree_ == 0; }
    bool is_squarefree() const;
    std::uint64_t support() const;
    int support_size() const;

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial divided_by(const Monomial& m) const;  // pre: m divides *this
    Monomial gcd(const Monomial& m) const;
    Monomial lcm(const Monomial& m) const;
    Monomial colon(const Monomial& m) const;  // *this / gcd(*this, m)
    Monomial pow(int k) const;

    /// Zero out every exponent whose variable is not in `keep` (monomial
    /// localization: those variables are substituted by 1).
    Monomial erase_outside(std::uint64_t keep) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Reverse lexicographic comparison with x1 > x2 > ... > xn: a > b iff the
/// last nonzero entry of a - b is negative. Returns +1, 0 or -1.
int revlex_compare(const Monomial& a, const Monomial& b);

/// Lexicographic comparison with x1 > x2 > ... > xn. Returns +1, 0 or -1.
int lex_compare(const Monomial& a, const Monomial& b);

/// Canonical generator order: total degree ascending, then reverse
/// lexicographic descending. For equigenerated ideals this is exactly the
/// descending revlex order used for linear quotients.
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// A monomial prime ideal: the ideal generated by a subset of the variables.
/// The canonical parameter is the generating set; conversion to the
/// complement convention (naming a prime by the omitted variables) is
/// provided by complement().
class MonomialPrime {
public:
    MonomialPrime(int n, std::uint64_t mask);

    static MonomialPrime full(int n);
    static MonomialPrime of_vars(int n, const std::vector<int>& vars_one_based);
    /// The prime whose generators are all variables except the listed ones.
    static MonomialPrime omitting(int n, const std::vector<int>& vars_one_based);

    int dim() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    int size() const;
    bool is_full() const;
    bool contains_var(int var) const { return (mask_ >> var) & 1u; }
    std::vector<int> vars_one_based() const;
    MonomialPrime complement() const;

    bool operator==(const MonomialPrime&) const = default;

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

std::uint64_t full_mask(int n);
std::vector<int> mask_to_vars_one_based(std::uint64_t mask);

}  // namespace polymat
