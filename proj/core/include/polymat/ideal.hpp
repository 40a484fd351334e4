#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polymat/monomial.hpp"

namespace polymat {

/// A monomial ideal in K[x1..xn], held by its unique minimal monomial
/// generating set in canonical order (degree ascending, then reverse
/// lexicographic descending with x1 > ... > xn). The zero ideal is the empty
/// generator set; the unit ideal is not representable.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(int n);  // zero ideal

    /// Minimalize + canonicalize. Throws UnitIdealError if 1 is among the
    /// generators, std::invalid_argument on dimension mismatches.
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);

    int dim() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_principal() const { return gens_.size() == 1; }

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;  // other ⊆ *this

    bool is_equigenerated() const;
    int generator_degree() const;  // pre: nonzero equigenerated
    bool is_squarefree() const;

    std::uint64_t support() const;  // union of generator supports
    bool full_supported() const;
    Monomial gcd_of_generators() const;  // pre: nonzero

    bool operator==(const MonomialIdeal&) const = default;

private:
    friend MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

    int n_ = 0;
    std::vector<Monomial> gens_;  // canonical, divisibility-minimal
};

struct IdealHash {
    std::size_t operator()(const MonomialIdeal& ideal) const noexcept;
};

/// Keep only the divisibility-minimal monomials, deduplicated and in
/// canonical order. Equal-degree input reduces to deduplication.
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int k);  // pre: k >= 1
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// (I : u), generated by { g / gcd(g, u) : g in G(I) }. Throws UnitIdealError
/// when u lies in I.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

/// (I : u^inf), the fixed point of repeated colons.
MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& u);

/// Monomial localization I(p): substitute every variable outside p by 1.
/// The ambient dimension is preserved. Throws UnitIdealError when some
/// generator collapses to 1.
MonomialIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& p);

/// Localization that reports the unit ideal as `unit = true` instead of
/// throwing; used by associated-prime scans where unit means "not contained".
struct Localization {
    bool unit = false;
    MonomialIdeal ideal;
};
Localization try_localize(const MonomialIdeal& ideal, std::uint64_t keep_mask);

struct SupportGcd {
    std::uint64_t support = 0;
    Monomial gcd;
    bool full = false;
};
/// supp(I) as a mask together with gcd(I). Throws on the zero ideal.
SupportGcd support_and_gcd(const MonomialIdeal& ideal);

/// Re-index the ideal into the polynomial ring on the variables of `mask`
/// only. Requires supp(I) ⊆ mask.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, std::uint64_t mask);

}  // namespace polymat
