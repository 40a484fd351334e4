#include "polymat/ideal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace polymat {

namespace {

void check_dims(int n, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (g.dim() != n) throw std::invalid_argument("generator dimension mismatch");
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
    if (n < 0 || n > kMaxRingVars) throw std::invalid_argument("invalid ring dimension");
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    return minimalize(n, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.dim() != n_) throw std::invalid_argument("dimension mismatch");
    const std::uint64_t msupp = m.support();
    for (const auto& g : gens_) {
        if ((g.support() & ~msupp) != 0) continue;
        if (g.divides(m)) return true;
    }
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    if (other.dim() != n_) throw std::invalid_argument("dimension mismatch");
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool MonomialIdeal::is_equigenerated() const {
    if (gens_.empty()) return true;
    const int d = gens_.front().degree();
    for (const auto& g : gens_)
        if (g.degree() != d) return false;
    return true;
}

int MonomialIdeal::generator_degree() const {
    if (gens_.empty() || !is_equigenerated())
        throw std::invalid_argument("ideal is not equigenerated");
    return gens_.front().degree();
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        if (!g.is_squarefree()) return false;
    return true;
}

std::uint64_t MonomialIdeal::support() const {
    std::uint64_t mask = 0;
    for (const auto& g : gens_) mask |= g.support();
    return mask;
}

bool MonomialIdeal::full_supported() const {
    return support() == full_mask(n_);
}

Monomial MonomialIdeal::gcd_of_generators() const {
    if (gens_.empty()) throw std::invalid_argument("gcd of the zero ideal is undefined");
    Monomial g = gens_.front();
    for (std::size_t i = 1; i < gens_.size(); ++i) g = g.gcd(gens_[i]);
    return g;
}

std::size_t IdealHash::operator()(const MonomialIdeal& ideal) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(ideal.dim());
    MonomialHash mh;
    for (const auto& g : ideal.generators()) {
        h ^= mh(g) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    check_dims(n, gens);
    for (const auto& g : gens)
        if (g.is_one()) throw UnitIdealError("1 generates the unit ideal, which is not representable");

    // Deduplicate first; a set of distinct monomials of one degree is
    // automatically an antichain under divisibility.
    std::unordered_set<Monomial, MonomialHash> seen;
    seen.reserve(gens.size() * 2);
    std::vector<Monomial> distinct;
    distinct.reserve(gens.size());
    bool equigenerated = true;
    for (auto& g : gens) {
        if (seen.insert(g).second) {
            if (!distinct.empty() && g.degree() != distinct.front().degree()) equigenerated = false;
            distinct.push_back(std::move(g));
        }
    }

    MonomialIdeal result(n);
    auto& out = result.gens_;
    if (equigenerated) {
        out = std::move(distinct);
    } else {
        std::sort(distinct.begin(), distinct.end(), canonical_less);
        for (const auto& g : distinct) {
            bool redundant = false;
            const std::uint64_t gsupp = g.support();
            for (const auto& kept : out) {
                if (kept.degree() >= g.degree()) break;  // kept is degree-sorted
                if ((kept.support() & ~gsupp) != 0) continue;
                if (kept.divides(g)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return result;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ideal dimension mismatch");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal(a.dim());
    std::vector<Monomial> products;
    products.reserve(a.size() * b.size());
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) products.push_back(u.times(v));
    return minimalize(a.dim(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
    if (k < 1) throw std::invalid_argument("power exponent must be at least 1");
    MonomialIdeal result = ideal;
    for (int t = 1; t < k; ++t) result = multiply(result, ideal);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ideal dimension mismatch");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal(a.dim());
    std::vector<Monomial> lcms;
    lcms.reserve(a.size() * b.size());
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) lcms.push_back(u.lcm(v));
    return minimalize(a.dim(), std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
    if (u.dim() != ideal.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Monomial> quotients;
    quotients.reserve(ideal.size());
    for (const auto& g : ideal.generators()) quotients.push_back(g.colon(u));
    return minimalize(ideal.dim(), std::move(quotients));
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& u) {
    if (u.is_one()) return ideal;
    MonomialIdeal current = ideal;
    for (;;) {
        MonomialIdeal next = colon(current, u);
        if (next == current) return current;
        current = std::move(next);
    }
}

Localization try_localize(const MonomialIdeal& ideal, std::uint64_t keep_mask) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators()) {
        if ((g.support() & keep_mask) == 0) return {true, MonomialIdeal(ideal.dim())};
        gens.push_back(g.erase_outside(keep_mask));
    }
    return {false, minimalize(ideal.dim(), std::move(gens))};
}

MonomialIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& p) {
    if (p.dim() != ideal.dim()) throw std::invalid_argument("dimension mismatch");
    Localization loc = try_localize(ideal, p.mask());
    if (loc.unit)
        throw UnitIdealError("localization is the unit ideal (a generator was supported outside the prime)");
    return loc.ideal;
}

SupportGcd support_and_gcd(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("support/gcd of the zero ideal is undefined");
    SupportGcd result;
    result.support = ideal.support();
    result.gcd = ideal.gcd_of_generators();
    result.full = result.support == full_mask(ideal.dim());
    return result;
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, std::uint64_t mask) {
    if ((ideal.support() & ~mask) != 0)
        throw std::invalid_argument("ideal is supported outside the restriction mask");
    std::vector<int> positions;
    for (int i = 0; i < ideal.dim(); ++i)
        if ((mask >> i) & 1u) positions.push_back(i);
    const int m = static_cast<int>(positions.size());
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators()) {
        std::vector<int> e(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) e[static_cast<std::size_t>(j)] = g.exponent(positions[static_cast<std::size_t>(j)]);
        gens.emplace_back(std::move(e));
    }
    return minimalize(m, std::move(gens));
}

}  // namespace polymat
