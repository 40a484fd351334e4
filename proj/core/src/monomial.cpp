#include "polymat/monomial.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace polymat {

namespace {

// Exponents stay tiny at desk scale; the cap keeps repeated products from
// overflowing int arithmetic long before memory would run out.
constexpr int kMaxExponent = 1 << 24;

void check_exponent(long long e) {
    if (e < 0 || e > kMaxExponent)
        throw OverflowError("monomial exponent out of range: " + std::to_string(e));
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (static_cast<int>(exps_.size()) > kMaxRingVars)
        throw std::invalid_argument("ring dimension exceeds " + std::to_string(kMaxRingVars));
    long long deg = 0;
    for (int e : exps_) {
        check_exponent(e);
        deg += e;
    }
    check_exponent(deg);
    degree_ = static_cast<int>(deg);
}

Monomial Monomial::one(int n) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int var) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e.at(static_cast<std::size_t>(var)) = 1;
    return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
    for (int e : exps_)
        if (e > 1) return false;
    return true;
}

std::uint64_t Monomial::support() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
    return mask;
}

int Monomial::support_size() const {
    return std::popcount(support());
}

bool Monomial::divides(const Monomial& m) const {
    if (dim() != m.dim() || degree_ > m.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    if (dim() != m.dim()) throw std::invalid_argument("monomial dimension mismatch");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        long long s = static_cast<long long>(exps_[i]) + m.exps_[i];
        check_exponent(s);
        e[i] = static_cast<int>(s);
    }
    return Monomial(std::move(e));
}

Monomial Monomial::divided_by(const Monomial& m) const {
    if (!m.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] - m.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& m) const {
    if (dim() != m.dim()) throw std::invalid_argument("monomial dimension mismatch");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::min(exps_[i], m.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& m) const {
    if (dim() != m.dim()) throw std::invalid_argument("monomial dimension mismatch");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], m.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& m) const {
    if (dim() != m.dim()) throw std::invalid_argument("monomial dimension mismatch");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i] - m.exps_[i], 0);
    return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative monomial power");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        long long v = static_cast<long long>(exps_[i]) * k;
        check_exponent(v);
        e[i] = static_cast<int>(v);
    }
    return Monomial(std::move(e));
}

Monomial Monomial::erase_outside(std::uint64_t keep) const {
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = ((keep >> i) & 1u) ? exps_[i] : 0;
    return Monomial(std::move(e));
}

int revlex_compare(const Monomial& a, const Monomial& b) {
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] < y[i] ? 1 : -1;
    }
    return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
    }
    return 0;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return revlex_compare(a, b) > 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (int e : m.exponents()) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(e));
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

MonomialPrime::MonomialPrime(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > kMaxRingVars) throw std::invalid_argument("invalid ring dimension");
    if (n < kMaxRingVars && (mask >> n) != 0)
        throw std::invalid_argument("prime mask references variables outside the ring");
}

MonomialPrime MonomialPrime::full(int n) {
    return MonomialPrime(n, full_mask(n));
}

MonomialPrime MonomialPrime::of_vars(int n, const std::vector<int>& vars_one_based) {
    std::uint64_t mask = 0;
    for (int v : vars_one_based) {
        if (v < 1 || v > n) throw std::invalid_argument("variable index out of range");
        mask |= std::uint64_t{1} << (v - 1);
    }
    return MonomialPrime(n, mask);
}

MonomialPrime MonomialPrime::omitting(int n, const std::vector<int>& vars_one_based) {
    return of_vars(n, vars_one_based).complement();
}

int MonomialPrime::size() const {
    return std::popcount(mask_);
}

bool MonomialPrime::is_full() const {
    return mask_ == full_mask(n_);
}

std::vector<int> MonomialPrime::vars_one_based() const {
    return mask_to_vars_one_based(mask_);
}

MonomialPrime MonomialPrime::complement() const {
    return MonomialPrime(n_, full_mask(n_) & ~mask_);
}

std::uint64_t full_mask(int n) {
    return n >= kMaxRingVars ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::vector<int> mask_to_vars_one_based(std::uint64_t mask) {
    std::vector<int> vars;
    for (int i = 0; i < kMaxRingVars; ++i)
        if ((mask >> i) & 1u) vars.push_back(i + 1);
    return vars;
}

}  // namespace polymat
