#include "polymat/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "polymat/structure.hpp"

namespace polymat {

namespace {

void require_nonzero(const MonomialIdeal& ideal, const char* op) {
    if (ideal.is_zero()) throw std::invalid_argument(std::string(op) + " is undefined for the zero ideal");
}

IrreducibleComponent component_from(const MonomialIdeal& ideal) {
    IrreducibleComponent comp;
    comp.n = ideal.dim();
    for (const auto& g : ideal.generators()) {
        int var = std::countr_zero(g.support());
        comp.bounds.emplace_back(var, g.exponent(var));
    }
    std::sort(comp.bounds.begin(), comp.bounds.end());
    return comp;
}

struct ComponentHash {
    std::size_t operator()(const IrreducibleComponent& c) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto [v, e] : c.bounds) {
            h ^= (static_cast<std::uint64_t>(v) << 32) ^ static_cast<std::uint64_t>(e);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using ComponentSet = std::unordered_set<IrreducibleComponent, ComponentHash>;

// Process-wide memo; power traces decompose many closely related ideals.
std::shared_mutex memo_mutex;
std::unordered_map<MonomialIdeal, std::vector<IrreducibleComponent>, IdealHash> memo;

bool memo_lookup(const MonomialIdeal& ideal, std::vector<IrreducibleComponent>& out) {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find(ideal);
    if (it == memo.end()) return false;
    out = it->second;
    return true;
}

void memo_store(const MonomialIdeal& ideal, const std::vector<IrreducibleComponent>& comps,
                std::size_t capacity) {
    std::unique_lock lock(memo_mutex);
    if (memo.size() < capacity) memo.emplace(ideal, comps);
}

std::vector<IrreducibleComponent> prune_redundant(ComponentSet&& set) {
    std::vector<IrreducibleComponent> comps(std::make_move_iterator(set.begin()),
                                            std::make_move_iterator(set.end()));
    std::vector<IrreducibleComponent> kept;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
            if (i == j) continue;
            // Drop comps[i] when it contains another component; on equality
            // the set already deduplicated.
            if (comps[i].contains(comps[j])) redundant = true;
        }
        if (!redundant) kept.push_back(comps[i]);
    }
    std::sort(kept.begin(), kept.end(), [](const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.bounds < b.bounds;
    });
    return kept;
}

std::vector<IrreducibleComponent> decompose(const MonomialIdeal& ideal,
                                            const DecompositionBudget& budget,
                                            std::size_t& nodes) {
    std::vector<IrreducibleComponent> cached;
    if (memo_lookup(ideal, cached)) return cached;
    if (++nodes > budget.max_nodes)
        throw BudgetExceeded("irreducible decomposition exceeded its node budget");

    const Monomial* split = nullptr;
    for (const auto& g : ideal.generators()) {
        if (g.support_size() >= 2) {
            split = &g;
            break;
        }
    }

    std::vector<IrreducibleComponent> result;
    if (split == nullptr) {
        result.push_back(component_from(ideal));
    } else {
        // Split g = x_k^{e} * h with k the highest support variable.
        const int k = kMaxRingVars - 1 - std::countl_zero(split->support());
        Monomial pure = Monomial::variable(ideal.dim(), k).pow(split->exponent(k));
        Monomial rest = split->divided_by(pure);

        std::vector<Monomial> with_pure = ideal.generators();
        with_pure.push_back(pure);
        std::vector<Monomial> with_rest = ideal.generators();
        with_rest.push_back(rest);

        ComponentSet set;
        for (auto& part : decompose(minimalize(ideal.dim(), std::move(with_pure)), budget, nodes))
            set.insert(std::move(part));
        for (auto& part : decompose(minimalize(ideal.dim(), std::move(with_rest)), budget, nodes))
            set.insert(std::move(part));
        result = prune_redundant(std::move(set));
    }
    memo_store(ideal, result, budget.memo_capacity);
    return result;
}

}  // namespace

MonomialIdeal IrreducibleComponent::to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(bounds.size());
    for (auto [var, exp] : bounds) gens.push_back(Monomial::variable(n, var).pow(exp));
    return minimalize(n, std::move(gens));
}

std::uint64_t IrreducibleComponent::support() const {
    std::uint64_t mask = 0;
    for (auto [var, exp] : bounds) mask |= std::uint64_t{1} << var;
    return mask;
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
    // (x_v^{e}) generators: this ⊇ other iff every bound of other is matched
    // by a bound of this on the same variable with exponent <= other's.
    for (auto [var, exp] : other.bounds) {
        bool matched = false;
        for (auto [v, e] : bounds) {
            if (v == var && e <= exp) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

bool AssociatedPrimes::contains(std::uint64_t mask) const {
    return std::binary_search(primes.begin(), primes.end(), mask);
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            const DecompositionBudget& budget) {
    require_nonzero(ideal, "irreducible decomposition");
    std::size_t nodes = 0;
    return decompose(ideal, budget, nodes);
}

AssociatedPrimes associated_primes(const MonomialIdeal& ideal, const DecompositionBudget& budget) {
    auto comps = irreducible_decomposition(ideal, budget);
    AssociatedPrimes ass;
    ass.n = ideal.dim();
    for (const auto& comp : comps) ass.primes.push_back(comp.support());
    std::sort(ass.primes.begin(), ass.primes.end());
    ass.primes.erase(std::unique(ass.primes.begin(), ass.primes.end()), ass.primes.end());
    ass.contains_maximal = ass.contains(full_mask(ideal.dim()));
    return ass;
}

AssociatedPrimes ass_colon_oracle(const MonomialIdeal& ideal, std::size_t divisor_budget) {
    require_nonzero(ideal, "colon-enumeration associated primes");
    const int n = ideal.dim();
    Monomial lcm_all = ideal.generators().front();
    for (const auto& g : ideal.generators()) lcm_all = lcm_all.lcm(g);

    std::size_t divisors = 1;
    for (int i = 0; i < n; ++i) {
        divisors *= static_cast<std::size_t>(lcm_all.exponent(i)) + 1;
        if (divisors > divisor_budget)
            throw BudgetExceeded("lcm divisor count exceeds the colon-enumeration budget");
    }

    std::unordered_set<std::uint64_t> found;
    std::vector<int> u(static_cast<std::size_t>(n), 0);
    for (;;) {
        Monomial candidate{std::vector<int>(u)};
        if (!ideal.contains(candidate)) {
            // (I : u) is a monomial prime iff every generator quotient is
            // divisible by a degree-one quotient.
            std::uint64_t vars = 0;
            for (const auto& g : ideal.generators()) {
                Monomial c = g.colon(candidate);
                if (c.degree() == 1) vars |= c.support();
            }
            if (vars != 0) {
                bool prime = true;
                for (const auto& g : ideal.generators()) {
                    Monomial c = g.colon(candidate);
                    if (c.degree() > 1 && (c.support() & vars) == 0) {
                        prime = false;
                        break;
                    }
                }
                if (prime) found.insert(vars);
            }
        }
        // Odometer over all divisors of the lcm.
        int i = 0;
        while (i < n) {
            if (u[static_cast<std::size_t>(i)] < lcm_all.exponent(i)) {
                ++u[static_cast<std::size_t>(i)];
                break;
            }
            u[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }

    AssociatedPrimes ass;
    ass.n = n;
    ass.primes.assign(found.begin(), found.end());
    std::sort(ass.primes.begin(), ass.primes.end());
    ass.contains_maximal = ass.contains(full_mask(n));
    return ass;
}

AssociatedPrimes ass_polymatroidal_fast(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "polymatroidal associated primes");
    if (!is_polymatroidal(ideal).ok)
        throw std::invalid_argument("localization fast path requires a polymatroidal ideal");

    const std::uint64_t supp = ideal.support();
    AssociatedPrimes ass;
    ass.n = ideal.dim();
    for (std::uint64_t mask = supp;; mask = (mask - 1) & supp) {
        if (mask != 0) {
            Localization loc = try_localize(ideal, mask);
            if (!loc.unit) {
                LinearQuotientsReport report = linear_quotients_q(loc.ideal);
                if (!report.linear)
                    throw std::logic_error("localization of a polymatroidal ideal lost linear quotients");
                if (report.q == std::popcount(mask) - 1) ass.primes.push_back(mask);
            }
        }
        if (mask == 0) break;
    }
    std::sort(ass.primes.begin(), ass.primes.end());
    ass.contains_maximal = ass.contains(full_mask(ideal.dim()));
    return ass;
}

std::string decomposition_json(const std::vector<IrreducibleComponent>& components,
                               const AssociatedPrimes& ass) {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& comp : components) {
        nlohmann::json bounds = nlohmann::json::object();
        for (auto [var, exp] : comp.bounds) bounds[std::to_string(var + 1)] = exp;
        j["components"].push_back({{"bounds", bounds}});
    }
    j["ass"] = nlohmann::json::array();
    for (auto mask : ass.primes) j["ass"].push_back(mask_to_vars_one_based(mask));
    return j.dump();
}

}  // namespace polymat
