#include "polymat/families.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "polymat/structure.hpp"

namespace polymat {

namespace {

void enumerate_capped(int n, int d, const std::vector<int>& caps, int var, std::vector<int>& exps,
                      std::vector<Monomial>& out) {
    if (var == n) {
        if (d == 0) out.emplace_back(std::vector<int>(exps));
        return;
    }
    int remaining_cap = 0;
    for (int j = var; j < n; ++j) remaining_cap += caps[static_cast<std::size_t>(j)];
    if (remaining_cap < d) return;
    for (int e = 0; e <= std::min(caps[static_cast<std::size_t>(var)], d); ++e) {
        exps[static_cast<std::size_t>(var)] = e;
        enumerate_capped(n, d - e, caps, var + 1, exps, out);
    }
    exps[static_cast<std::size_t>(var)] = 0;
}

/// All d-subsets of {0..n-1} as variable masks, in a fixed order.
std::vector<std::uint64_t> subset_masks(int n, int d) {
    std::vector<std::uint64_t> masks;
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::uint64_t m = 0;
        for (int i : idx) m |= std::uint64_t{1} << i;
        masks.push_back(m);
        int pos = d - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - d + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return masks;
}

MonomialIdeal ideal_from_var_masks(int n, const std::vector<std::uint64_t>& monomials) {
    std::vector<Monomial> gens;
    gens.reserve(monomials.size());
    for (auto mask : monomials) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) e[static_cast<std::size_t>(i)] = 1;
        gens.emplace_back(std::move(e));
    }
    return minimalize(n, std::move(gens));
}

/// Exchange-requirement tables over a fixed list of square-free degree-d
/// monomials (identified with their variable masks): for each ordered pair
/// (a, b) and each variable i in supp(a) \ supp(b), requirement[a][b] lists
/// the generator-index mask of the valid replacements x_j * (u_a / x_i).
struct ExchangeTables {
    int n = 0;
    std::vector<std::uint64_t> vars;                          // variable mask per generator index
    std::unordered_map<std::uint64_t, int> index_of;          // variable mask -> generator index
    std::vector<std::vector<std::vector<std::uint64_t>>> req; // [a][b] -> list of index masks

    ExchangeTables(int n, int d) : n(n), vars(subset_masks(n, d)) {
        const int m = static_cast<int>(vars.size());
        for (int i = 0; i < m; ++i) index_of.emplace(vars[static_cast<std::size_t>(i)], i);
        req.assign(static_cast<std::size_t>(m), std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(m)));
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) {
                if (a == b) continue;
                std::uint64_t only_a = vars[static_cast<std::size_t>(a)] & ~vars[static_cast<std::size_t>(b)];
                std::uint64_t only_b = vars[static_cast<std::size_t>(b)] & ~vars[static_cast<std::size_t>(a)];
                auto& lists = req[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                for (int i = 0; i < n; ++i) {
                    if (!((only_a >> i) & 1u)) continue;
                    std::uint64_t replacement_indices = 0;
                    for (int j = 0; j < n; ++j) {
                        if (!((only_b >> j) & 1u)) continue;
                        std::uint64_t swapped = (vars[static_cast<std::size_t>(a)] & ~(std::uint64_t{1} << i)) |
                                                (std::uint64_t{1} << j);
                        replacement_indices |= std::uint64_t{1} << index_of.at(swapped);
                    }
                    lists.push_back(replacement_indices);
                }
            }
        }
    }

    bool exchange_closed(std::uint64_t selection) const {
        std::uint64_t rest = selection;
        while (rest) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t rest_b = selection;
            while (rest_b) {
                int b = std::countr_zero(rest_b);
                rest_b &= rest_b - 1;
                if (a == b) continue;
                for (std::uint64_t need : req[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                    if ((selection & need) == 0) return false;
            }
        }
        return true;
    }

    bool normalized(std::uint64_t selection) const {
        std::uint64_t support = 0;
        std::uint64_t common = ~std::uint64_t{0};
        std::uint64_t rest = selection;
        while (rest) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            support |= vars[static_cast<std::size_t>(a)];
            common &= vars[static_cast<std::size_t>(a)];
        }
        return support == full_mask(n) && common == 0;
    }

    MonomialIdeal to_ideal(std::uint64_t selection) const {
        std::vector<std::uint64_t> masks;
        std::uint64_t rest = selection;
        while (rest) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            masks.push_back(vars[static_cast<std::size_t>(a)]);
        }
        return ideal_from_var_masks(n, masks);
    }
};

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

void VeroneseSpec::validate() const {
    if (n < 1 || n > kMaxRingVars) throw std::invalid_argument("Veronese spec: invalid ring dimension");
    if (d < 1) throw std::invalid_argument("Veronese spec: degree must be positive");
    if (static_cast<int>(caps.size()) != n) throw std::invalid_argument("Veronese spec: need one cap per variable");
    long long total = 0;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        if (caps[j] < 1 || caps[j] > d)
            throw std::invalid_argument("Veronese spec: caps must satisfy 1 <= a_j <= d");
        if (j > 0 && caps[j] < caps[j - 1])
            throw std::invalid_argument("Veronese spec: caps must be ascending");
        total += caps[j];
    }
    if (total < d) throw std::invalid_argument("Veronese spec: caps sum below the degree (empty family)");
}

MonomialIdeal veronese_type(const VeroneseSpec& spec) {
    spec.validate();
    std::vector<Monomial> gens;
    std::vector<int> exps(static_cast<std::size_t>(spec.n), 0);
    enumerate_capped(spec.n, spec.d, spec.caps, 0, exps, gens);
    if (gens.empty()) throw std::invalid_argument("Veronese family is empty");
    return minimalize(spec.n, std::move(gens));
}

MonomialIdeal squarefree_veronese(int n, int d) {
    if (d > n) throw std::invalid_argument("square-free Veronese requires d <= n");
    VeroneseSpec spec{n, d, std::vector<int>(static_cast<std::size_t>(n), 1)};
    return veronese_type(spec);
}

MonomialIdeal almost_squarefree_veronese(int n, int d, const std::optional<Monomial>& omit) {
    MonomialIdeal base = squarefree_veronese(n, d);
    if (!omit) return base;
    if (omit->dim() != n || !omit->is_squarefree() || omit->degree() != d)
        throw std::invalid_argument("omitted monomial is not a generator of the square-free Veronese ideal");
    std::vector<Monomial> gens;
    gens.reserve(base.size() - 1);
    bool found = false;
    for (const auto& g : base.generators()) {
        if (g == *omit)
            found = true;
        else
            gens.push_back(g);
    }
    if (!found) throw std::invalid_argument("omitted monomial is not a generator of the square-free Veronese ideal");
    if (gens.empty()) throw std::invalid_argument("omission empties the family");
    return minimalize(n, std::move(gens));
}

MonomialIdeal product_of_primes(int n, const std::vector<std::vector<int>>& parts_one_based) {
    if (parts_one_based.empty()) throw std::invalid_argument("need at least one prime");
    std::uint64_t used = 0;
    MonomialIdeal result;
    bool first = true;
    for (const auto& part : parts_one_based) {
        if (part.empty()) throw std::invalid_argument("empty part in prime product");
        MonomialPrime p = MonomialPrime::of_vars(n, part);
        if ((used & p.mask()) != 0) throw std::invalid_argument("prime supports must be pairwise disjoint");
        used |= p.mask();
        std::vector<Monomial> vars;
        for (int v : p.vars_one_based()) vars.push_back(Monomial::variable(n, v - 1));
        MonomialIdeal prime_ideal = minimalize(n, std::move(vars));
        result = first ? prime_ideal : multiply(result, prime_ideal);
        first = false;
    }
    return result;
}

std::vector<MonomialIdeal> enumerate_matroidal(int n, int d) {
    if (n < 1 || d < 1 || d > n) throw std::invalid_argument("matroidal enumeration needs 1 <= d <= n");
    if (binomial(n, d) > 20)
        throw std::invalid_argument("exhaustive matroidal enumeration refused: C(n,d) exceeds 20");

    ExchangeTables tables(n, d);
    const int m = static_cast<int>(tables.vars.size());
    std::vector<MonomialIdeal> out;
    for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << m); ++sel) {
        if (!tables.normalized(sel)) continue;
        if (!tables.exchange_closed(sel)) continue;
        out.push_back(tables.to_ideal(sel));
    }
    return out;
}

std::vector<MonomialIdeal> sample_matroidal(int n, int d, std::uint64_t seed, int count) {
    if (n < 1 || d < 1 || d > n) throw std::invalid_argument("matroidal sampling needs 1 <= d <= n");
    ExchangeTables tables(n, d);
    const int m = static_cast<int>(tables.vars.size());
    if (m > 63) throw std::invalid_argument("generator universe too large to sample");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, std::min(m, 2 * n));
    std::uniform_int_distribution<int> pick(0, m - 1);

    std::unordered_set<std::uint64_t> seen;
    std::vector<MonomialIdeal> out;
    const long long max_attempts = static_cast<long long>(count) * 5000 + 1000;
    for (long long attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
        std::uint64_t sel = 0;
        int target = size_dist(rng);
        for (int i = 0; i < target; ++i) sel |= std::uint64_t{1} << pick(rng);

        // Repair toward exchange closure: insert the first missing
        // replacement until no violation remains.
        bool changed = true;
        while (changed) {
            changed = false;
            std::uint64_t rest = sel;
            while (rest && !changed) {
                int a = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t rest_b = sel;
                while (rest_b && !changed) {
                    int b = std::countr_zero(rest_b);
                    rest_b &= rest_b - 1;
                    if (a == b) continue;
                    for (std::uint64_t need : tables.req[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                        if ((sel & need) == 0) {
                            sel |= need & (~need + 1);  // lowest-index forced generator
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }

        if (!tables.normalized(sel)) continue;
        if (!seen.insert(sel).second) continue;
        out.push_back(tables.to_ideal(sel));
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("matroidal sampler could not reach the requested count");
    return out;
}

}  // namespace polymat
