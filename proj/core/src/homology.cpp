#include "polymat/homology.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace polymat {

namespace {

using BigInt = boost::multiprecision::cpp_int;

/// Rank over Q by fraction-free Bareiss elimination with row pivoting.
int rank_exact(std::vector<std::vector<BigInt>> m) {
    if (m.empty() || m.front().empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

/// Reduced homology ranks of the complex whose faces are the masks in
/// `faces` (including the empty face), grouped by cardinality. Faces within
/// one dimension are ordered lexicographically by vertex set.
std::vector<int> reduced_homology_ranks(const std::vector<std::uint64_t>& faces, int top_vertices) {
    std::vector<std::vector<std::uint64_t>> by_card(static_cast<std::size_t>(top_vertices) + 1);
    for (auto f : faces) by_card[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    // Lexicographic on the sorted vertex lists: the face holding the lowest
    // differing vertex comes first.
    auto lex_faces = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t diff = a ^ b;
        if (diff == 0) return false;
        std::uint64_t low = diff & (~diff + 1);
        return (a & low) != 0;
    };
    for (auto& level : by_card) std::sort(level.begin(), level.end(), lex_faces);

    // boundary_rank[k] = rank of d_k : C_{k} -> C_{k-1}, with card = k + 1.
    std::vector<int> boundary_rank(by_card.size() + 1, 0);
    for (std::size_t card = 1; card < by_card.size(); ++card) {
        const auto& domain = by_card[card];
        const auto& codomain = by_card[card - 1];
        if (domain.empty() || codomain.empty()) continue;
        std::unordered_map<std::uint64_t, std::size_t> row_of;
        row_of.reserve(codomain.size() * 2);
        for (std::size_t r = 0; r < codomain.size(); ++r) row_of.emplace(codomain[r], r);

        std::vector<std::vector<BigInt>> matrix(codomain.size(), std::vector<BigInt>(domain.size(), 0));
        for (std::size_t col = 0; col < domain.size(); ++col) {
            std::uint64_t face = domain[col];
            int sign = 1;
            std::uint64_t rest = face;
            while (rest) {
                std::uint64_t low = rest & (~rest + 1);
                auto it = row_of.find(face ^ low);
                if (it != row_of.end()) matrix[it->second][col] = sign;
                sign = -sign;
                rest ^= low;
            }
        }
        boundary_rank[card] = rank_exact(std::move(matrix));
    }

    // H~_k = |C_k| - rank d_k - rank d_{k+1}, where C_k holds (k+1)-sets.
    std::vector<int> ranks(by_card.size(), 0);
    for (std::size_t card = 0; card < by_card.size(); ++card) {
        int dim_ck = static_cast<int>(by_card[card].size());
        ranks[card] = dim_ck - boundary_rank[card] - boundary_rank[card + 1];
    }
    return ranks;  // ranks[card] = H~_{card-1}
}

}  // namespace

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const HomologyBudget& budget) {
    if (ideal.is_zero()) throw std::invalid_argument("lcm lattice of the zero ideal is undefined");
    if (ideal.size() > budget.max_generators)
        throw BudgetExceeded("generator count exceeds the lcm lattice budget");

    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> queue;
    for (const auto& g : ideal.generators()) {
        if (seen.insert(g).second) queue.push_back(g);
    }
    while (!queue.empty()) {
        Monomial a = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : ideal.generators()) {
            Monomial join = a.lcm(g);
            if (seen.insert(join).second) {
                if (seen.size() > budget.max_cost)
                    throw BudgetExceeded("lcm lattice exceeds the homology cost budget");
                queue.push_back(join);
            }
        }
    }
    std::vector<Monomial> lattice(seen.begin(), seen.end());
    std::sort(lattice.begin(), lattice.end(), canonical_less);
    return lattice;
}

BettiTable betti_table(const MonomialIdeal& ideal, const HomologyBudget& budget) {
    std::vector<Monomial> lattice = lcm_lattice(ideal, budget);

    std::size_t cost = 0;
    for (const auto& a : lattice) cost += std::size_t{1} << a.support_size();
    if (cost > budget.max_cost)
        throw BudgetExceeded("upper Koszul complex enumeration exceeds the homology cost budget");

    BettiTable table;
    table.n = ideal.dim();
    int max_index = 0;

    for (const auto& a : lattice) {
        const std::uint64_t supp = a.support();

        // Tight masks of the generators dividing x^a: tau is a face iff it
        // avoids the tight set of some divisor, so an empty tight set makes
        // the complex a full simplex with no reduced homology.
        std::vector<std::uint64_t> tight;
        bool contractible = false;
        for (const auto& g : ideal.generators()) {
            if (!g.divides(a)) continue;
            std::uint64_t t = 0;
            for (int i = 0; i < ideal.dim(); ++i)
                if (a.exponent(i) > 0 && g.exponent(i) == a.exponent(i)) t |= std::uint64_t{1} << i;
            if (t == 0) {
                contractible = true;
                break;
            }
            tight.push_back(t);
        }
        if (contractible) continue;

        std::vector<std::uint64_t> faces;
        for (std::uint64_t tau = supp;; tau = (tau - 1) & supp) {
            for (std::uint64_t t : tight) {
                if ((t & tau) == 0) {
                    faces.push_back(tau);
                    break;
                }
            }
            if (tau == 0) break;
        }

        std::vector<int> ranks = reduced_homology_ranks(faces, a.support_size());
        for (std::size_t card = 0; card < ranks.size(); ++card) {
            if (ranks[card] <= 0) continue;
            int i = static_cast<int>(card);  // beta_{i,a}(I) = H~_{i-1}
            table.entries.push_back({i, a, ranks[card]});
            max_index = std::max(max_index, i);
        }
    }

    std::sort(table.entries.begin(), table.entries.end(), [](const BettiEntry& x, const BettiEntry& y) {
        if (x.i != y.i) return x.i < y.i;
        return canonical_less(x.a, y.a);
    });
    table.pd = max_index + 1;
    table.depth = table.n - table.pd;
    return table;
}

int depth_oracle(const MonomialIdeal& ideal, const HomologyBudget& budget) {
    return betti_table(ideal, budget).depth;
}

std::string betti_json(const BettiTable& table) {
    nlohmann::json j;
    j["pd"] = table.pd;
    j["depth"] = table.depth;
    j["betti"] = nlohmann::json::array();
    for (const auto& entry : table.entries)
        j["betti"].push_back({{"i", entry.i}, {"a", entry.a.exponents()}, {"rank", entry.rank}});
    return j.dump();
}

}  // namespace polymat
