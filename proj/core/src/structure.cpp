#include "polymat/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace polymat {

namespace {

void require_nonzero(const MonomialIdeal& ideal, const char* op) {
    if (ideal.is_zero()) throw std::invalid_argument(std::string(op) + " is undefined for the zero ideal");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

PolymatroidalResult is_polymatroidal(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "polymatroidal test");
    const auto& gens = ideal.generators();
    const int n = ideal.dim();

    const int d = gens.front().degree();
    for (const auto& g : gens) {
        if (g.degree() != d) {
            ExchangeWitness w;
            w.kind = ExchangeWitness::Kind::NotEquigenerated;
            w.u = gens.front();
            w.v = g;
            return {false, w};
        }
    }

    // Membership of a degree-d monomial in an ideal generated in degree d is
    // equality with a generator.
    std::unordered_set<Monomial, MonomialHash> members(gens.begin(), gens.end());

    for (const auto& u : gens) {
        for (const auto& v : gens) {
            if (u == v) continue;
            for (int i = 0; i < n; ++i) {
                if (u.exponent(i) <= v.exponent(i)) continue;
                bool exchanged = false;
                std::vector<int> cand = u.exponents();
                --cand[static_cast<std::size_t>(i)];
                for (int j = 0; j < n && !exchanged; ++j) {
                    if (u.exponent(j) >= v.exponent(j)) continue;
                    ++cand[static_cast<std::size_t>(j)];
                    exchanged = members.count(Monomial(cand)) > 0;
                    --cand[static_cast<std::size_t>(j)];
                }
                if (!exchanged) {
                    ExchangeWitness w;
                    w.kind = ExchangeWitness::Kind::ExchangeFail;
                    w.u = u;
                    w.v = v;
                    w.var_one_based = i + 1;
                    return {false, w};
                }
            }
        }
    }
    return {true, std::nullopt};
}

bool is_matroidal(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "matroidal test");
    if (!ideal.is_squarefree()) return false;
    return is_polymatroidal(ideal).ok;
}

int LinearRelationGraph::vertex_count() const {
    return std::popcount(vertices);
}

LinearRelationGraph linear_relation_graph(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "linear relation graph");
    const auto& gens = ideal.generators();
    const int n = ideal.dim();

    // x_i u_k = x_j u_l is equivalent to u_k - u_l = e_j - e_i.
    std::set<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        for (std::size_t l = k + 1; l < gens.size(); ++l) {
            int plus = -1, minus = -1;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int diff = gens[k].exponent(i) - gens[l].exponent(i);
                if (diff == 0) continue;
                if (diff == 1 && plus < 0)
                    plus = i;
                else if (diff == -1 && minus < 0)
                    minus = i;
                else
                    ok = false;
            }
            if (ok && plus >= 0 && minus >= 0)
                edges.insert({std::min(plus, minus), std::max(plus, minus)});
        }
    }

    LinearRelationGraph graph;
    graph.n = n;
    graph.edges.assign(edges.begin(), edges.end());
    UnionFind uf(n);
    for (auto [i, j] : graph.edges) {
        graph.vertices |= (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        uf.unite(i, j);
    }
    std::unordered_map<int, std::uint64_t> comps;
    for (int i = 0; i < n; ++i)
        if ((graph.vertices >> i) & 1u) comps[uf.find(i)] |= std::uint64_t{1} << i;
    for (auto& [root, mask] : comps) graph.components.push_back(mask);
    std::sort(graph.components.begin(), graph.components.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
    return graph;
}

std::string graph_json(const LinearRelationGraph& graph) {
    nlohmann::json j;
    j["vertices"] = mask_to_vars_one_based(graph.vertices);
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : graph.edges) j["edges"].push_back({a + 1, b + 1});
    j["components"] = nlohmann::json::array();
    for (auto mask : graph.components) j["components"].push_back(mask_to_vars_one_based(mask));
    return j.dump();
}

int analytic_spread_unchecked(const MonomialIdeal& ideal) {
    LinearRelationGraph graph = linear_relation_graph(ideal);
    return graph.vertex_count() - graph.component_count() + 1;
}

int analytic_spread(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "analytic spread");
    if (!is_polymatroidal(ideal).ok)
        throw std::invalid_argument("analytic spread via the relation graph requires a polymatroidal ideal");
    return analytic_spread_unchecked(ideal);
}

LinearQuotientsReport linear_quotients_q(const MonomialIdeal& ideal, QuotientOrder order) {
    require_nonzero(ideal, "linear quotients");
    LinearQuotientsReport report;
    report.order = ideal.generators();
    if (order == QuotientOrder::Lex) {
        std::sort(report.order.begin(), report.order.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return lex_compare(a, b) > 0;
        });
    }
    // Canonical order is already degree-ascending descending-revlex.

    const auto& gens = report.order;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        const Monomial& ui = gens[i];
        std::vector<Monomial> quotients;
        quotients.reserve(i);
        std::uint64_t var_mask = 0;
        for (std::size_t j = 0; j < i; ++j) {
            Monomial c = gens[j].colon(ui);
            if (c.degree() == 1) var_mask |= c.support();
            quotients.push_back(std::move(c));
        }
        // Linear quotients require every quotient to be divisible by one of
        // the degree-one quotients; otherwise some minimal generator of the
        // colon ideal has degree >= 2.
        for (const auto& c : quotients) {
            if (c.degree() == 1) continue;
            if ((c.support() & var_mask) == 0) {
                report.linear = false;
                report.q_values.push_back(std::popcount(var_mask));
                return report;
            }
        }
        int qi = std::popcount(var_mask);
        report.q_values.push_back(qi);
        report.q = std::max(report.q, qi);
    }
    return report;
}

int depth_from_linear_quotients(const MonomialIdeal& ideal) {
    LinearQuotientsReport report = linear_quotients_q(ideal);
    if (!report.linear)
        throw NotLinearQuotients("generators do not have linear quotients in reverse lexicographic order");
    return ideal.dim() - report.q - 1;
}

int q_value_assuming_linear(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "linear quotients");
    const auto& gens = ideal.generators();
    const int n = ideal.dim();
    std::unordered_map<Monomial, std::size_t, MonomialHash> rank;
    rank.reserve(gens.size() * 2);
    for (std::size_t i = 0; i < gens.size(); ++i) rank.emplace(gens[i], i);

    int q = 0;
    std::vector<int> cand;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        const Monomial& ui = gens[i];
        std::uint64_t vars = 0;
        cand = ui.exponents();
        for (int m = 0; m < n; ++m) {
            if (cand[static_cast<std::size_t>(m)] == 0) continue;
            --cand[static_cast<std::size_t>(m)];
            for (int l = 0; l < n; ++l) {
                if (l == m || ((vars >> l) & 1u)) continue;
                ++cand[static_cast<std::size_t>(l)];
                auto it = rank.find(Monomial(cand));
                if (it != rank.end() && it->second < i) vars |= std::uint64_t{1} << l;
                --cand[static_cast<std::size_t>(l)];
            }
            ++cand[static_cast<std::size_t>(m)];
        }
        q = std::max(q, std::popcount(vars));
    }
    return q;
}

}  // namespace polymat
