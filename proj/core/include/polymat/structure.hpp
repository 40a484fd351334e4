#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymat/ideal.hpp"

namespace polymat {

/// Counterexample data for a failed polymatroidal test.
struct ExchangeWitness {
    enum class Kind { NotEquigenerated, ExchangeFail };
    Kind kind = Kind::ExchangeFail;
    Monomial u;
    Monomial v;
    int var_one_based = 0;  // the exponent position i with deg_i(u) > deg_i(v)
};

struct PolymatroidalResult {
    bool ok = false;
    std::optional<ExchangeWitness> witness;
    explicit operator bool() const { return ok; }
};

/// Exchange-property test: true iff all generators share one degree and for
/// every ordered pair u, v in G(I) and every i with deg_i(u) > deg_i(v) there
/// is a j with deg_j(u) < deg_j(v) and x_j * (u / x_i) in I. Throws on the
/// zero ideal.
PolymatroidalResult is_polymatroidal(const MonomialIdeal& ideal);

/// Polymatroidal with square-free generators.
bool is_matroidal(const MonomialIdeal& ideal);

/// Graph on the variables with an edge {i, j} whenever x_i u_k = x_j u_l for
/// generators u_k, u_l. Vertices are exactly the edge endpoints.
struct LinearRelationGraph {
    int n = 0;
    std::uint64_t vertices = 0;
    std::vector<std::pair<int, int>> edges;       // 0-based, i < j, sorted
    std::vector<std::uint64_t> components;        // vertex masks, sorted by lowest vertex

    int vertex_count() const;
    int component_count() const { return static_cast<int>(components.size()); }
};

LinearRelationGraph linear_relation_graph(const MonomialIdeal& ideal);

/// {"vertices":[...], "edges":[[i,j],...], "components":[[...],...]} (1-based).
std::string graph_json(const LinearRelationGraph& graph);

/// l(I) = r - s + 1 from the linear relation graph. Valid for polymatroidal
/// ideals; the input is checked and rejected otherwise.
int analytic_spread(const MonomialIdeal& ideal);

/// r - s + 1 without the polymatroidal precondition check.
int analytic_spread_unchecked(const MonomialIdeal& ideal);

enum class QuotientOrder { RevLex, Lex };

struct LinearQuotientsReport {
    std::vector<Monomial> order;  // generators in the order used
    std::vector<int> q_values;    // q_i for i = 2..|G| (empty when |G| <= 1)
    int q = 0;                    // max of q_values, 0 when none
    bool linear = true;           // every colon ideal generated by variables
};

/// Sort G(I) by the requested order (degree ascending, then descending
/// revlex or lex), compute each colon ideal (u_1..u_{i-1}) : u_i, and record
/// how many variables generate it. `linear` turns false as soon as some
/// colon has a non-variable minimal generator.
LinearQuotientsReport linear_quotients_q(const MonomialIdeal& ideal,
                                         QuotientOrder order = QuotientOrder::RevLex);

/// depth R/I = n - q(I) - 1, valid when the linear-quotients check passes.
/// Throws NotLinearQuotients otherwise.
int depth_from_linear_quotients(const MonomialIdeal& ideal);

/// q(I) computed by neighbor lookups only: a variable x_l enters the i-th
/// colon iff x_l * u_i / x_m is an earlier generator for some x_m | u_i.
/// For equigenerated ideals this finds exactly the degree-one elements of
/// each colon, so it equals q(I) whenever the order gives linear quotients
/// (in particular for polymatroidal ideals and their powers). It does not
/// detect non-linear colons.
int q_value_assuming_linear(const MonomialIdeal& ideal);

}  // namespace polymat
