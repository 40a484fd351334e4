#include "polymat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "polymat/decomposition.hpp"
#include "polymat/families.hpp"
#include "polymat/homology.hpp"
#include "polymat/io.hpp"
#include "polymat/stability.hpp"
#include "polymat/structure.hpp"

namespace polymat {

namespace {

// ---------------------------------------------------------------------------
// Result shaping

struct CheckBuilder {
    TheoremCheckResult result;

    CheckBuilder(std::string id, std::string corpus) {
        result.id = std::move(id);
        result.corpus = std::move(corpus);
    }

    void instance(bool ok, const MonomialIdeal& ideal, const std::string& detail) {
        ++result.instances;
        if (!ok) {
            std::ostringstream witness;
            witness << "# " << result.id << " failure: " << detail << "\n" << format_ideal(ideal);
            result.witnesses.push_back(witness.str());
        }
    }

    void skip() { ++result.skipped; }

    TheoremCheckResult finalize() {
        if (!result.witnesses.empty())
            result.status = CheckStatus::Fail;
        else if (result.instances > 0 && result.skipped == 0)
            result.status = CheckStatus::Pass;
        else
            result.status = CheckStatus::Inconclusive;
        return std::move(result);
    }
};

// ---------------------------------------------------------------------------
// Certified stability, cached process-wide (several checks sweep the same
// corpus of ideals).

struct CachedStability {
    int astab = 0;
    int dstab = 0;
    int ell = 0;
    AssociatedPrimes first_ass;   // Ass(I)
    AssociatedPrimes stable_ass;  // Ass at the certified horizon
    std::vector<int> depths;      // depth R/I^t for t = 1..horizon
};

std::mutex stability_cache_mutex;
std::unordered_map<MonomialIdeal, CachedStability, IdealHash> stability_cache;

/// Certified astab/dstab data, or nullopt when the configured horizon cannot
/// reach the proved stability bound (or the ideal is not polymatroidal).
std::optional<CachedStability> certified_stability(const MonomialIdeal& ideal, int max_power) {
    {
        std::lock_guard lock(stability_cache_mutex);
        auto it = stability_cache.find(ideal);
        if (it != stability_cache.end()) {
            if (static_cast<int>(it->second.depths.size()) <= max_power) return it->second;
            return std::nullopt;
        }
    }
    if (!is_polymatroidal(ideal).ok) return std::nullopt;
    const int bound = ideal.is_principal() ? 1 : analytic_spread_unchecked(ideal) - 1;
    if (bound > max_power) return std::nullopt;

    StabilityOptions options;
    options.max_power = bound;
    options.full_trace = true;
    StabilityReport report = stability_report(ideal, options);
    if (!report.certified || !report.astab || !report.dstab)
        throw std::logic_error("certified stability run was not certified");

    CachedStability cached;
    cached.astab = *report.astab;
    cached.dstab = *report.dstab;
    cached.ell = report.ell.value_or(1);
    cached.first_ass = *report.trace.entries.front().ass;
    cached.stable_ass = report.stable_ass;
    for (const auto& entry : report.trace.entries) cached.depths.push_back(*entry.depth);

    std::lock_guard lock(stability_cache_mutex);
    stability_cache.emplace(ideal, cached);
    return cached;
}

// ---------------------------------------------------------------------------
// Corpora

/// Divide out gcd(I) and restrict to the support: the normalization assumed
/// by the structural results (full-supported, gcd 1). Principal ideals
/// degenerate under it and are dropped.
std::optional<MonomialIdeal> normalized(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_principal()) return std::nullopt;
    Monomial g = ideal.gcd_of_generators();
    MonomialIdeal reduced = ideal;
    if (!g.is_one()) {
        std::vector<Monomial> gens;
        gens.reserve(ideal.size());
        for (const auto& u : ideal.generators()) gens.push_back(u.divided_by(g));
        reduced = minimalize(ideal.dim(), std::move(gens));
    }
    if (reduced.is_principal()) return std::nullopt;
    return restrict_to(reduced, reduced.support());
}

void push_normalized(std::vector<MonomialIdeal>& out, const MonomialIdeal& ideal) {
    if (auto norm = normalized(ideal)) out.push_back(std::move(*norm));
}

void dedupe(std::vector<MonomialIdeal>& corpus) {
    std::vector<MonomialIdeal> unique_corpus;
    for (auto& ideal : corpus) {
        if (std::find(unique_corpus.begin(), unique_corpus.end(), ideal) == unique_corpus.end())
            unique_corpus.push_back(std::move(ideal));
    }
    corpus = std::move(unique_corpus);
}

/// Full-supported gcd-1 matroidal ideals of degree d, exhaustively
/// enumerated over the rings where that is feasible (C(n, d) <= 20).
const std::vector<MonomialIdeal>& matroidal_corpus(int d) {
    static std::mutex mutex;
    static std::unordered_map<int, std::vector<MonomialIdeal>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    std::vector<MonomialIdeal> corpus;
    for (int n = d + 1; n <= 6; ++n) {
        for (auto& ideal : enumerate_matroidal(n, d)) corpus.push_back(std::move(ideal));
    }
    return cache.emplace(d, std::move(corpus)).first->second;
}

std::vector<MonomialIdeal> veronese_corpus(int d) {
    std::vector<std::pair<int, std::vector<int>>> specs;
    if (d == 2) {
        specs = {{2, {1, 2}},          {2, {2, 2}},          {3, {1, 1, 2}},    {3, {1, 2, 2}},
                 {3, {2, 2, 2}},       {4, {1, 1, 1, 1}},    {4, {1, 1, 2, 2}}, {4, {1, 2, 2, 2}},
                 {4, {2, 2, 2, 2}},    {5, {1, 1, 1, 1, 1}}, {5, {1, 1, 1, 2, 2}}};
    } else if (d == 3) {
        specs = {{3, {1, 1, 3}},       {3, {1, 2, 3}},       {3, {2, 2, 2}},    {3, {3, 3, 3}},
                 {4, {1, 1, 1, 1}},    {4, {1, 1, 2, 2}},    {4, {1, 2, 2, 3}}, {4, {2, 2, 2, 2}},
                 {5, {1, 1, 1, 1, 1}}, {5, {1, 1, 1, 1, 3}}};
    }
    std::vector<MonomialIdeal> out;
    for (auto& [n, caps] : specs) push_normalized(out, veronese_type(VeroneseSpec{n, d, caps}));
    return out;
}

const std::vector<std::pair<int, int>> kAlmostSquarefreeTable = {
    {4, 2}, {5, 2}, {5, 3}, {6, 3}, {6, 4}};

/// Degree-2 polymatroidal corpus, normalized to full support and gcd 1.
const std::vector<MonomialIdeal>& polymatroidal_corpus_deg2() {
    static std::vector<MonomialIdeal>* corpus = [] {
        auto* out = new std::vector<MonomialIdeal>;
        for (const auto& ideal : matroidal_corpus(2)) out->push_back(ideal);
        for (auto& ideal : veronese_corpus(2)) out->push_back(std::move(ideal));
        const MonomialIdeal base42 = squarefree_veronese(4, 2);
        for (const auto& omit : base42.generators())
            push_normalized(*out, almost_squarefree_veronese(4, 2, omit));
        push_normalized(*out, product_of_primes(4, {{1, 2}, {3, 4}}));
        push_normalized(*out, product_of_primes(5, {{1, 2, 3}, {4, 5}}));
        push_normalized(*out, localize(squarefree_veronese(4, 2), MonomialPrime::omitting(4, {4})));
        dedupe(*out);
        return out;
    }();
    return *corpus;
}

/// Degree-3 polymatroidal corpus, normalized to full support and gcd 1.
const std::vector<MonomialIdeal>& polymatroidal_corpus_deg3() {
    static std::vector<MonomialIdeal>* corpus = [] {
        auto* out = new std::vector<MonomialIdeal>;
        for (const auto& ideal : matroidal_corpus(3)) out->push_back(ideal);
        for (auto& ideal : veronese_corpus(3)) out->push_back(std::move(ideal));
        const MonomialIdeal base53 = squarefree_veronese(5, 3);
        for (const auto& omit : base53.generators())
            push_normalized(*out, almost_squarefree_veronese(5, 3, omit));
        push_normalized(*out, product_of_primes(6, {{1, 2}, {3, 4}, {5, 6}}));
        push_normalized(*out, product_of_primes(5, {{1, 2}, {3, 4, 5}}));
        push_normalized(*out, colon(power(squarefree_veronese(5, 3), 2), parse_monomial("x1*x2*x3", 5)));
        out->push_back(regression_polymatroidal_cubic());
        dedupe(*out);
        return out;
    }();
    return *corpus;
}

std::vector<MonomialIdeal> polymatroidal_corpus_all() {
    std::vector<MonomialIdeal> out = polymatroidal_corpus_deg2();
    for (const auto& ideal : polymatroidal_corpus_deg3()) out.push_back(ideal);
    return out;
}

// ---------------------------------------------------------------------------
// Structural helpers

bool is_product_of_disjoint_primes(const MonomialIdeal& ideal, int degree) {
    LinearRelationGraph graph = linear_relation_graph(ideal);
    if (graph.component_count() != degree) return false;
    if (graph.vertices != ideal.support()) return false;
    std::vector<std::vector<int>> parts;
    for (auto mask : graph.components) parts.push_back(mask_to_vars_one_based(mask));
    return product_of_primes(ideal.dim(), parts) == ideal;
}

struct PrimeDecomposition {
    bool all_prime = false;
    bool pairwise_disjoint = false;
    int count = 0;
};

PrimeDecomposition analyze_prime_decomposition(const MonomialIdeal& ideal) {
    auto comps = irreducible_decomposition(ideal);
    PrimeDecomposition info;
    info.count = static_cast<int>(comps.size());
    info.all_prime = true;
    info.pairwise_disjoint = true;
    std::uint64_t seen = 0;
    for (const auto& comp : comps) {
        for (auto [var, exp] : comp.bounds)
            if (exp != 1) info.all_prime = false;
        if ((seen & comp.support()) != 0) info.pairwise_disjoint = false;
        seen |= comp.support();
    }
    return info;
}

MonomialIdeal maximal_ideal(int n) {
    std::vector<Monomial> vars;
    for (int i = 0; i < n; ++i) vars.push_back(Monomial::variable(n, i));
    return minimalize(n, std::move(vars));
}

/// Witness finder: generators u, v, w and variables x_i, x_j with
/// x_i u = x_j v and x_i x_j dividing w.
bool find_edge_cover_witness(const MonomialIdeal& ideal) {
    LinearRelationGraph graph = linear_relation_graph(ideal);
    for (auto [i, j] : graph.edges) {
        const std::uint64_t pair_mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        for (const auto& w : ideal.generators())
            if ((w.support() & pair_mask) == pair_mask) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// The checks

TheoremCheckResult check_thm_1_1(const VerifyConfig& config) {
    CheckBuilder builder("thm-1.1", "exhaustive matroidal ideals, degrees 2-4, up to 6 variables");
    for (int d : {2, 3, 4}) {
        for (const auto& ideal : matroidal_corpus(d)) {
            auto stab = certified_stability(ideal, config.max_power);
            if (!stab) {
                builder.skip();
                continue;
            }
            LinearRelationGraph graph = linear_relation_graph(ideal);
            const int s = graph.component_count();
            bool ok = s <= d;
            std::string detail = "component count exceeds the degree";
            if (ok) {
                const bool full_vertices = graph.vertices == full_mask(ideal.dim());
                ok = (full_vertices && s == d) == (stab->dstab == 1);
                detail = "full vertex set with s = d does not match dstab = 1";
            }
            if (ok) {
                detail = "a generator avoids a component prime";
                for (const auto& gen : ideal.generators())
                    for (auto mask : graph.components)
                        if ((gen.support() & mask) == 0) ok = false;
            }
            if (ok) {
                ok = (stab->dstab == 1) == is_product_of_disjoint_primes(ideal, d);
                detail = "dstab = 1 does not match the disjoint prime product structure";
            }
            builder.instance(ok, ideal, detail);
        }
    }
    return builder.finalize();
}

TheoremCheckResult check_lem_2_1(const VerifyConfig& config) {
    (void)config;
    CheckBuilder builder("lem-2.1",
                         "degree-3 polymatroidal ideals whose single-variable localizations are "
                         "intersections of disjoint primes, plus the degree-2 counterexample");
    for (const auto& ideal : polymatroidal_corpus_deg3()) {
        const int d = ideal.generator_degree();
        bool hypothesis = true;
        for (int k = 0; k < ideal.dim() && hypothesis; ++k) {
            Localization loc = try_localize(ideal, full_mask(ideal.dim()) & ~(std::uint64_t{1} << k));
            if (loc.unit) {
                hypothesis = false;
                break;
            }
            PrimeDecomposition info = analyze_prime_decomposition(loc.ideal);
            hypothesis = info.all_prime && info.pairwise_disjoint && info.count == d - 1;
        }
        if (!hypothesis) continue;
        PrimeDecomposition info = analyze_prime_decomposition(ideal);
        builder.instance(info.all_prime && info.pairwise_disjoint && info.count == d, ideal,
                         "localizations split into disjoint primes but the ideal does not");
    }
    // The degree-2 regression ideal satisfies the localization hypothesis yet
    // is not an intersection of two disjoint primes.
    MonomialIdeal octa = regression_matroidal_octahedron();
    bool hypothesis = true;
    for (int k = 0; k < octa.dim(); ++k) {
        MonomialIdeal loc = localize(octa, MonomialPrime::omitting(octa.dim(), {k + 1}));
        PrimeDecomposition info = analyze_prime_decomposition(loc);
        hypothesis = hypothesis && info.all_prime && info.count == 1;
    }
    PrimeDecomposition info = analyze_prime_decomposition(octa);
    bool conclusion_fails = !(info.all_prime && info.pairwise_disjoint && info.count == 2);
    builder.instance(hypothesis && conclusion_fails, octa,
                     "degree-2 counterexample unexpectedly satisfies the conclusion");
    return builder.finalize();
}

TheoremCheckResult check_ex_2_2(const VerifyConfig& config) {
    (void)config;
    CheckBuilder builder("ex-2.2", "fixed 12-generator degree-2 matroidal regression ideal");
    MonomialIdeal ideal = regression_matroidal_octahedron();

    builder.instance(is_matroidal(ideal) && ideal.size() == 12 && ideal.generator_degree() == 2,
                     ideal, "regression ideal lost its shape");

    AssociatedPrimes expected_ass;
    expected_ass.n = 6;
    expected_ass.primes = {MonomialPrime::of_vars(6, {1, 2, 3, 4}).mask(),
                           MonomialPrime::of_vars(6, {1, 2, 5, 6}).mask(),
                           MonomialPrime::of_vars(6, {3, 4, 5, 6}).mask()};
    std::sort(expected_ass.primes.begin(), expected_ass.primes.end());
    builder.instance(associated_primes(ideal) == expected_ass, ideal, "associated primes changed");
    builder.instance(ass_colon_oracle(ideal) == expected_ass, ideal, "colon oracle disagrees");
    builder.instance(ass_polymatroidal_fast(ideal) == expected_ass, ideal, "fast path disagrees");

    auto comps = irreducible_decomposition(ideal);
    MonomialIdeal meet(6);
    bool first = true;
    bool all_prime = true;
    for (const auto& comp : comps) {
        for (auto [var, exp] : comp.bounds) all_prime = all_prime && exp == 1;
        meet = first ? comp.to_ideal() : intersect(meet, comp.to_ideal());
        first = false;
    }
    builder.instance(comps.size() == 3 && all_prime && meet == ideal, ideal,
                     "irreducible decomposition is not the displayed triple intersection");

    const std::vector<std::pair<int, std::vector<int>>> expected_localizations = {
        {1, {3, 4, 5, 6}}, {2, {3, 4, 5, 6}}, {3, {1, 2, 5, 6}},
        {4, {1, 2, 5, 6}}, {5, {1, 2, 3, 4}}, {6, {1, 2, 3, 4}}};
    for (const auto& [var, expected_vars] : expected_localizations) {
        MonomialIdeal loc = localize(ideal, MonomialPrime::omitting(6, {var}));
        std::vector<Monomial> gens;
        for (int v : expected_vars) gens.push_back(Monomial::variable(6, v - 1));
        builder.instance(loc == minimalize(6, std::move(gens)), ideal,
                         "single-variable localization differs from the displayed prime");
    }
    return builder.finalize();
}

TheoremCheckResult check_thm_2_3(const VerifyConfig& config) {
    CheckBuilder builder("thm-2.3", "exhaustive matroidal ideals, degrees 2-4, up to 6 variables");
    for (int d : {2, 3, 4}) {
        for (const auto& ideal : matroidal_corpus(d)) {
            auto stab = certified_stability(ideal, config.max_power);
            if (!stab) {
                builder.skip();
                continue;
            }
            bool ok = (stab->astab == 1) == (stab->dstab == 1);
            std::string detail = "astab = 1 does not match dstab = 1";
            if (ok && stab->dstab == 1) {
                ok = is_product_of_disjoint_primes(ideal, d);
                detail = "index-1 stability without the disjoint prime product structure";
            }
            builder.instance(ok, ideal, detail);
        }
    }
    return builder.finalize();
}

TheoremCheckResult check_lem_2_4(const VerifyConfig& config) {
    (void)config;
    CheckBuilder builder("lem-2.4", "exhaustive matroidal ideals, degrees 2-4, up to 6 variables");
    for (int d : {2, 3, 4}) {
        for (const auto& ideal : matroidal_corpus(d)) {
            LinearRelationGraph graph = linear_relation_graph(ideal);
            bool ok = true;
            std::string detail = "edge containment";
            for (int k = 0; k < ideal.dim() && ok; ++k) {
                MonomialIdeal loc = localize(ideal, MonomialPrime::omitting(ideal.dim(), {k + 1}));
                LinearRelationGraph local = linear_relation_graph(loc);
                for (auto edge : local.edges) {
                    if (!std::binary_search(graph.edges.begin(), graph.edges.end(), edge)) {
                        ok = false;
                        detail = "a localized relation edge is missing from the ambient graph";
                    }
                }
                // Component count of the localized graph over the ambient
                // vertex set: vertices that lose all their edges under
                // localization stay behind as isolated components. This is
                // the count for which the inequality follows from edge
                // containment and is the form the depth-zero transfer uses.
                const int stranded = std::popcount(graph.vertices & ~local.vertices);
                if (ok && local.component_count() + stranded < graph.component_count()) {
                    ok = false;
                    detail = "localization decreased the component count over the ambient vertices";
                }
            }
            builder.instance(ok, ideal, detail);
        }
    }
    return builder.finalize();
}

TheoremCheckResult check_prop_2_5(const VerifyConfig& config) {
    CheckBuilder builder("prop-2.5",
                         "polymatroidal ideals with a degree-dropping localization whose maximal "
                         "ideal is stably associated");
    for (const auto& ideal : polymatroidal_corpus_all()) {
        const int d = ideal.generator_degree();
        for (int k = 0; k < ideal.dim(); ++k) {
            const std::uint64_t keep = full_mask(ideal.dim()) & ~(std::uint64_t{1} << k);
            Localization loc = try_localize(ideal, keep);
            if (loc.unit || !loc.ideal.is_equigenerated()) continue;
            if (loc.ideal.generator_degree() != d - 1) continue;
            MonomialIdeal restricted = restrict_to(loc.ideal, keep);
            auto local_stab = certified_stability(restricted, config.max_power);
            if (!local_stab) {
                builder.skip();
                continue;
            }
            if (!local_stab->stable_ass.contains_maximal) continue;
            auto stab = certified_stability(ideal, config.max_power);
            if (!stab) {
                builder.skip();
                continue;
            }
            builder.instance(stab->stable_ass.contains_maximal, ideal,
                             "localization keeps its maximal ideal stably associated but the "
                             "ambient ideal does not");
        }
    }
    return builder.finalize();
}

TheoremCheckResult check_lem_2_6(const VerifyConfig& config) {
    (void)config;
    CheckBuilder builder("lem-2.6",
                         "matroidal ideals with fewer relation components than their degree");
    for (int d : {2, 3, 4}) {
        for (const auto& ideal : matroidal_corpus(d)) {
            LinearRelationGraph graph = linear_relation_graph(ideal);
            if (graph.component_count() >= d) continue;
            builder.instance(find_edge_cover_witness(ideal), ideal,
                             "no generators u, v, w with x_i u = x_j v and x_i x_j | w");
        }
    }
    return builder.finalize();
}

TheoremCheckResult check_prop_2_7(const VerifyConfig& config) {
    CheckBuilder builder("prop-2.7", "exhaustive matroidal ideals with dstab > 1");
    for (int d : {2, 3, 4}) {
        for (const auto& ideal : matroidal_corpus(d)) {
            auto stab = certified_stability(ideal, config.max_power);
            if (!stab) {
                builder.skip();
                continue;
            }
            if (stab->dstab == 1) continue;
            builder.instance(stab->depths.at(1) < stab->depths.at(0), ideal,
                             "depth did not drop from the first power to the square");
        }
    }
    return builder.finalize();
}

TheoremCheckResult check_prop_2_8(const VerifyConfig& config) {
    CheckBuilder builder("prop-2.8",
                         "degree-3 matroidal ideals whose maximal ideal is never associated");
    for (const auto& ideal : matroidal_corpus(3)) {
        auto stab = certified_stability(ideal, config.max_power);
        if (!stab) {
            builder.skip();
            continue;
        }
        if (stab->stable_ass.contains_maximal) continue;
        builder.instance(stab->astab == stab->dstab && stab->astab <= 2, ideal,
                         "astab and dstab differ or exceed 2");
    }
    return builder.finalize();
}

TheoremCheckResult check_lem_2_9(const VerifyConfig& config) {
    CheckBuilder builder("lem-2.9",
                         "degree-2 polymatroidal ideals whose maximal ideal is stably associated");
    for (const auto& ideal : polymatroidal_corpus_deg2()) {
        auto stab = certified_stability(ideal, config.max_power);
        if (!stab) {
            builder.skip();
            continue;
        }
        if (!stab->stable_ass.contains_maximal) continue;
        builder.instance(stab->astab == stab->dstab && stab->astab <= 2, ideal,
                         "astab and dstab differ or exceed 2");
    }
    return builder.finalize();
}

TheoremCheckResult check_prop_2_10(const VerifyConfig& config) {
    CheckBuilder builder("prop-2.10",
                         "degree-3 polymatroidal ideals with the maximal ideal stably associated "
                         "but not associated at the first power; pinned counterexample otherwise");
    for (const auto& ideal : polymatroidal_corpus_deg3()) {
        auto stab = certified_stability(ideal, config.max_power);
        if (!stab) {
            builder.skip();
            continue;
        }
        if (!stab->stable_ass.contains_maximal || stab->first_ass.contains_maximal) continue;
        builder.instance(stab->astab == stab->dstab, ideal, "astab differs from dstab");
    }
    // With the maximal ideal associated from the start the equality is known
    // to fail: the regression ideal has dstab 1 and astab 2.
    MonomialIdeal pinned = regression_polymatroidal_cubic();
    auto stab = certified_stability(pinned, config.max_power);
    if (!stab) {
        builder.skip();
    } else {
        builder.instance(stab->first_ass.contains_maximal && stab->astab != stab->dstab, pinned,
                         "pinned counterexample no longer separates astab from dstab");
    }
    return builder.finalize();
}

TheoremCheckResult check_ex_2_11(const VerifyConfig& config) {
    CheckBuilder builder("ex-2.11", "fixed 10-generator degree-3 polymatroidal regression ideal");
    MonomialIdeal ideal = regression_polymatroidal_cubic();

    builder.instance(is_polymatroidal(ideal).ok && ideal.size() == 10 && ideal.generator_degree() == 3,
                     ideal, "regression ideal lost its shape");
    AssociatedPrimes first = associated_primes(ideal);
    builder.instance(first.contains_maximal, ideal, "maximal ideal is not associated at power 1");
    builder.instance(depth_from_linear_quotients(ideal) == 0 && depth_oracle(ideal) == 0, ideal,
                     "depth at power 1 is not 0");

    auto stab = certified_stability(ideal, config.max_power);
    if (!stab) {
        builder.result.note = "stability assertions skipped: horizon below the certified bound";
    } else {
        builder.instance(stab->dstab == 1, ideal, "dstab is not 1");
        builder.instance(stab->astab == 2, ideal, "astab is not 2");
        bool grows = stab->first_ass.primes.size() < stab->stable_ass.primes.size();
        builder.instance(grows, ideal, "Ass(I) did not grow into the stable set");
    }
    return builder.finalize();
}

TheoremCheckResult check_cor_2_12_13(const VerifyConfig& config) {
    CheckBuilder builder("cor-2.12-13", "exhaustive degree-3 matroidal ideals up to 6 variables");
    for (const auto& ideal : matroidal_corpus(3)) {
        auto stab = certified_stability(ideal, config.max_power);
        if (!stab) {
            builder.skip();
            continue;
        }
        builder.instance(stab->astab == stab->dstab, ideal, "astab differs from dstab");
    }
    return builder.finalize();
}

TheoremCheckResult check_prop_2_14(const VerifyConfig& config) {
    CheckBuilder builder("prop-2.14",
                         "degree-3 polymatroidal ideals whose maximal ideal is never associated");
    for (const auto& ideal : polymatroidal_corpus_deg3()) {
        auto stab = certified_stability(ideal, config.max_power);
        if (!stab) {
            builder.skip();
            continue;
        }
        if (stab->stable_ass.contains_maximal) continue;
        builder.instance(stab->astab == stab->dstab, ideal, "astab differs from dstab");
    }
    return builder.finalize();
}

TheoremCheckResult check_prop_2_15(const VerifyConfig& config) {
    CheckBuilder builder("prop-2.15", "almost square-free Veronese ideals with gcd 1");
    for (auto [n, d] : kAlmostSquarefreeTable) {
        const MonomialIdeal base = squarefree_veronese(n, d);
        std::vector<std::optional<Monomial>> omissions = {std::nullopt};
        for (const auto& g : base.generators()) omissions.emplace_back(g);
        for (const auto& omit : omissions) {
            MonomialIdeal ideal = almost_squarefree_veronese(n, d, omit);
            if (!ideal.gcd_of_generators().is_one()) continue;
            auto stab = certified_stability(ideal, config.max_power);
            if (!stab) {
                builder.skip();
                continue;
            }
            builder.instance(stab->stable_ass.contains_maximal, ideal,
                             "maximal ideal is not stably associated");
        }
    }
    return builder.finalize();
}

/// Degree-(d-1) multiplier supported on the complement of supp(u) with all
/// exponents at most k-1, filled from the lowest complement variable. Such a
/// multiplier exists precisely when k >= ceil((n-1)/(n-d)), which is what
/// makes the colon identity detect the stable power. When d - 1 fits
/// square-free into the complement this is the plain product of the first
/// d - 1 variables off supp(u).
Monomial stable_power_multiplier(int n, int d, int k, const Monomial& u) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    int remaining = d - 1;
    for (int v = 0; v < n && remaining > 0; ++v) {
        if ((u.support() >> v) & 1u) continue;
        int take = std::min(remaining, k - 1);
        exps[static_cast<std::size_t>(v)] = take;
        remaining -= take;
    }
    if (remaining > 0) throw std::logic_error("no stable-power multiplier below the stable power");
    return Monomial(std::move(exps));
}

TheoremCheckResult check_thm_2_16(const VerifyConfig& config) {
    CheckBuilder builder("thm-2.16",
                         "almost square-free Veronese ideals: stability indices and the colon "
                         "identity at the stable power");
    for (auto [n, d] : kAlmostSquarefreeTable) {
        const int k = (n - 2) / (n - d) + 1;  // ceil((n-1)/(n-d))
        MonomialIdeal base = squarefree_veronese(n, d);
        std::vector<std::optional<Monomial>> omissions = {std::nullopt};
        for (const auto& g : base.generators()) omissions.emplace_back(g);
        for (const auto& omit : omissions) {
            MonomialIdeal ideal = almost_squarefree_veronese(n, d, omit);
            if (!ideal.gcd_of_generators().is_one()) continue;
            auto stab = certified_stability(ideal, config.max_power);
            if (!stab) {
                builder.skip();
                continue;
            }
            builder.instance(stab->astab == k && stab->dstab == k, ideal,
                             "astab/dstab differ from ceil((n-1)/(n-d))");

            // Colon identity at the stable power: with u the omitted
            // generator (the last d variables when nothing is omitted) and v
            // a degree-(d-1) multiplier off supp(u) with exponents < k,
            //   I_{d;n}^k : u^{k-1} v = m
            // for every omission, and the same with the almost square-free
            // ideal in place of I_{d;n} once d >= 3. At d = 2 the latter
            // genuinely fails (the memberships x_j u^{k-1} v for
            // x_j | u would need u itself as a factor), so the d = 2 rows
            // pin the failure instead.
            Monomial u = omit ? *omit : base.generators().back();
            Monomial w = u.pow(k - 1).times(stable_power_multiplier(n, d, k, u));

            bool full_identity = false;
            try {
                full_identity = colon(power(base, k), w) == maximal_ideal(n);
            } catch (const UnitIdealError&) {
                full_identity = false;
            }
            builder.instance(full_identity, ideal,
                             "colon identity against the full square-free Veronese power failed");

            bool omitted_identity = false;
            try {
                omitted_identity = colon(power(ideal, k), w) == maximal_ideal(n);
            } catch (const UnitIdealError&) {
                omitted_identity = false;
            }
            if (d >= 3) {
                builder.instance(omitted_identity, ideal, "colon identity at the stable power failed");
            } else if (omit) {
                builder.instance(!omitted_identity, ideal,
                                 "documented degree-2 colon failure unexpectedly holds");
            }
        }
    }
    return builder.finalize();
}

// ---------------------------------------------------------------------------
// Registry and runner

using CheckFunction = TheoremCheckResult (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, CheckFunction>>& registry() {
    static const std::vector<std::pair<std::string, CheckFunction>> checks = {
        {"thm-1.1", check_thm_1_1},     {"lem-2.1", check_lem_2_1},
        {"ex-2.2", check_ex_2_2},       {"thm-2.3", check_thm_2_3},
        {"lem-2.4", check_lem_2_4},     {"prop-2.5", check_prop_2_5},
        {"lem-2.6", check_lem_2_6},     {"prop-2.7", check_prop_2_7},
        {"prop-2.8", check_prop_2_8},   {"lem-2.9", check_lem_2_9},
        {"prop-2.10", check_prop_2_10}, {"ex-2.11", check_ex_2_11},
        {"cor-2.12-13", check_cor_2_12_13}, {"prop-2.14", check_prop_2_14},
        {"prop-2.15", check_prop_2_15}, {"thm-2.16", check_thm_2_16},
    };
    return checks;
}

int resolve_threads(const VerifyConfig& config) {
    if (config.threads > 0) return config.threads;
    if (const char* env = std::getenv("POLYMAT_THREADS")) {
        int value = std::atoi(env);
        if (value > 0) return value;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

TheoremCheckResult run_check(const std::string& id, const VerifyConfig& config) {
    for (const auto& [name, fn] : registry()) {
        if (name != id) continue;
        auto start = std::chrono::steady_clock::now();
        TheoremCheckResult result = fn(config);
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }
    throw std::invalid_argument("unknown check id: " + id);
}

std::vector<TheoremCheckResult> run_suite(const VerifyConfig& config) {
    std::vector<std::string> ids;
    if (config.only.empty()) {
        ids = check_ids();
    } else {
        for (const auto& id : config.only) {
            if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
                throw std::invalid_argument("unknown check id: " + id);
            ids.push_back(id);
        }
    }

    std::vector<TheoremCheckResult> results(ids.size());
    std::atomic<std::size_t> next{0};
    const int threads = std::min<int>(resolve_threads(config), static_cast<int>(ids.size()));
    auto worker = [&] {
        for (;;) {
            std::size_t index = next.fetch_add(1);
            if (index >= ids.size()) return;
            results[index] = run_check(ids[index], config);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    return results;
}

std::string suite_json(const std::vector<TheoremCheckResult>& results) {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& result : results) {
        nlohmann::json c;
        c["id"] = result.id;
        c["status"] = to_string(result.status);
        c["instances"] = result.instances;
        c["skipped"] = result.skipped;
        c["corpus"] = result.corpus;
        c["witnesses"] = result.witnesses;
        c["seconds"] = result.seconds;
        if (!result.note.empty()) c["note"] = result.note;
        j["checks"].push_back(std::move(c));
    }
    return j.dump();
}

std::string suite_table(const std::vector<TheoremCheckResult>& results) {
    std::ostringstream out;
    out << "check         status        instances  skipped  seconds\n";
    out << "------------  ------------  ---------  -------  -------\n";
    for (const auto& result : results) {
        out << result.id;
        for (std::size_t i = result.id.size(); i < 14; ++i) out << ' ';
        std::string status = to_string(result.status);
        out << status;
        for (std::size_t i = status.size(); i < 14; ++i) out << ' ';
        std::string inst = std::to_string(result.instances);
        for (std::size_t i = inst.size(); i < 9; ++i) out << ' ';
        out << inst << "  ";
        std::string skip = std::to_string(result.skipped);
        for (std::size_t i = skip.size(); i < 7; ++i) out << ' ';
        out << skip << "  ";
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%7.2f", result.seconds);
        out << buffer;
        if (!result.note.empty()) out << "  # " << result.note;
        out << '\n';
    }
    return out.str();
}

bool suite_failed(const std::vector<TheoremCheckResult>& results) {
    return std::any_of(results.begin(), results.end(),
                       [](const TheoremCheckResult& r) { return r.status == CheckStatus::Fail; });
}

TheoremCheckResult run_predicate_check(
    const std::string& id, const std::string& corpus_desc,
    const std::vector<MonomialIdeal>& corpus,
    const std::function<bool(const MonomialIdeal&, std::string& detail)>& predicate) {
    CheckBuilder builder(id, corpus_desc);
    for (const auto& ideal : corpus) {
        std::string detail = "predicate failed";
        bool ok = predicate(ideal, detail);
        builder.instance(ok, ideal, detail);
    }
    return builder.finalize();
}

MonomialIdeal regression_matroidal_octahedron() {
    return parse_ideal(
        "ring 6\n"
        "x1*x3, x1*x4, x1*x5, x1*x6\n"
        "x2*x3, x2*x4, x2*x5, x2*x6\n"
        "x3*x5, x3*x6, x4*x5, x4*x6\n");
}

MonomialIdeal regression_polymatroidal_cubic() {
    return parse_ideal(
        "ring 4\n"
        "x1*x2*x3, x2^2*x3, x2*x3^2\n"
        "x1*x2*x4, x2^2*x4, x2*x4^2\n"
        "x1*x3*x4, x3^2*x4, x3*x4^2\n"
        "x2*x3*x4\n");
}

}  // namespace polymat
