#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "polymat/decomposition.hpp"
#include "polymat/families.hpp"
#include "polymat/structure.hpp"
#include "polymat/verify.hpp"
#include "test_support.hpp"

using namespace polymat;
using testsupport::ideal_of;
using testsupport::mono;

namespace {

MonomialIdeal intersection_of(int n, const std::vector<IrreducibleComponent>& comps) {
    MonomialIdeal meet(n);
    bool first = true;
    for (const auto& comp : comps) {
        meet = first ? comp.to_ideal() : intersect(meet, comp.to_ideal());
        first = false;
    }
    return meet;
}

}  // namespace

TEST_CASE("irreducible decomposition examples") {
    SUBCASE("(x1^2, x1 x2)") {
        auto comps = irreducible_decomposition(ideal_of("ring 2\nx1^2, x1*x2\n"));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].to_ideal() == ideal_of("ring 2\nx1\n"));
        CHECK(comps[1].to_ideal() == ideal_of("ring 2\nx1^2, x2\n"));
    }
    SUBCASE("principal square-free generator splits into variables") {
        auto comps = irreducible_decomposition(ideal_of("ring 2\nx1*x2\n"));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].to_ideal() == ideal_of("ring 2\nx1\n"));
        CHECK(comps[1].to_ideal() == ideal_of("ring 2\nx2\n"));
    }
    SUBCASE("regression ideal decomposes into the three displayed primes") {
        MonomialIdeal octa = regression_matroidal_octahedron();
        auto comps = irreducible_decomposition(octa);
        REQUIRE(comps.size() == 3);
        for (const auto& comp : comps)
            for (auto [var, exp] : comp.bounds) CHECK(exp == 1);
        CHECK(intersection_of(6, comps) == octa);
    }
}

TEST_CASE("decomposition intersection reproduces the ideal") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 60; ++round) {
        MonomialIdeal ideal = testsupport::random_ideal(rng, 4, 5, 3);
        auto comps = irreducible_decomposition(ideal);
        CHECK(intersection_of(4, comps) == ideal);
        // Irredundance: dropping any component changes the intersection.
        if (comps.size() > 1) {
            for (std::size_t skip = 0; skip < comps.size(); ++skip) {
                std::vector<IrreducibleComponent> rest;
                for (std::size_t i = 0; i < comps.size(); ++i)
                    if (i != skip) rest.push_back(comps[i]);
                CHECK(intersection_of(4, rest) != ideal);
            }
        }
    }
}

TEST_CASE("decomposition is deterministic and budget guarded") {
    MonomialIdeal ideal = ideal_of("ring 3\nx1^2*x2, x2^2*x3, x1*x3^2\n");
    auto first = irreducible_decomposition(ideal);
    auto second = irreducible_decomposition(ideal);
    CHECK(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);

    DecompositionBudget tiny;
    tiny.max_nodes = 1;
    tiny.memo_capacity = 0;
    CHECK_THROWS_AS(irreducible_decomposition(squarefree_veronese(5, 2), tiny), BudgetExceeded);
}

TEST_CASE("associated primes examples") {
    SUBCASE("maximal-primary square") {
        AssociatedPrimes ass = associated_primes(ideal_of("ring 2\nx1^2, x1*x2, x2^2\n"));
        CHECK(ass.primes == std::vector<std::uint64_t>{0b11});
        CHECK(ass.contains_maximal);
    }
    SUBCASE("square-free Veronese of degree 2 on four variables") {
        AssociatedPrimes ass = associated_primes(squarefree_veronese(4, 2));
        CHECK(ass.primes.size() == 4);
        for (auto mask : ass.primes) CHECK(std::popcount(mask) == 3);
        CHECK_FALSE(ass.contains_maximal);
        CHECK(ass == ass_colon_oracle(squarefree_veronese(4, 2)));
    }
    SUBCASE("regression cubic has the maximal ideal associated") {
        CHECK(associated_primes(regression_polymatroidal_cubic()).contains_maximal);
    }
}

TEST_CASE("colon enumeration oracle") {
    SUBCASE("simple examples") {
        AssociatedPrimes ass = ass_colon_oracle(ideal_of("ring 2\nx1^2, x1*x2, x2^2\n"));
        CHECK(ass.primes == std::vector<std::uint64_t>{0b11});
        AssociatedPrimes principal = ass_colon_oracle(ideal_of("ring 2\nx1*x2\n"));
        CHECK(principal.primes == std::vector<std::uint64_t>{0b01, 0b10});
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(ass_colon_oracle(ideal_of("ring 2\nx1^9, x2^9\n"), 10), BudgetExceeded);
    }
}

TEST_CASE("all three associated-prime routes agree") {
    std::mt19937_64 rng(43);

    SUBCASE("random small ideals: decomposition vs colon enumeration") {
        for (int round = 0; round < 60; ++round) {
            MonomialIdeal ideal = testsupport::random_ideal(rng, 3, 4, 2);
            CHECK(associated_primes(ideal) == ass_colon_oracle(ideal));
        }
    }
    SUBCASE("polymatroidal ideals: all three routes") {
        std::vector<MonomialIdeal> corpus = {
            squarefree_veronese(4, 2),
            squarefree_veronese(5, 2),
            veronese_type(VeroneseSpec{3, 2, {1, 2, 2}}),
            veronese_type(VeroneseSpec{4, 3, {1, 1, 2, 2}}),
            regression_polymatroidal_cubic(),
            regression_matroidal_octahedron(),
            product_of_primes(5, {{1, 2}, {3, 4, 5}}),
        };
        for (const auto& ideal : enumerate_matroidal(5, 2)) corpus.push_back(ideal);
        for (const auto& ideal : corpus) {
            AssociatedPrimes via_decomposition = associated_primes(ideal);
            CHECK(via_decomposition == ass_polymatroidal_fast(ideal));
            CHECK(via_decomposition == ass_colon_oracle(ideal));
        }
    }
    SUBCASE("fast path rejects non-polymatroidal input") {
        CHECK_THROWS_AS(ass_polymatroidal_fast(ideal_of("ring 2\nx1^2, x2^2\n")),
                        std::invalid_argument);
    }
}

TEST_CASE("persistence on polymatroidal ideals, recomputed per power") {
    std::vector<MonomialIdeal> corpus = {
        squarefree_veronese(4, 2),
        veronese_type(VeroneseSpec{3, 2, {1, 2, 2}}),
        regression_polymatroidal_cubic(),
        product_of_primes(4, {{1, 2}, {3, 4}}),
    };
    for (const auto& ideal : corpus) {
        AssociatedPrimes previous;
        for (int k = 1; k <= 4; ++k) {
            AssociatedPrimes current = ass_polymatroidal_fast(power(ideal, k));
            if (k > 1) {
                for (auto mask : previous.primes) CHECK(current.contains(mask));
            }
            previous = current;
        }
    }
}

TEST_CASE("depth zero exactly when the maximal ideal is associated") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 40; ++round) {
        MonomialIdeal ideal = testsupport::random_ideal(rng, 3, 4, 2);
        bool maximal_associated = associated_primes(ideal).contains_maximal;
        LinearQuotientsReport lq = linear_quotients_q(ideal);
        int depth = lq.linear ? ideal.dim() - lq.q - 1 : -1;
        if (depth >= 0) CHECK((depth == 0) == maximal_associated);
    }
}

TEST_CASE("decomposition JSON schema") {
    MonomialIdeal ideal = ideal_of("ring 2\nx1^2, x1*x2\n");
    auto comps = irreducible_decomposition(ideal);
    auto ass = associated_primes(ideal);
    auto j = nlohmann::json::parse(decomposition_json(comps, ass));
    REQUIRE(j["components"].is_array());
    CHECK(j["components"].size() == 2);
    CHECK(j["components"][0]["bounds"].is_object());
    CHECK(j["ass"].is_array());
    CHECK(j["ass"][0] == nlohmann::json::array({1}));
}
