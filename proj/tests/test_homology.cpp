#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "polymat/families.hpp"
#include "polymat/homology.hpp"
#include "polymat/structure.hpp"
#include "polymat/verify.hpp"
#include "test_support.hpp"

using namespace polymat;
using testsupport::ideal_of;
using testsupport::mono;

TEST_CASE("lcm lattice") {
    SUBCASE("two variables") {
        auto lattice = lcm_lattice(ideal_of("ring 2\nx1, x2\n"));
        CHECK(lattice == std::vector<Monomial>{mono("x1", 2), mono("x2", 2), mono("x1*x2", 2)});
    }
    SUBCASE("overlapping quadratics") {
        auto lattice = lcm_lattice(ideal_of("ring 3\nx1*x2, x2*x3\n"));
        CHECK(lattice.size() == 3);
        CHECK(std::find(lattice.begin(), lattice.end(), mono("x1*x2*x3", 3)) != lattice.end());
    }
    SUBCASE("maximal-primary square") {
        auto lattice = lcm_lattice(ideal_of("ring 2\nx1^2, x1*x2, x2^2\n"));
        CHECK(lattice.size() == 6);
        CHECK(std::find(lattice.begin(), lattice.end(), mono("x1^2*x2^2", 2)) != lattice.end());
    }
    SUBCASE("generator budget") {
        HomologyBudget tiny;
        tiny.max_generators = 3;
        CHECK_THROWS_AS(lcm_lattice(squarefree_veronese(4, 2), tiny), BudgetExceeded);
    }
}

TEST_CASE("Betti tables of hand-checked ideals") {
    SUBCASE("two variables: Koszul complex") {
        BettiTable table = betti_table(ideal_of("ring 2\nx1, x2\n"));
        CHECK(table.pd == 2);
        CHECK(table.depth == 0);
        int beta0 = 0, beta1 = 0;
        for (const auto& entry : table.entries) {
            if (entry.i == 0) beta0 += entry.rank;
            if (entry.i == 1) beta1 += entry.rank;
        }
        CHECK(beta0 == 2);
        CHECK(beta1 == 1);
    }
    SUBCASE("principal ideal has pd(R/I) = 1") {
        BettiTable table = betti_table(ideal_of("ring 3\nx1*x2\n"));
        CHECK(table.pd == 1);
        CHECK(table.depth == 2);
    }
    SUBCASE("maximal-primary square in two variables") {
        BettiTable table = betti_table(ideal_of("ring 2\nx1^2, x1*x2, x2^2\n"));
        CHECK(table.pd == 2);
        CHECK(table.depth == 0);
        int beta1 = 0;
        for (const auto& entry : table.entries)
            if (entry.i == 1) beta1 += entry.rank;
        CHECK(beta1 == 2);
    }
}

TEST_CASE("Betti table invariants") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 40; ++round) {
        MonomialIdeal ideal = testsupport::random_ideal(rng, 4, 5, 2);
        BettiTable table = betti_table(ideal);
        CHECK(table.depth + table.pd == 4);
        CHECK(table.pd >= 1);
        int beta0 = 0;
        for (const auto& entry : table.entries) {
            CHECK(entry.rank > 0);
            if (entry.i == 0) beta0 += entry.rank;
        }
        CHECK(beta0 == static_cast<int>(ideal.size()));
    }
}

TEST_CASE("Betti table ignores generator input order") {
    std::mt19937_64 rng(59);
    MonomialIdeal ideal = testsupport::random_ideal(rng, 4, 6, 2);
    auto gens = ideal.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    MonomialIdeal reordered = minimalize(4, gens);
    BettiTable a = betti_table(ideal);
    BettiTable b = betti_table(reordered);
    CHECK(a.pd == b.pd);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].i == b.entries[i].i);
        CHECK(a.entries[i].a == b.entries[i].a);
        CHECK(a.entries[i].rank == b.entries[i].rank);
    }
}

TEST_CASE("pd = q + 1 for linear-quotient ideals") {
    std::vector<MonomialIdeal> corpus = {
        squarefree_veronese(4, 2),
        veronese_type(VeroneseSpec{3, 2, {1, 2, 2}}),
        veronese_type(VeroneseSpec{4, 3, {1, 1, 2, 2}}),
        regression_polymatroidal_cubic(),
    };
    for (const auto& ideal : enumerate_matroidal(5, 2)) corpus.push_back(ideal);
    for (const auto& ideal : corpus) {
        LinearQuotientsReport lq = linear_quotients_q(ideal);
        REQUIRE(lq.linear);
        CHECK(betti_table(ideal).pd == lq.q + 1);
    }
}

TEST_CASE("depth oracle matches the closed forms") {
    CHECK(depth_oracle(ideal_of("ring 4\nx1, x2, x3, x4\n")) == 0);
    CHECK(depth_oracle(squarefree_veronese(4, 2)) == 1);
    CHECK(depth_oracle(ideal_of("ring 4\nx1*x3, x2*x4\n")) == 2);  // complete intersection

    SUBCASE("full-supported matroidal ideals have depth d - 1") {
        for (int d : {2, 3}) {
            for (int n = d + 1; n <= 5; ++n)
                for (const auto& ideal : enumerate_matroidal(n, d))
                    CHECK(depth_oracle(ideal) == d - 1);
        }
    }
    SUBCASE("square of the degree-2 Veronese drops to depth 0") {
        MonomialIdeal square = power(squarefree_veronese(4, 2), 2);
        int via_homology = depth_oracle(square);
        CHECK(via_homology == 0);
        CHECK(via_homology == depth_from_linear_quotients(square));
    }
}

TEST_CASE("homology cost budget") {
    HomologyBudget tiny;
    tiny.max_cost = 8;
    CHECK_THROWS_AS(betti_table(squarefree_veronese(5, 2), tiny), BudgetExceeded);
}

TEST_CASE("Betti JSON schema") {
    BettiTable table = betti_table(ideal_of("ring 2\nx1, x2\n"));
    auto j = nlohmann::json::parse(betti_json(table));
    CHECK(j["pd"] == 2);
    CHECK(j["depth"] == 0);
    REQUIRE(j["betti"].is_array());
    CHECK(j["betti"].size() == 3);
    CHECK(j["betti"][0].contains("i"));
    CHECK(j["betti"][0].contains("a"));
    CHECK(j["betti"][0].contains("rank"));
}
