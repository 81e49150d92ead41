#include <doctest.h>

#include "test_helpers.hpp"
#include "tsplab/local_search.hpp"
#include "tsplab/rng.hpp"

using namespace tsplab;

TEST_CASE("neighbor lists are exact, sorted and deterministic") {
    const Instance inst = testutil::load_data_instance("eil51.tsp");
    const NeighborLists nl = build_neighbor_lists(inst, 10);
    const NeighborLists again = build_neighbor_lists(inst, 10);
    for (int city = 0; city < inst.num_cities(); ++city) {
        const auto list = nl.of(city);
        REQUIRE(list.size() == 10);
        for (std::size_t i = 0; i < list.size(); ++i) {
            CHECK(list[i] != city);
            CHECK(list[i] == again.of(city)[i]);
            if (i > 0)
                CHECK(inst.distance(city, list[i - 1]) <= inst.distance(city, list[i]));
        }
        // Exactness: nothing outside the list is closer than the last entry.
        const int worst = inst.distance(city, list.back());
        for (int other = 0; other < inst.num_cities(); ++other) {
            if (other == city)
                continue;
            bool listed = false;
            for (int candidate : list)
                listed |= candidate == other;
            if (!listed)
                CHECK(inst.distance(city, other) >= worst);
        }
    }
}

TEST_CASE("neighbor list ties break by city index") {
    // Unit square: sides and diagonals all round to distance 1, so city 0
    // lists {1, 2}; on the side-10 square the diagonal loses.
    const NeighborLists unit = build_neighbor_lists(testutil::unit_square(), 2);
    CHECK(unit.of(0)[0] == 1);
    CHECK(unit.of(0)[1] == 2);

    const NeighborLists wide = build_neighbor_lists(testutil::square10(), 2);
    CHECK(wide.of(0)[0] == 1);
    CHECK(wide.of(0)[1] == 3);
}

TEST_CASE("full adjacency at k = m-1") {
    const Instance inst = testutil::square10();
    const NeighborLists nl = build_neighbor_lists(inst, 3);
    for (int city = 0; city < 4; ++city)
        CHECK(nl.of(city).size() == 3);
}

TEST_CASE("two_opt uncrosses the square diagonals") {
    const Instance inst = testutil::square10();
    const NeighborLists nl = build_neighbor_lists(inst, 3);
    const Tour crossed = make_tour(inst, {0, 2, 1, 3});
    REQUIRE(crossed.cost == 48);
    const Tour improved = two_opt(inst, crossed, nl);
    CHECK(improved.cost == 40);
    CHECK(tours_equal(improved, make_tour(inst, {0, 1, 2, 3})));
}

TEST_CASE("two_opt never worsens and fixes a local optimum") {
    const Instance inst = testutil::load_data_instance("berlin52.tsp");
    const NeighborLists nl = build_neighbor_lists(inst, 10);
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Tour t = random_tour(inst, rng);
        const Tour improved = two_opt(inst, t, nl);
        CHECK(improved.cost <= t.cost);
        CHECK(is_permutation(improved.order, inst.num_cities()));
        CHECK(improved.cost == tour_cost(inst, improved.order));
        const Tour again = two_opt(inst, improved, nl);
        CHECK(again.cost == improved.cost);
    }
}

TEST_CASE("full-neighborhood two_opt is idempotent in cost") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = rng.uniform_int(6, 20);
        const Instance inst = testutil::random_instance(m, 8000 + trial);
        const NeighborLists nl = build_neighbor_lists(inst, m - 1);
        const Tour t = make_tour(inst, testutil::random_permutation(m, rng));
        const Tour once = two_opt(inst, t, nl);
        const Tour twice = two_opt(inst, once, nl);
        CHECK(twice.cost == once.cost);
    }
}

TEST_CASE("two_opt never beats the exhaustive optimum on tiny instances") {
    Rng rng(29);
    for (int m = 5; m <= 8; ++m) {
        for (int trial = 0; trial < 5; ++trial) {
            const Instance inst = testutil::random_instance(m, 100 * m + trial);
            const std::int64_t optimum = testutil::brute_force_optimum(inst);
            const NeighborLists nl = build_neighbor_lists(inst, m - 1);
            int exact_hits = 0;
            for (int run = 0; run < 10; ++run) {
                const Tour t = make_tour(inst, testutil::random_permutation(m, rng));
                const Tour improved = two_opt(inst, t, nl);
                CHECK(improved.cost >= optimum);
                exact_hits += improved.cost == optimum;
            }
            CHECK(exact_hits > 0); // equality is frequent at this size
        }
    }
}

TEST_CASE("or-opt relocation also improves and stays valid") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = rng.uniform_int(8, 30);
        const Instance inst = testutil::random_instance(m, 9000 + trial);
        const NeighborLists nl = build_neighbor_lists(inst, std::min(10, m - 1));
        const Tour t = make_tour(inst, testutil::random_permutation(m, rng));
        const Tour with_or = two_opt(inst, t, nl, {true});
        CHECK(with_or.cost <= t.cost);
        CHECK(is_permutation(with_or.order, m));
        CHECK(with_or.cost == tour_cost(inst, with_or.order));
        // A settled tour is also or-opt stable.
        CHECK(two_opt(inst, with_or, nl, {true}).cost == with_or.cost);
    }
}
