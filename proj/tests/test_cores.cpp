#include <stdexcept>
#include "doctest.h"
#include "mullineux/cores.hpp"
#include "oracles.hpp"

using namespace mlx;

TEST_CASE("p-rim walks") {
    CHECK(p_rim(Partition({1, 1, 1}), 5) ==
          std::vector<Node>{{1, 1}, {2, 1}, {3, 1}});
    CHECK(p_rim(Partition({2, 2}), 5) == std::vector<Node>{{1, 2}, {2, 2}, {2, 1}});
    CHECK(p_rim(Partition({9}), 5) ==
          std::vector<Node>{{1, 9}, {1, 8}, {1, 7}, {1, 6}, {1, 5}});

    CHECK_THROWS_AS(p_rim(Partition{}, 5), std::invalid_argument);
    CHECK_THROWS_AS(p_rim(Partition({1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("stripping the p-rim") {
    const auto step = strip_p_rim(Partition({2, 2}), 5);
    CHECK(step.rest == Partition({1}));
    CHECK(step.rim_length == 3);
    CHECK(step.row_count == 2);

    const auto one = strip_p_rim(Partition({1}), 7);
    CHECK(one.rest.empty());
    CHECK(one.rim_length == 1);
    CHECK(one.row_count == 1);

    // Iterating strips conserves the box count and keeps remainders regular.
    Partition current({6, 6, 5, 4});
    int removed = 0;
    std::vector<std::pair<int, int>> columns;
    while (!current.empty()) {
        const auto next = strip_p_rim(current, 5);
        CHECK(is_p_regular(next.rest, 5));
        removed += next.rim_length;
        columns.emplace_back(next.rim_length, next.row_count);
        current = next.rest;
    }
    CHECK(removed == 21);
    CHECK(columns == std::vector<std::pair<int, int>>{{9, 4}, {5, 3}, {5, 3}, {2, 2}});
}

TEST_CASE("p-core by abacus") {
    CHECK(p_core(Partition({6, 6, 5, 4}), 5) == Partition({6, 2, 2, 1}));
    CHECK(p_core(Partition({15}), 5).empty());
    CHECK(p_core(Partition({6, 2, 2, 1}), 5) == Partition({6, 2, 2, 1}));
    CHECK(p_core(Partition{}, 3).empty());
}

TEST_CASE("abacus core agrees with exhaustive hook removal in every order") {
    for (int p : {3, 5, 7}) {
        std::map<oracle::Shape, std::set<oracle::Shape>> memo;
        for (int n = 0; n <= 20; ++n)
            for (const auto& shape : oracle::all_partitions(n)) {
                const auto& cores = oracle::reachable_cores(shape, p, memo);
                REQUIRE(cores.size() == 1);
                CHECK(Partition(*cores.begin()) == p_core(Partition(shape), p));
            }
    }
}

TEST_CASE("weight") {
    CHECK(weight(Partition({6, 6, 5, 4}), 5) == 2);
    CHECK(weight(Partition({6, 2, 2, 1}), 5) == 0);
    CHECK(weight(Partition({15}), 5) == 3);
    CHECK(weight(Partition({20}), 5) == 4);
}

TEST_CASE("n-vectors") {
    CHECK(n_vector_of(Partition({6, 6, 5, 4}), 5) ==
          std::vector<int>{2, -1, 0, -1, 0});
    CHECK(n_vector_of(Partition{}, 5) == std::vector<int>(5, 0));

    for (int n = 0; n <= 14; ++n)
        for (const auto& shape : oracle::all_partitions(n))
            for (int p : {3, 5}) {
                const auto v = n_vector_of(Partition(shape), p);
                int sum = 0;
                for (int entry : v) sum += entry;
                CHECK(sum == 0);
            }
}

TEST_CASE("n-vector is invariant under taking the core") {
    for (int p : {3, 5, 7})
        for (int n = 0; n <= 20; ++n)
            for (const auto& shape : oracle::all_partitions(n)) {
                const Partition lambda(shape);
                CHECK(n_vector_of(lambda, p) == n_vector_of(p_core(lambda, p), p));
            }
}

TEST_CASE("rectangle n-vectors") {
    CHECK(rect_n_vector(CoreShape::rect(2, 2), 5) ==
          std::vector<int>{1, 1, 0, -1, -1});
    CHECK(rect_n_vector(CoreShape::empty(), 5) == std::vector<int>(5, 0));

    // Single-column shapes (1^{p+1-alpha}) exist exactly for alpha >= 2 and
    // then match the n-vector contribution of a lone column {0/alpha}.
    const int p = 5;
    for (int alpha = 0; alpha < p; ++alpha) {
        const int a = p + 1 - alpha;
        if (alpha <= 1) {
            CHECK_THROWS_AS(rect_n_vector(CoreShape::rect(1, a), p),
                            std::invalid_argument);
        } else {
            std::vector<int> expected(p, 0);
            expected[0] += 1;
            expected[static_cast<std::size_t>(alpha - 1)] -= 1;
            CHECK(rect_n_vector(CoreShape::rect(1, a), p) == expected);
        }
    }
}

TEST_CASE("rectangle n-vectors agree with the content route") {
    for (int p : {3, 5, 7, 11})
        for (int l = 1; l < p; ++l)
            for (int a = 1; l + a - 1 < p; ++a) {
                const auto shape = CoreShape::rect(l, a);
                CHECK(rect_n_vector(shape, p) == n_vector_of(shape.to_partition(), p));
                CHECK(p_core(shape.to_partition(), p) == shape.to_partition());
            }
}

TEST_CASE("classifying rectangle n-vectors") {
    CHECK(classify_rect_nvector(std::vector<int>(5, 0), 5) == CoreShape::empty());
    CHECK(classify_rect_nvector({1, 1, 0, -1, -1}, 5) == CoreShape::rect(2, 2));
    // e_0 - e_1 is realized by the single-column rectangle (1^{p-1}).
    CHECK(classify_rect_nvector({1, -1, 0, 0, 0}, 5) == CoreShape::rect(1, 4));
    CHECK_FALSE(classify_rect_nvector({2, -2, 0, 0, 0}, 5).has_value());
    CHECK_FALSE(classify_rect_nvector({1, 0, -1, 1, -1}, 5).has_value());
    CHECK_THROWS_AS(classify_rect_nvector({1, 0, 0, 0, 0}, 5), std::invalid_argument);

    // Round trip over every admissible rectangle.
    for (int p : {3, 5, 7})
        for (int l = 1; l < p; ++l)
            for (int a = 1; l + a - 1 < p; ++a) {
                const auto shape = CoreShape::rect(l, a);
                CHECK(classify_rect_nvector(rect_n_vector(shape, p), p) == shape);
            }
}

TEST_CASE("shape recognition") {
    CHECK(shape_of(Partition{}) == CoreShape::empty());
    CHECK(shape_of(Partition({3, 3})) == CoreShape::rect(3, 2));
    CHECK_FALSE(shape_of(Partition({3, 1})).has_value());
}
