#include <stdexcept>
#include <random>
#include <set>

#include "doctest.h"
#include "mullineux/partition.hpp"
#include "oracles.hpp"

using namespace mlx;

TEST_CASE("partition construction and exponential form") {
    const Partition lambda({6, 6, 5, 4});
    CHECK(lambda.n() == 21);
    CHECK(lambda.rows() == 4);
    CHECK(lambda.to_exponential_string() == "(6^2,5,4)");

    CHECK(Partition{}.n() == 0);
    CHECK(Partition{}.empty());

    const Partition mixed({5, 5, 4, 1, 1, 1});
    CHECK(mixed.blocks() == std::vector<Block>{{5, 2}, {4, 1}, {1, 3}});
    CHECK(Partition::from_blocks(mixed.blocks()) == mixed);

    CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("p-regularity") {
    CHECK(is_p_regular(Partition({5, 5, 4, 1, 1, 1}), 5));
    CHECK_FALSE(is_p_regular(Partition({1, 1, 1, 1, 1}), 5));
    CHECK(is_p_regular(Partition{}, 2));
    CHECK_THROWS_AS(is_p_regular(Partition({1}), 1), std::invalid_argument);
}

TEST_CASE("node residues") {
    CHECK(node_residue({1, 1}, 5) == 0);
    CHECK(node_residue({2, 1}, 5) == 4);
    CHECK(node_residue({4, 4}, 5) == 0);
}

TEST_CASE("removable and indent nodes") {
    const Partition square({2, 2});
    CHECK(removable_nodes(square) == std::vector<Node>{{2, 2}});
    CHECK(indent_nodes(square) == std::vector<Node>{{1, 3}, {3, 1}});

    CHECK(removable_nodes(Partition{}).empty());
    CHECK(indent_nodes(Partition{}) == std::vector<Node>{{1, 1}});

    const Partition big({12, 7, 7, 5, 5, 5, 3, 1, 1, 1});
    const auto removable = removable_nodes(big);
    const auto indent = indent_nodes(big);
    REQUIRE(removable.size() == 5);
    REQUIRE(indent.size() == 6);
    std::vector<int> removable_res, indent_res;
    for (const auto& node : removable) removable_res.push_back(node_residue(node, 5));
    for (const auto& node : indent) indent_res.push_back(node_residue(node, 5));
    CHECK(removable_res == std::vector<int>{1, 4, 4, 1, 1});
    CHECK(indent_res == std::vector<int>{2, 1, 2, 2, 4, 0});
}

TEST_CASE("counts of special nodes per block") {
    for (int n = 0; n <= 14; ++n)
        for (const auto& shape : oracle::all_partitions(n)) {
            const Partition lambda(shape);
            CHECK(removable_nodes(lambda).size() == lambda.blocks().size());
            CHECK(indent_nodes(lambda).size() == lambda.blocks().size() + 1);
        }
}

TEST_CASE("content") {
    CHECK(content(Partition({6, 6, 5, 4}), 5) == std::vector<int>{5, 3, 4, 4, 5});
    CHECK(content(Partition{}, 3) == std::vector<int>{0, 0, 0});
    CHECK(content(Partition({1}), 3) == std::vector<int>{1, 0, 0});
}

TEST_CASE("content is conjugation covariant") {
    for (int n = 0; n <= 14; ++n)
        for (const auto& shape : oracle::all_partitions(n)) {
            const Partition lambda(shape);
            for (int p : {3, 5}) {
                const auto direct = content(lambda, p);
                const auto conj = content(lambda.conjugate(), p);
                for (int i = 0; i < p; ++i)
                    CHECK(conj[static_cast<std::size_t>(i)] ==
                          direct[static_cast<std::size_t>(((-i) % p + p) % p)]);
            }
        }
}

TEST_CASE("beta and gamma") {
    const Partition big({12, 7, 7, 5, 5, 5, 3, 1, 1, 1});
    CHECK(beta(big, 1, 2, 5) == 3);  // 12 - 7 + 1 + 2 = 8
    CHECK(gamma(big, 2, 2, 5) == 0);
    CHECK(gamma(big, 1, 1, 7) == 0);

    const Partition rectangle({2, 2});
    CHECK_THROWS_AS(beta(rectangle, 1, 2, 5), std::out_of_range);
    CHECK_THROWS_AS(beta(rectangle, 0, 1, 5), std::out_of_range);
}

TEST_CASE("beta and gamma express residue coincidences") {
    for (int n = 1; n <= 20; ++n)
        for (const auto& shape : oracle::all_partitions(n)) {
            const Partition lambda(shape);
            const auto removable = removable_nodes(lambda);
            auto indents = indent_nodes(lambda);
            indents.pop_back();  // block i indent node, rows 1..t
            const int t = static_cast<int>(lambda.blocks().size());
            for (int p : {3, 5, 7})
                for (int i = 1; i <= t; ++i)
                    for (int j = i; j <= t; ++j) {
                        const bool beta_zero = beta(lambda, i, j, p) == 0;
                        const bool indent_match =
                            node_residue(indents[static_cast<std::size_t>(i - 1)], p) ==
                            node_residue(removable[static_cast<std::size_t>(j - 1)], p);
                        CHECK(beta_zero == indent_match);
                        const bool gamma_zero = gamma(lambda, i, j, p) == 0;
                        const bool removable_match =
                            node_residue(removable[static_cast<std::size_t>(i - 1)], p) ==
                            node_residue(removable[static_cast<std::size_t>(j - 1)], p);
                        CHECK(gamma_zero == removable_match);
                    }
        }
}

TEST_CASE("conjugation") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({4, 4, 4}).conjugate() == Partition({3, 3, 3, 3}));

    std::mt19937 rng(20240521);
    for (int trial = 0; trial < 100; ++trial) {
        int remaining = std::uniform_int_distribution<int>(0, 40)(rng);
        std::vector<int> parts;
        while (remaining > 0) {
            const int part = std::uniform_int_distribution<int>(1, remaining)(rng);
            parts.push_back(part);
            remaining -= part;
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
        const Partition lambda(parts);
        CHECK(lambda.conjugate().conjugate() == lambda);
    }
}

TEST_CASE("p-regular enumeration") {
    CHECK(p_regular_partitions(0, 3) == std::vector<Partition>{Partition{}});

    const auto two_regular = p_regular_partitions(3, 2);
    CHECK(two_regular == std::vector<Partition>{Partition({3}), Partition({2, 1})});

    // Counts against the unfiltered oracle.
    for (int n = 0; n <= 12; ++n)
        for (int p : {2, 3, 5}) {
            std::size_t expected = 0;
            for (const auto& shape : oracle::all_partitions(n))
                if (is_p_regular(Partition(shape), p)) ++expected;
            CHECK(p_regular_partitions(n, p).size() == expected);
        }

    const auto ten_five = p_regular_partitions(10, 5);
    std::size_t brute = 0;
    for (const auto& shape : oracle::all_partitions(10))
        if (is_p_regular(Partition(shape), 5)) ++brute;
    CHECK(ten_five.size() == brute);

    // Lexicographically decreasing, no duplicates.
    for (std::size_t i = 1; i < ten_five.size(); ++i)
        CHECK(ten_five[i - 1].parts() > ten_five[i].parts());
}

TEST_CASE("partition parsing") {
    CHECK(parse_partition("6,6,5,4") == Partition({6, 6, 5, 4}));
    CHECK(parse_partition("5^2,4,1^3") == Partition({5, 5, 4, 1, 1, 1}));
    CHECK(parse_partition("12,7^2,5^3,3,1^3") ==
          Partition({12, 7, 7, 5, 5, 5, 3, 1, 1, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS_AS(parse_partition("3,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3^"), std::invalid_argument);
}
