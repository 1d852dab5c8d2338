#include <stdexcept>

#include "doctest.h"
#include "mullineux/signatures.hpp"

using namespace mlx;

TEST_CASE("sigma prefix sums") {
    const auto lone = signature_from_text("0-", 5);
    CHECK(sigma(lone, 0, 0) == -1);
    CHECK_THROWS_AS(sigma(lone, 0, 1), std::out_of_range);

    const auto m_seq = mullineux_sequence(Partition({2, 2}), 5);
    CHECK(sigma(m_seq, 0, static_cast<int>(m_seq.size()) - 1) == 1);

    // A residue that never occurs stays at the empty-sum value.
    const auto other = signature_from_text("0- 0+ 1-", 7);
    for (int i = 0; i < 3; ++i) CHECK(sigma(other, 5, i) == 0);
}

TEST_CASE("text form round trip") {
    const std::string text = "1+ 2- 1- 4+ 2- 4+ 1+ 2- 4- 1+ 0-";
    CHECK(to_text(signature_from_text(text, 5)) == text);
    CHECK_THROWS_AS(signature_from_text("5+", 5), std::invalid_argument);
    CHECK_THROWS_AS(signature_from_text("x-", 5), std::invalid_argument);
    CHECK_THROWS_AS(signature_from_text("3", 5), std::invalid_argument);
}

TEST_CASE("node sequences") {
    CHECK(to_text(node_sequence(Partition({12, 7, 7, 5, 5, 5, 3, 1, 1, 1}), 5)) ==
          "1+ 2- 1- 4+ 2- 4+ 1+ 2- 4- 1+ 0-");
    CHECK(to_text(node_sequence(Partition({2, 2}), 5)) == "2- 0+ 3-");
    // Within a row the removable node comes first; see the first row here.
    CHECK(to_text(node_sequence(Partition({1}), 3)) == "0+ 1- 2-");
    CHECK(to_text(node_sequence(Partition{}, 3)) == "0-");
}

TEST_CASE("Mullineux sequences") {
    CHECK(to_text(mullineux_sequence(Partition({2, 2}), 5)) ==
          "0- 0+ 1- 0+ 4- 1+ 2- 4+ 3-");
    CHECK(to_text(mullineux_sequence(Partition{}, 5)) == "0-");

    for (int n = 1; n <= 10; ++n)
        for (const auto& lambda : p_regular_partitions(n, 5)) {
            const auto seq = mullineux_sequence(lambda, 5);
            const auto symbol = residue_symbol(lambda, 5);
            CHECK(static_cast<int>(seq.size()) == 1 + 4 * symbol.length());
        }
}

TEST_CASE("normal and good entries of a signature sequence") {
    const auto seq =
        node_sequence(Partition({12, 7, 7, 5, 5, 5, 3, 1, 1, 1}), 5);
    const auto analysis = analyze(seq, 5);
    std::vector<int> normal, good;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        if (analysis.normal[static_cast<std::size_t>(i)]) normal.push_back(i);
        if (analysis.good[static_cast<std::size_t>(i)]) good.push_back(i);
    }
    CHECK(normal == std::vector<int>{0, 3, 5, 9});
    CHECK(good == std::vector<int>{5, 9});
    CHECK(analysis.height[0] == 1);
    CHECK(analysis.height[3] == 1);
    CHECK(analysis.height[5] == 2);
    CHECK(analysis.height[9] == 2);
    CHECK(analysis.peak[1] == 2);
    CHECK(analysis.peak[4] == 2);
    CHECK(analysis.peak[0] == 0);

    const auto alone = analyze(signature_from_text("3+", 5), 5);
    CHECK(alone.normal[0]);
    CHECK(alone.good[0]);
    CHECK(alone.height[0] == 1);

    const auto cancelled = analyze(signature_from_text("3- 3+", 5), 5);
    CHECK_FALSE(cancelled.normal[1]);
    CHECK(cancelled.peak[3] == 0);
}

TEST_CASE("good entries are the last normal entries of their residue") {
    const auto seq = signature_from_text("2+ 2- 2+ 2+ 1+", 5);
    const auto analysis = analyze(seq, 5);
    CHECK(analysis.normal == std::vector<bool>{true, false, false, true, true});
    CHECK(analysis.good == std::vector<bool>{false, false, false, true, true});
    CHECK(analysis.height[3] == 2);
}

TEST_CASE("block analysis by distinct representatives") {
    const auto square = normal_nodes_block(Partition({2, 2}), 5);
    REQUIRE(square.size() == 1);
    CHECK(square[0].block == 1);
    CHECK(square[0].residue == 0);
    CHECK(square[0].good);

    const auto big = normal_nodes_block(Partition({12, 7, 7, 5, 5, 5, 3, 1, 1, 1}), 5);
    std::vector<int> blocks;
    for (const auto& entry : big) blocks.push_back(entry.block);
    CHECK(blocks == std::vector<int>{1, 2, 3, 5});
    CHECK_FALSE(big[0].good);  // a lower normal block shares residue 1
    CHECK(big[2].good);
    CHECK(big[3].good);

    const auto row = normal_nodes_block(Partition({15}), 5);
    REQUIRE(row.size() == 1);
    CHECK(row[0].block == 1);
    CHECK(row[0].good);

    CHECK(normal_nodes_block(Partition{}, 5).empty());
    CHECK_THROWS_AS(normal_nodes_block(Partition({1, 1, 1}), 3),
                    std::invalid_argument);
}
