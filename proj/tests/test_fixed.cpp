#include <stdexcept>
#include <set>

#include "doctest.h"
#include "mullineux/fixed_points.hpp"

using namespace mlx;

TEST_CASE("fixed JS detection") {
    CHECK(is_fixed_js(Partition({1}), 5));
    CHECK(is_fixed_js(Partition({2, 2}), 5));
    CHECK_FALSE(is_fixed_js(Partition({5}), 5));  // JS of type 4, not fixed
    CHECK_FALSE(is_fixed_js(Partition({2}), 5));
    CHECK_THROWS_AS(is_fixed_js(Partition({1}), 2), std::invalid_argument);
}

TEST_CASE("restricted extensions") {
    CHECK(fixed_extensions({0, 0}, 5) == std::vector<ResidueColumn>{{1, 4}, {4, 1}});
    // y = 1 admits the singular move to (0, 1).
    const auto from_one = fixed_extensions({4, 1}, 5);
    CHECK(std::find(from_one.begin(), from_one.end(), ResidueColumn{0, 1}) !=
          from_one.end());

    // Restricted successors are always type-0 successors.
    const auto graph = build_fixed_js_graph(7);
    for (const auto& col : graph.vertices) {
        const auto full = js_extensions(col, 0, 7);
        for (const auto& next : fixed_extensions(col, 7))
            CHECK(std::find(full.begin(), full.end(), next) != full.end());
    }

    // For p = 3 the would-be extension (1, 2) of (0, 0) is singular and drops.
    CHECK(fixed_extensions({0, 0}, 3) == std::vector<ResidueColumn>{{2, 1}});
}

TEST_CASE("fixed core table") {
    CHECK(fixed_core({1, 4}, 5) == CoreShape::rect(2, 2));
    CHECK(fixed_core({4, 1}, 5) == CoreShape::empty());
    CHECK(fixed_core({0, 0}, 5) == CoreShape::rect(1, 1));
    CHECK(fixed_core({0, 1}, 5) == CoreShape::empty());
    CHECK_THROWS_AS(fixed_core({2, 2}, 5), std::domain_error);

    for (int p : {3, 5, 7, 11}) {
        const auto graph = build_fixed_js_graph(p);
        for (const auto& col : graph.vertices)
            CHECK(fixed_core(col, p) == js_core_at_column(col, 0, p));
    }
}

TEST_CASE("restricted graph shape") {
    const auto graph = build_fixed_js_graph(5);
    REQUIRE(graph.starts.size() == 1);
    CHECK(graph.vertices[static_cast<std::size_t>(graph.starts[0].vertex)] ==
          ResidueColumn{0, 0});
    CHECK(graph.starts[0].d0 == 0);

    int singular_count = 0;
    for (const auto& col : graph.vertices)
        if (is_singular(col, 5)) {
            ++singular_count;
            CHECK(col == ResidueColumn{0, 1});
        }
    CHECK(singular_count == 1);
}

TEST_CASE("fixed witnesses") {
    const auto empty2 = fixed_witness(2, CoreShape::empty(), 5);
    REQUIRE(empty2.has_value());
    CHECK(*empty2 == Partition({6, 1, 1, 1, 1}));
    CHECK(empty2->n() == 10);
    CHECK(residue_symbol(*empty2, 5) == ResidueSymbol{{{0, 0}, {4, 1}}});
    CHECK(mullineux_symbol(*empty2, 5) == MullineuxSymbol{{{9, 5}, {1, 1}}});

    const auto square0 = fixed_witness(0, CoreShape::rect(2, 2), 5);
    REQUIRE(square0.has_value());
    CHECK(*square0 == Partition({2, 2}));

    // The single impossible case: weight 2 on the extreme square.
    CHECK_FALSE(fixed_witness(2, CoreShape::rect(2, 2), 5).has_value());
    CHECK_FALSE(fixed_witness(2, CoreShape::rect(1, 1), 3).has_value());
    CHECK_FALSE(fixed_witness(2, CoreShape::rect(3, 3), 7).has_value());

    const auto zero = fixed_witness(0, CoreShape::empty(), 5);
    REQUIRE(zero.has_value());
    CHECK(zero->empty());

    for (int w : {4, 6, 8}) {
        const auto witness = fixed_witness(w, CoreShape::rect(1, 1), 3);
        REQUIRE(witness.has_value());
        CHECK(is_fixed_js(*witness, 3));
        CHECK(p_core(*witness, 3) == Partition({1}));
        CHECK(weight(*witness, 3) == w);
    }

    CHECK_THROWS_AS(fixed_witness(3, CoreShape::empty(), 5), std::invalid_argument);
    CHECK_THROWS_AS(fixed_witness(2, CoreShape::rect(2, 1), 5), std::invalid_argument);
    CHECK_THROWS_AS(fixed_witness(0, CoreShape::rect(3, 3), 5), std::invalid_argument);
}

TEST_CASE("fixed set at small scale") {
    // p = 5, n <= 12: collect fixed JS partitions two ways.
    std::set<Partition> by_filter;
    for (int n = 1; n <= 12; ++n)
        for (const auto& lambda : p_regular_partitions(n, 5))
            if (is_fixed_js(lambda, 5)) by_filter.insert(lambda);

    CHECK(by_filter.count(Partition({1})) == 1);
    CHECK(by_filter.count(Partition({2, 2})) == 1);
    CHECK(by_filter.count(Partition({6, 1, 1, 1, 1})) == 1);
    for (const auto& lambda : by_filter) {
        CHECK(js_type(lambda, 5) == 0);
        CHECK(weight(lambda, 5) % 2 == 0);
    }
}
