#include <stdexcept>
#include "doctest.h"
#include "mullineux/analyze.hpp"
#include "mullineux/fixed_points.hpp"
#include "mullineux/json_io.hpp"
#include "mullineux/verify.hpp"

using namespace mlx;

TEST_CASE("partition json") {
    const Partition lambda({6, 6, 5, 4});
    CHECK(to_json(lambda).dump() == "[6,6,5,4]");
    CHECK(partition_from_json(json::parse("[6,6,5,4]")) == lambda);
    CHECK(partition_from_json(json::parse("[]")).empty());
    CHECK_THROWS_AS(partition_from_json(json::parse("{\"a\":1}")),
                    std::invalid_argument);
}

TEST_CASE("core shape json") {
    CHECK(to_json(CoreShape::empty()).dump() == "{\"kind\":\"empty\"}");
    CHECK(to_json(CoreShape::rect(2, 3)).dump() ==
          "{\"kind\":\"rect\",\"l\":2,\"a\":3}");
    CHECK(core_shape_from_json(json::parse("{\"kind\":\"rect\",\"l\":2,\"a\":3}")) ==
          CoreShape::rect(2, 3));
    CHECK(core_shape_from_json(json::parse("{\"kind\":\"empty\"}")) ==
          CoreShape::empty());
}

TEST_CASE("symbol json round trips") {
    const auto symbol = mullineux_symbol(Partition({6, 6, 5, 4}), 5);
    CHECK(to_json(symbol).dump() == "{\"top\":[9,5,5,2],\"bottom\":[4,3,3,2]}");
    CHECK(mullineux_symbol_from_json(to_json(symbol)) == symbol);

    const auto residues = residue_symbol(symbol, 5);
    CHECK(residue_symbol_from_json(to_json(residues)) == residues);

    CHECK_THROWS_AS(mullineux_symbol_from_json(
                        json::parse("{\"top\":[1],\"bottom\":[]}")),
                    std::invalid_argument);
}

TEST_CASE("signature json") {
    const auto seq = node_sequence(Partition({2, 2}), 5);
    CHECK(to_json(seq).dump() ==
          "[{\"res\":2,\"sign\":\"-\"},{\"res\":0,\"sign\":\"+\"},"
          "{\"res\":3,\"sign\":\"-\"}]");
    CHECK(signature_from_json(to_json(seq), 5) == seq);
}

TEST_CASE("graph json") {
    const auto graph = build_fixed_js_graph(5);
    const auto j = to_json(graph);
    CHECK(j["schema"] == 1);
    CHECK(j["p"] == 5);
    CHECK(j["alpha"] == 0);
    CHECK(j["fixed"] == true);
    CHECK(j["vertices"].size() == graph.vertices.size());
    CHECK(j["starts"].size() == 1);
    CHECK(j["starts"][0]["d0"] == 0);
    CHECK(j["edges"].size() == graph.edges.size());
    for (const auto& edge : j["edges"]) {
        CHECK(edge.contains("src"));
        CHECK(edge.contains("dst"));
        CHECK(edge.contains("d"));
        CHECK(edge.contains("e"));
    }
}

TEST_CASE("analyze report fields") {
    const auto report = analyze_partition(Partition({2, 2}), 5);
    CHECK(report["schema"] == 1);
    CHECK(report["p_regular"] == true);
    CHECK(report["content"] == json::parse("[2,1,0,0,1]"));
    CHECK(report["core"] == json::parse("[2,2]"));
    CHECK(report["weight"] == 0);
    CHECK(report["js"] == true);
    CHECK(report["js_type"] == 0);
    CHECK(report["mullineux_fixed"] == true);
    CHECK(report["node_sequence"] == "2- 0+ 3-");

    const auto big = analyze_partition(Partition({12, 7, 7, 5, 5, 5, 3, 1, 1, 1}), 5);
    CHECK(big["node_sequence"] == "1+ 2- 1- 4+ 2- 4+ 1+ 2- 4- 1+ 0-");
    CHECK(big["js"] == false);

    // Non-regular input keeps the shape fields and nulls the symbol fields.
    const auto irregular = analyze_partition(Partition({1, 1, 1}), 3);
    CHECK(irregular["p_regular"] == false);
    CHECK(irregular["mullineux_symbol"].is_null());
    CHECK(irregular["js"].is_null());
    CHECK(irregular["core"] == json::parse("[]"));
    CHECK(irregular["weight"] == 1);

    // Deterministic rendering.
    CHECK(analyze_partition(Partition({2, 2}), 5).dump() ==
          analyze_partition(Partition({2, 2}), 5).dump());
}

TEST_CASE("verification report json") {
    auto report = verify_worked_examples();
    const auto j = to_json(report);
    CHECK(j["schema"] == 1);
    CHECK(j["ok"] == true);
    CHECK(j["suite"] == "worked-examples");
    CHECK(j["properties"].is_array());
}

TEST_CASE("reports record failures with a counterexample") {
    VerificationReport report;
    report.suite = "sanity";
    auto& clean = report.property("clean");
    clean.pass = 3;
    CHECK(report.ok());

    auto& dirty = report.property("dirty");
    dirty.pass = 2;
    dirty.fail = 1;
    dirty.first_counterexample = "p=5 lambda=(2,2)";
    CHECK_FALSE(report.ok());

    const auto j = to_json(report);
    CHECK(j["ok"] == false);
    // A counterexample is rendered exactly when a failure was counted.
    CHECK_FALSE(j["properties"][0].contains("first_counterexample"));
    CHECK(j["properties"][1]["first_counterexample"] == "p=5 lambda=(2,2)");
}
