#include "mullineux/json_io.hpp"

#include <stdexcept>

namespace mlx {

json to_json(const Partition& lambda) { return json(lambda.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

json to_json(const CoreShape& shape) {
    if (shape.kind == CoreShape::Kind::Empty) return json{{"kind", "empty"}};
    return json{{"kind", "rect"}, {"l", shape.l}, {"a", shape.a}};
}

CoreShape core_shape_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "empty") return CoreShape::empty();
    if (kind == "rect") return CoreShape::rect(j.at("l").get<int>(), j.at("a").get<int>());
    throw std::invalid_argument("unknown core kind: " + kind);
}

json to_json(const MullineuxSymbol& symbol) {
    json top = json::array(), bottom = json::array();
    for (const auto& col : symbol.columns) {
        top.push_back(col.a);
        bottom.push_back(col.r);
    }
    return json{{"top", std::move(top)}, {"bottom", std::move(bottom)}};
}

MullineuxSymbol mullineux_symbol_from_json(const json& j) {
    const auto top = j.at("top").get<std::vector<int>>();
    const auto bottom = j.at("bottom").get<std::vector<int>>();
    if (top.size() != bottom.size())
        throw std::invalid_argument("symbol rows differ in length");
    MullineuxSymbol symbol;
    for (std::size_t i = 0; i < top.size(); ++i)
        symbol.columns.push_back({top[i], bottom[i]});
    return symbol;
}

json to_json(const ResidueSymbol& symbol) {
    json xs = json::array(), ys = json::array();
    for (const auto& col : symbol.columns) {
        xs.push_back(col.x);
        ys.push_back(col.y);
    }
    return json{{"x", std::move(xs)}, {"y", std::move(ys)}};
}

ResidueSymbol residue_symbol_from_json(const json& j) {
    const auto xs = j.at("x").get<std::vector<int>>();
    const auto ys = j.at("y").get<std::vector<int>>();
    if (xs.size() != ys.size())
        throw std::invalid_argument("symbol rows differ in length");
    ResidueSymbol symbol;
    for (std::size_t i = 0; i < xs.size(); ++i) symbol.columns.push_back({xs[i], ys[i]});
    return symbol;
}

json to_json(const SignatureSequence& seq) {
    json out = json::array();
    for (const auto& entry : seq)
        out.push_back(json{{"res", entry.res}, {"sign", entry.sign > 0 ? "+" : "-"}});
    return out;
}

SignatureSequence signature_from_json(const json& j, int p) {
    SignatureSequence seq;
    for (const auto& item : j) {
        const int res = item.at("res").get<int>();
        const auto sign = item.at("sign").get<std::string>();
        if (res < 0 || res >= p || (sign != "+" && sign != "-"))
            throw std::invalid_argument("bad signature entry");
        seq.push_back({res, sign == "+" ? +1 : -1});
    }
    return seq;
}

json to_json(const JSGraph& graph) {
    auto col_json = [](const ResidueColumn& col) {
        return json{{"x", col.x}, {"y", col.y}};
    };
    json vertices = json::array();
    for (const auto& col : graph.vertices) vertices.push_back(col_json(col));
    json starts = json::array();
    for (const auto& start : graph.starts) {
        json s = col_json(graph.vertices[static_cast<std::size_t>(start.vertex)]);
        s["d0"] = start.d0;
        starts.push_back(std::move(s));
    }
    json edges = json::array();
    for (const auto& edge : graph.edges)
        edges.push_back(
            json{{"src", col_json(graph.vertices[static_cast<std::size_t>(edge.src)])},
                 {"dst", col_json(graph.vertices[static_cast<std::size_t>(edge.dst)])},
                 {"d", edge.d},
                 {"e", edge.e}});
    return json{{"schema", 1},      {"p", graph.p},         {"alpha", graph.alpha},
                {"fixed", graph.fixed}, {"vertices", std::move(vertices)},
                {"starts", std::move(starts)}, {"edges", std::move(edges)}};
}

}  // namespace mlx
