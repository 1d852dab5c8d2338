#include "mullineux/analyze.hpp"

#include "mullineux/cores.hpp"
#include "mullineux/fixed_points.hpp"
#include "mullineux/js.hpp"
#include "mullineux/signatures.hpp"
#include "mullineux/symbols.hpp"

namespace mlx {

json analyze_partition(const Partition& lambda, int p) {
    json out;
    out["schema"] = 1;
    out["p"] = p;
    out["partition"] = to_json(lambda);
    out["exponential"] = lambda.to_exponential_string();
    out["n"] = lambda.n();
    const bool regular = is_p_regular(lambda, p);
    out["p_regular"] = regular;

    json diagram = json::array();
    for (int i = 1; i <= lambda.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= lambda.part(i); ++j) row.push_back(node_residue({i, j}, p));
        diagram.push_back(std::move(row));
    }
    out["residue_diagram"] = std::move(diagram);
    out["content"] = content(lambda, p);
    out["n_vector"] = n_vector_of(lambda, p);
    out["core"] = to_json(p_core(lambda, p));
    out["weight"] = weight(lambda, p);

    const auto nodes_n = node_sequence(lambda, p);
    out["node_sequence"] = to_text(nodes_n);
    const auto analysis_n = analyze(nodes_n, p);
    json normal_entries = json::array();
    for (std::size_t i = 0; i < nodes_n.size(); ++i)
        if (analysis_n.normal[i])
            normal_entries.push_back(json{{"index", i},
                                          {"res", nodes_n[i].res},
                                          {"height", analysis_n.height[i]},
                                          {"good", analysis_n.good[i]}});
    out["node_sequence_normal"] = std::move(normal_entries);

    if (!regular) {
        for (const char* key :
             {"mullineux_symbol", "residue_symbol", "mullineux_sequence",
              "normal_blocks", "js", "js_type", "mullineux_image", "mullineux_fixed"})
            out[key] = nullptr;
        return out;
    }

    const auto symbol = mullineux_symbol(lambda, p);
    out["mullineux_symbol"] = to_json(symbol);
    out["residue_symbol"] = to_json(residue_symbol(symbol, p));
    out["mullineux_sequence"] = to_text(mullineux_sequence(lambda, p));

    json blocks = json::array();
    for (const auto& entry : normal_nodes_block(lambda, p))
        blocks.push_back(json{{"block", entry.block},
                              {"res", entry.residue},
                              {"height", entry.height},
                              {"good", entry.good}});
    out["normal_blocks"] = std::move(blocks);

    if (lambda.empty()) {
        out["js"] = nullptr;
        out["js_type"] = nullptr;
    } else {
        const bool js = is_js(lambda, p);
        out["js"] = js;
        out["js_type"] = js ? json(js_type(lambda, p)) : json(nullptr);
    }
    out["mullineux_image"] = to_json(mullineux_image(lambda, p));
    out["mullineux_fixed"] = is_mullineux_fixed(lambda, p);
    return out;
}

}  // namespace mlx
