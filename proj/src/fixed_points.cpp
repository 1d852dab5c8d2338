#include "mullineux/fixed_points.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mlx {

namespace {

int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

void require_odd_modulus(int p) {
    if (p <= 2) throw std::invalid_argument("fixed-point analysis requires p > 2");
}

}  // namespace

bool is_fixed_js(const Partition& lambda, int p) {
    require_odd_modulus(p);
    return is_js(lambda, p) && is_mullineux_fixed(lambda, p);
}

std::vector<ResidueColumn> fixed_extensions(const ResidueColumn& col, int p) {
    require_odd_modulus(p);
    const int y = col.y;
    std::vector<ResidueColumn> out;
    auto add_regular = [&](int x, int yy) {
        ResidueColumn next{mod_p(x, p), mod_p(yy, p)};
        if (is_singular(next, p)) return;  // not a regular extension
        if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(next);
    };
    add_regular(1 - y, y - 1);
    add_regular(y - 1, 1 - y);
    if (y == 1) out.push_back({0, 1});
    return out;
}

CoreShape fixed_core(const ResidueColumn& col, int p) {
    require_odd_modulus(p);
    for (int l = 1; 2 * l <= p - 1; ++l) {
        const ResidueColumn family[] = {{mod_p(l - 1, p), mod_p(1 - l, p)},
                                        {mod_p(-l - 1, p), mod_p(l + 1, p)},
                                        {mod_p(l, p), mod_p(1 + l, p)},
                                        {mod_p(-l, p), mod_p(1 - l, p)}};
        for (const auto& candidate : family)
            if (col == candidate) return CoreShape::rect(l, l);
    }
    if (col == ResidueColumn{mod_p(-1, p), 1} || col == ResidueColumn{0, 1})
        return CoreShape::empty();
    throw std::domain_error("column {" + std::to_string(col.x) + "/" +
                            std::to_string(col.y) +
                            "} is not reachable in the fixed-point graph");
}

JSGraph build_fixed_js_graph(int p) {
    require_odd_modulus(p);
    return detail::close_graph(
        0, p, true, {{ResidueColumn{0, 0}, 0}},
        [&](const ResidueColumn& col) { return fixed_extensions(col, p); },
        [&](const ResidueColumn& col) { return fixed_core(col, p); });
}

namespace {

// Vertex shorthand for the restricted graph: `a` is the column (a, -a),
// `prime` marks the singular column (0, 1).
struct Step {
    int a = 0;
    bool prime = false;
};

ResidueColumn column_of(const Step& step, int p) {
    if (step.prime) return {0, 1};
    return {mod_p(step.a, p), mod_p(-step.a, p)};
}

std::vector<Step> witness_path(int w, const CoreShape& core, int p, bool& feasible) {
    feasible = true;
    std::vector<Step> path;
    auto run = [&](int from, int to) {  // from, from+1, ..., to
        for (int a = from; a <= to; ++a) path.push_back({a, false});
    };
    auto loops_at_prime = [&](int count) {
        for (int i = 0; i < count; ++i) path.push_back({0, true});
    };

    if (core.kind == CoreShape::Kind::Empty) {
        if (w == 0) return path;  // the empty partition, no walk at all
        if (w == 2) {
            path = {{0, false}, {-1, false}};
            return path;
        }
        path = {{0, false}, {-1, false}};
        loops_at_prime((w - 4) / 2 + 1);
        return path;
    }

    const int j = core.l;
    if (w == 0) {
        run(0, j - 1);
        return path;
    }
    if (w == 2) {
        if (j == (p - 1) / 2) {
            feasible = false;
            return path;
        }
        run(0, j);
        path.push_back({-(j + 1), false});
        return path;
    }
    if (w <= 2 * j + 2) {
        const int i = j + 1 - w / 2;
        run(0, i);
        path.push_back({-(i + 1), false});
        run(i, j - 1);
        return path;
    }
    path = {{0, false}, {-1, false}};
    loops_at_prime((w - 2 * j - 4) / 2 + 1);
    run(0, j - 1);
    return path;
}

}  // namespace

std::optional<Partition> fixed_witness(int w, const CoreShape& core, int p) {
    require_odd_modulus(p);
    if (w < 0 || w % 2 != 0)
        throw std::invalid_argument("the weight of a Mullineux fixed partition is even");
    if (core.kind == CoreShape::Kind::Rect && core.l != core.a)
        throw std::invalid_argument("fixed-point cores are squares");
    if (!core.is_p_core(p))
        throw std::invalid_argument(core.to_string() + " is not a " +
                                    std::to_string(p) + "-core");

    bool feasible = true;
    const auto steps = witness_path(w, core, p, feasible);
    if (!feasible) return std::nullopt;
    if (steps.empty()) return Partition{};

    ResidueSymbol symbol;
    for (const auto& step : steps) symbol.columns.push_back(column_of(step, p));
    const Partition witness =
        partition_of_symbol(reconstruct_mullineux(symbol, p), p);

    if (!is_fixed_js(witness, p) || p_core(witness, p) != core.to_partition() ||
        weight(witness, p) != w)
        throw std::logic_error("fixed witness construction failed for weight " +
                               std::to_string(w) + ", core " + core.to_string());
    return witness;
}

}  // namespace mlx
