#include "mullineux/js.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mullineux/signatures.hpp"

namespace mlx {

namespace {

int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

void require_odd_modulus(int p) {
    if (p <= 2) throw std::invalid_argument("the construction requires p > 2");
}

void require_nonempty_regular(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    if (lambda.empty()) throw std::invalid_argument("empty partition");
    if (!is_p_regular(lambda, p))
        throw std::invalid_argument("requires a p-regular partition");
}

std::string col_text(const ResidueColumn& col) {
    return "{" + std::to_string(col.x) + "/" + std::to_string(col.y) + "}";
}

}  // namespace

bool is_js(const Partition& lambda, int p) {
    require_nonempty_regular(lambda, p);
    const int t = static_cast<int>(lambda.blocks().size());
    for (int i = 1; i < t; ++i)
        if (beta(lambda, i, i + 1, p) != 0) return false;
    return true;
}

int js_type(const Partition& lambda, int p) {
    require_nonempty_regular(lambda, p);
    const auto blocks = lambda.blocks();
    return mod_p(blocks[0].len - blocks[0].mult, p);
}

std::optional<int> js_by_sequence(const Partition& lambda, int p) {
    require_nonempty_regular(lambda, p);
    const auto peaks = analyze(mullineux_sequence(lambda, p), p).peak;
    int type = -1;
    for (int a = 0; a < p; ++a) {
        const int peak = peaks[static_cast<std::size_t>(a)];
        if (peak <= 0) continue;
        if (peak > 1 || type >= 0) return std::nullopt;
        type = a;
    }
    if (type < 0) return std::nullopt;
    return type;
}

std::vector<StartColumn> start_columns(int alpha, int p) {
    require_odd_modulus(p);
    if (alpha < 0 || alpha >= p) throw std::invalid_argument("alpha out of range");
    std::vector<StartColumn> out;
    auto add = [&](int x, int y) {
        ResidueColumn col{mod_p(x, p), mod_p(y, p)};
        for (const auto& existing : out)
            if (existing.column == col) return;
        out.push_back({col, is_singular(col, p) ? 1 : 0});
    };
    if (alpha != 1) add(0, alpha);
    add(alpha, 0);
    if (alpha != 0) add(alpha, alpha + 1);
    return out;
}

std::vector<ResidueColumn> js_extensions(const ResidueColumn& col, int alpha, int p) {
    require_odd_modulus(p);
    const int y = col.y;
    std::vector<ResidueColumn> out;
    auto add = [&](int x, int yy) {
        ResidueColumn next{mod_p(x, p), mod_p(yy, p)};
        if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(next);
    };
    if (mod_p(2 * y, p) != mod_p(alpha + 3, p)) add(alpha + 1 - y, y - 1);
    if (mod_p(2 * y, p) != mod_p(alpha + 1, p)) add(y - 1, alpha + 1 - y);
    add(y - 1, y);
    add(alpha + 1 - y, alpha + 2 - y);
    return out;
}

std::vector<int> EndValueVector::to_vector(int p) const {
    std::vector<int> v(static_cast<std::size_t>(p), 0);
    switch (kind) {
        case Kind::V0:
            v[0] = -1;
            break;
        case Kind::VAB:
            v[static_cast<std::size_t>(alpha)] += 1;
            v[static_cast<std::size_t>(beta)] -= 1;
            v[static_cast<std::size_t>(mod_p(alpha - beta, p))] -= 1;
            break;
        case Kind::WA:
            v[static_cast<std::size_t>(alpha)] += 1;
            v[static_cast<std::size_t>(beta)] -= 2;
            break;
    }
    return v;
}

std::string EndValueVector::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::V0:
            os << "v_0";
            break;
        case Kind::VAB:
            os << "v_{" << alpha << ',' << beta << '}';
            break;
        case Kind::WA:
            os << "w_" << alpha;
            break;
    }
    return os.str();
}

EndValueVector classify_end_values(const ResidueSymbol& symbol, int alpha, int p) {
    require_odd_modulus(p);
    if (symbol.length() == 0)
        throw std::invalid_argument("end values need at least one column");

    std::vector<int> sigma(static_cast<std::size_t>(p), 0);
    sigma[0] -= 1;
    for (const auto& col : symbol.columns) {
        sigma[static_cast<std::size_t>(col.x)] += 1;
        sigma[static_cast<std::size_t>(mod_p(col.x + 1, p))] -= 1;
        sigma[static_cast<std::size_t>(col.y)] += 1;
        sigma[static_cast<std::size_t>(mod_p(col.y - 1, p))] -= 1;
    }
    const int y_last = symbol.columns.back().y;

    auto fail = [&](const std::string& why) {
        throw std::domain_error("end value vector of " + symbol.to_string() +
                                " does not classify: " + why);
    };

    std::vector<int> plus, minus;
    for (int j = 0; j < p; ++j) {
        const int v = sigma[static_cast<std::size_t>(j)];
        if (v == 1)
            plus.push_back(j);
        else if (v == -1)
            minus.push_back(j);
        else if (v == -2)
            minus.insert(minus.end(), 2, j);
        else if (v != 0)
            fail("entry out of range at residue " + std::to_string(j));
    }

    if (plus.empty() && minus.size() == 1 && minus[0] == 0) {
        if (y_last != mod_p(1, p) && y_last != mod_p(alpha + 1, p))
            fail("v_0 with y = " + std::to_string(y_last));
        return {EndValueVector::Kind::V0, 0, 0};
    }
    if (plus.size() != 1 || plus[0] != alpha || minus.size() != 2)
        fail("not of the form e_alpha minus two negatives");
    const int b = minus[0], c = minus[1];
    if (mod_p(b + c, p) != alpha) fail("negative positions do not pair to alpha");
    if (b == c) {
        if (y_last != mod_p(b + 1, p)) fail("w with y = " + std::to_string(y_last));
        return {EndValueVector::Kind::WA, alpha, b};
    }
    if (y_last != mod_p(b + 1, p) && y_last != mod_p(c + 1, p))
        fail("v_{a,b} with y = " + std::to_string(y_last));
    return {EndValueVector::Kind::VAB, alpha, b};
}

ResidueSymbol collapse_singular_runs(const ResidueSymbol& symbol, int alpha, int p) {
    require_odd_modulus(p);
    ResidueSymbol out;
    for (const auto& col : symbol.columns) {
        if (is_singular(col, p)) continue;
        if (out.columns.empty()) {
            if (!symbol.columns.empty() && is_singular(symbol.columns.front(), p)) {
                const ResidueColumn alpha_zero{mod_p(alpha, p), 0};
                const ResidueColumn zero_alpha{0, mod_p(alpha, p)};
                if (col != alpha_zero && col != zero_alpha)
                    throw std::domain_error(
                        "first regular column " + col_text(col) +
                        " after a singular prefix is neither {alpha/0} nor {0/alpha}");
            }
        } else {
            const auto& prev = out.columns.back();
            const ResidueColumn swapped{mod_p(alpha + 1 - prev.y, p),
                                        mod_p(prev.y - 1, p)};
            const ResidueColumn straight{mod_p(prev.y - 1, p),
                                         mod_p(alpha + 1 - prev.y, p)};
            if (col != swapped && col != straight)
                throw std::domain_error("columns " + col_text(prev) + " -> " +
                                        col_text(col) + " are not a regular type-" +
                                        std::to_string(alpha) + " extension");
        }
        out.columns.push_back(col);
    }
    return out;
}

CoreShape js_core_at_column(const ResidueColumn& col, int alpha, int p) {
    require_odd_modulus(p);
    std::vector<CoreShape> matches;
    auto consider = [&](int x, int y, const CoreShape& shape) {
        if (col.x == mod_p(x, p) && col.y == mod_p(y, p)) matches.push_back(shape);
    };

    // Wide rectangles (l^{p+l-alpha}), 2l <= alpha.
    for (int l = 1; 2 * l <= alpha; ++l) {
        const auto shape = CoreShape::rect(l, p + l - alpha);
        consider(l - 1, alpha - l + 1, shape);
        consider(alpha - l - 1, l + 1, shape);
        consider(l, l + 1, shape);
        consider(alpha - l, alpha - l + 1, shape);
    }
    // Tall rectangles (l^{l-alpha}), alpha + 1 <= l < (p+1+alpha)/2.
    for (int l = alpha + 1; 2 * l < p + 1 + alpha; ++l) {
        const auto shape = CoreShape::rect(l, l - alpha);
        consider(l - 1, alpha - l + 1, shape);
        consider(alpha - l - 1, l + 1, shape);
        consider(l, l + 1, shape);
        consider(alpha - l, alpha - l + 1, shape);
    }
    // Empty core.
    consider(alpha - 1, 1, CoreShape::empty());
    consider(-1, alpha + 1, CoreShape::empty());
    consider(0, 1, CoreShape::empty());
    consider(alpha, alpha + 1, CoreShape::empty());

    if (matches.empty())
        throw std::domain_error("column " + col_text(col) +
                                " is not reachable in the type-" +
                                std::to_string(alpha) + " graph");
    for (const auto& shape : matches)
        if (shape != matches.front())
            throw std::logic_error("ambiguous core at column " + col_text(col));
    return matches.front();
}

CoreShape js_core_from_length(const Partition& lambda, int p) {
    if (!is_js(lambda, p)) throw std::invalid_argument("not a JS partition");
    const int alpha = js_type(lambda, p);
    const int r = mod_p(lambda.rows(), p);

    int s = 0;
    bool wide = true;  // b_s^{alpha+}: rectangle (alpha+s)^s; else s^{p-alpha+s}
    if (2 * r <= p - alpha) {
        s = r;
        wide = true;
    } else if (r <= p - alpha) {
        s = (p - alpha) - r;
        wide = true;
    } else if (2 * r <= 2 * p - alpha) {
        s = r - (p - alpha);
        wide = false;
    } else {
        s = p - r;
        wide = false;
    }
    if (s == 0) return CoreShape::empty();
    return wide ? CoreShape::rect(alpha + s, s) : CoreShape::rect(s, p - alpha + s);
}

int edge_d(const ResidueColumn& src, const ResidueColumn& dst, int alpha, int p) {
    require_odd_modulus(p);
    const auto legal = js_extensions(src, alpha, p);
    if (std::find(legal.begin(), legal.end(), dst) == legal.end())
        throw std::invalid_argument("no type-" + std::to_string(alpha) + " edge " +
                                    col_text(src) + " -> " + col_text(dst));
    const int t = mod_p(dst.x - dst.y + 1, p);
    const int t_src = mod_p(src.x - src.y + 1, p);
    const int s = mod_p(src.y - dst.y, p);
    const bool src_regular = t_src != 0;
    const bool dst_regular = t != 0;
    if (src_regular && dst_regular) return (t_src + 2 * s) / p;
    if (src_regular) return (t_src + s + p) / p;
    return (p - 1 + s - t) / p;
}

int JSGraph::index_of(const ResidueColumn& col) const {
    const auto it = std::lower_bound(
        vertices.begin(), vertices.end(), col,
        [](const ResidueColumn& a, const ResidueColumn& b) { return a < b; });
    if (it == vertices.end() || !(*it == col)) return -1;
    return static_cast<int>(it - vertices.begin());
}

int JSGraph::edge_index(int src, int dst) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].src == src && edges[i].dst == dst) return static_cast<int>(i);
    return -1;
}

namespace detail {

JSGraph close_graph(int alpha, int p, bool fixed,
                    const std::vector<StartColumn>& starts,
                    const std::function<std::vector<ResidueColumn>(
                        const ResidueColumn&)>& successors,
                    const std::function<CoreShape(const ResidueColumn&)>& core_at) {
    std::set<ResidueColumn> seen;
    std::deque<ResidueColumn> queue;
    for (const auto& start : starts) {
        if (seen.insert(start.column).second) queue.push_back(start.column);
    }
    std::map<ResidueColumn, std::vector<ResidueColumn>> adjacency;
    while (!queue.empty()) {
        const auto col = queue.front();
        queue.pop_front();
        auto next = successors(col);
        for (const auto& succ : next)
            if (seen.insert(succ).second) queue.push_back(succ);
        adjacency.emplace(col, std::move(next));
    }

    JSGraph graph;
    graph.p = p;
    graph.alpha = alpha;
    graph.fixed = fixed;
    graph.vertices.assign(seen.begin(), seen.end());
    for (const auto& start : starts)
        graph.starts.push_back({graph.index_of(start.column), start.d0});
    for (const auto& [src, succs] : adjacency) {
        const int src_index = graph.index_of(src);
        const int src_core = core_at(src).size();
        for (const auto& dst : succs) {
            const int e = core_at(dst).size() < src_core ? 1 : 0;
            graph.edges.push_back(
                {src_index, graph.index_of(dst), edge_d(src, dst, alpha, p), e});
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end(),
              [](const JSGraph::Edge& a, const JSGraph::Edge& b) {
                  return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
              });
    return graph;
}

}  // namespace detail

JSGraph build_js_graph(int alpha, int p) {
    return detail::close_graph(
        alpha, p, false, start_columns(alpha, p),
        [&](const ResidueColumn& col) { return js_extensions(col, alpha, p); },
        [&](const ResidueColumn& col) { return js_core_at_column(col, alpha, p); });
}

int weight_of_path(const JSGraph& graph, const JSPath& path) {
    if (path.vertices.empty()) throw std::invalid_argument("empty path");
    int d0 = -1;
    for (const auto& start : graph.starts)
        if (start.vertex == path.vertices.front()) d0 = start.d0;
    if (d0 < 0) throw std::invalid_argument("path does not begin at a start vertex");

    const int k = static_cast<int>(path.vertices.size()) - 1;
    int weight = (k + 1) * d0;
    for (int i = 1; i <= k; ++i) {
        const int idx = graph.edge_index(path.vertices[static_cast<std::size_t>(i - 1)],
                                         path.vertices[static_cast<std::size_t>(i)]);
        if (idx < 0) throw std::invalid_argument("path uses a missing edge");
        const auto& edge = graph.edges[static_cast<std::size_t>(idx)];
        weight += (k + 1 - i) * edge.d + edge.e;
    }
    return weight;
}

JSPath path_of_symbol(const JSGraph& graph, const ResidueSymbol& symbol) {
    JSPath path;
    for (const auto& col : symbol.columns) {
        const int idx = graph.index_of(col);
        if (idx < 0)
            throw std::invalid_argument("column " + col_text(col) +
                                        " is not a graph vertex");
        if (!path.vertices.empty() &&
            graph.edge_index(path.vertices.back(), idx) < 0)
            throw std::invalid_argument("symbol does not follow graph edges");
        path.vertices.push_back(idx);
    }
    if (path.vertices.empty()) throw std::invalid_argument("empty symbol");
    bool starts_ok = false;
    for (const auto& start : graph.starts)
        starts_ok = starts_ok || start.vertex == path.vertices.front();
    if (!starts_ok) throw std::invalid_argument("symbol does not begin at a start");
    return path;
}

ResidueSymbol symbol_of_path(const JSGraph& graph, const JSPath& path) {
    ResidueSymbol symbol;
    for (int v : path.vertices)
        symbol.columns.push_back(graph.vertices[static_cast<std::size_t>(v)]);
    return symbol;
}

Partition js_witness(const CoreShape& core, int w, int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    if (w < 0) throw std::invalid_argument("weight must be nonnegative");
    if (!core.is_p_core(p))
        throw std::invalid_argument(core.to_string() + " is not a " +
                                    std::to_string(p) + "-core");
    if (core.kind == CoreShape::Kind::Empty) {
        if (w == 0) return {};
        return Partition({p * w});
    }

    MullineuxSymbol symbol;
    for (int i = 0; i < w; ++i) symbol.columns.push_back({p, core.a});
    // The rectangle loses one boundary hook per strip, so its symbol has
    // min(l, a) columns.
    for (int i = 0; i < std::min(core.l, core.a); ++i)
        symbol.columns.push_back({core.l + core.a - 1 - 2 * i, core.a - i});
    const Partition witness = partition_of_symbol(symbol, p);

    if (!is_js(witness, p) || p_core(witness, p) != core.to_partition() ||
        weight(witness, p) != w)
        throw std::logic_error("witness construction failed for " + core.to_string());
    return witness;
}

std::string to_dot(const JSGraph& graph) {
    std::ostringstream os;
    os << "digraph " << (graph.fixed ? "fixed_js" : "js") << "_p" << graph.p;
    if (!graph.fixed) os << "_alpha" << graph.alpha;
    os << " {\n  rankdir=LR;\n";
    auto name = [&](int v) {
        const auto& col = graph.vertices[static_cast<std::size_t>(v)];
        return std::to_string(col.x) + "/" + std::to_string(col.y);
    };
    std::vector<int> d0(graph.vertices.size(), -1);
    for (const auto& start : graph.starts)
        d0[static_cast<std::size_t>(start.vertex)] = start.d0;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        os << "  \"" << name(static_cast<int>(v)) << "\" [label=\""
           << name(static_cast<int>(v)) << "\"";
        if (d0[v] >= 0) os << ", xlabel=\"d0=" << d0[v] << "\", peripheries=2";
        os << "];\n";
    }
    for (const auto& edge : graph.edges)
        os << "  \"" << name(edge.src) << "\" -> \"" << name(edge.dst)
           << "\" [label=\"" << edge.d << ',' << edge.e << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace mlx
