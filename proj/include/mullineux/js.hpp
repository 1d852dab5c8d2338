#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mullineux/cores.hpp"
#include "mullineux/partition.hpp"
#include "mullineux/symbols.hpp"

namespace mlx {

/// True iff beta(i, i+1) = 0 mod p for every pair of consecutive blocks;
/// such partitions carry exactly one normal node.
bool is_js(const Partition& lambda, int p);

/// The residue of l_1 - a_1; equals the residue of the unique good node.
int js_type(const Partition& lambda, int p);

/// JS test on the Mullineux sequence: the prefix sums of every residue stay
/// <= 0 except for a single residue bounded by 1, which is the type.
/// Returns the type, or nullopt when the partition is not JS.
std::optional<int> js_by_sequence(const Partition& lambda, int p);

/// Admissible first columns of type-alpha residue symbols, with their start
/// weight labels d0 = 1 - eps (eps = 0 iff the column is singular).
/// Requires p > 2.
struct StartColumn {
    ResidueColumn column;
    int d0 = 0;

    friend auto operator<=>(const StartColumn&, const StartColumn&) = default;
};
std::vector<StartColumn> start_columns(int alpha, int p);

/// Legal successor columns of a column on a type-alpha construction path:
/// regular extensions (alpha+1-y, y-1) and (y-1, alpha+1-y) guarded by
/// 2y != alpha+3 resp. 2y != alpha+1, and singular extensions (y-1, y) and
/// (alpha+1-y, alpha+2-y). Duplicates are removed.
std::vector<ResidueColumn> js_extensions(const ResidueColumn& col, int alpha, int p);

/// End value vector of a type-alpha JS residue symbol: one of
///   v_0        = -e_0,
///   v_{a,b}    = e_a - e_b - e_{a-b}  (b != a, b != a-b),
///   w_a        = e_a - 2 e_g          (2g = a mod p),
/// together with the admissible last-column y entries.
struct EndValueVector {
    enum class Kind { V0, VAB, WA };

    Kind kind = Kind::V0;
    int alpha = 0;
    int beta = 0;  // VAB: one of the -1 positions; WA: the -2 position

    std::vector<int> to_vector(int p) const;
    std::string to_string() const;

    friend auto operator<=>(const EndValueVector&, const EndValueVector&) = default;
};

/// Classifies the end value vector of the Mullineux sequence of the symbol
/// and checks the paired constraint on the final y entry. Throws when the
/// vector fits no case, which signals a non-JS input.
EndValueVector classify_end_values(const ResidueSymbol& symbol, int alpha, int p);

/// Drops the singular columns and checks that each surviving adjacent pair is
/// a regular extension, and that a leading regular column after a singular
/// prefix is (alpha, 0) or (0, alpha). Throws when a check fails.
ResidueSymbol collapse_singular_runs(const ResidueSymbol& symbol, int alpha, int p);

/// The p-core of the type-alpha JS partitions whose residue symbols end at
/// this column: a rectangle (l^{p+l-alpha}) or (l^{l-alpha}) or the empty
/// core, read off the final column. Throws when the column matches no case
/// (it is then unreachable in the type-alpha graph).
CoreShape js_core_at_column(const ResidueColumn& col, int alpha, int p);

/// The p-core from the number of parts mod p, through the rectangle
/// n-vectors b_s^{alpha +/-}. Requires a JS input.
CoreShape js_core_from_length(const Partition& lambda, int p);

/// Increase of the p-level of the p-rim length along the edge src -> dst,
/// with t = x - y + 1, t' = x' - y' + 1, s = y' - y (mod p):
///   floor((t' + 2s)/p)      when both columns are regular,
///   floor((t' + s + p)/p)   when only dst is singular,
///   floor((p - 1 + s - t)/p) when src is singular.
/// Throws unless dst is a legal extension of src.
int edge_d(const ResidueColumn& src, const ResidueColumn& dst, int alpha, int p);

/// The type-alpha construction graph: closure of the start columns under
/// js_extensions, each edge labeled (d, e) where e = 1 iff the core shrinks
/// along the edge.
struct JSGraph {
    int p = 0;
    int alpha = 0;
    bool fixed = false;

    std::vector<ResidueColumn> vertices;  // sorted by (x, y)

    struct Start {
        int vertex = 0;
        int d0 = 0;
    };
    std::vector<Start> starts;

    struct Edge {
        int src = 0;
        int dst = 0;
        int d = 0;
        int e = 0;
    };
    std::vector<Edge> edges;  // sorted by (src, dst)

    /// Index into vertices, or -1.
    int index_of(const ResidueColumn& col) const;

    /// Edge index for src -> dst, or -1.
    int edge_index(int src, int dst) const;
};

JSGraph build_js_graph(int alpha, int p);

namespace detail {

/// Closure of the starts under a successor rule, with (d, e) edge labels
/// computed from edge_d and the per-column core. Shared by the full and the
/// restricted graph builders.
JSGraph close_graph(int alpha, int p, bool fixed,
                    const std::vector<StartColumn>& starts,
                    const std::function<std::vector<ResidueColumn>(
                        const ResidueColumn&)>& successors,
                    const std::function<CoreShape(const ResidueColumn&)>& core_at);

}  // namespace detail

/// A walk in a construction graph; k edges yield a symbol of length k + 1.
struct JSPath {
    std::vector<int> vertices;  // at least one
};

/// Sum (k+1-i) d_i + sum e_i over the path labels, d_0 taken from the start.
int weight_of_path(const JSGraph& graph, const JSPath& path);

/// The path spelled by a residue symbol, validated against the graph.
JSPath path_of_symbol(const JSGraph& graph, const ResidueSymbol& symbol);

/// The residue symbol spelled by a path.
ResidueSymbol symbol_of_path(const JSGraph& graph, const JSPath& path);

/// A JS partition with the requested p-core and weight: (pw) for the empty
/// core, otherwise the rectangle's Mullineux symbol extended by w singular
/// columns (p, a). Verifies the result before returning it.
Partition js_witness(const CoreShape& core, int w, int p);

/// Graphviz rendering; vertices are labeled "x/y", edges "d,e", and start
/// vertices annotated with their d0 label.
std::string to_dot(const JSGraph& graph);

}  // namespace mlx
