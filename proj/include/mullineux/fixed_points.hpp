#pragma once

#include <optional>
#include <vector>

#include "mullineux/cores.hpp"
#include "mullineux/js.hpp"
#include "mullineux/partition.hpp"
#include "mullineux/symbols.hpp"

namespace mlx {

/// True iff lambda is a JS partition fixed by the Mullineux map. Such
/// partitions are always of type 0. Requires p > 2.
bool is_fixed_js(const Partition& lambda, int p);

/// Successors in the restricted construction: the regular extensions
/// (1-y, y-1) and (y-1, 1-y), plus the singular column (0, 1) when y = 1.
std::vector<ResidueColumn> fixed_extensions(const ResidueColumn& col, int p);

/// The p-core read off the final column of a fixed-point symbol: the square
/// (l^l) for the four column families with 1 <= l <= (p-1)/2, the empty core
/// for (-1, 1) and (0, 1). Throws on columns outside the restricted graph.
CoreShape fixed_core(const ResidueColumn& col, int p);

/// The restricted construction graph: start (0, 0), closure under
/// fixed_extensions, edges labeled like the full graph.
JSGraph build_fixed_js_graph(int p);

/// A Mullineux-fixed JS partition of even weight w with the given square or
/// empty p-core, built by walking the restricted graph. Returns nullopt in
/// the single impossible case w = 2, core = ((p-1)/2 ^ (p-1)/2). Throws on
/// odd weights and on cores that are neither empty nor square p-cores.
std::optional<Partition> fixed_witness(int w, const CoreShape& core, int p);

}  // namespace mlx
