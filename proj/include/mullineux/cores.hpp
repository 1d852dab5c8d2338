#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mullineux/partition.hpp"

namespace mlx {

/// Empty core or a rectangle (l^a): l columns, a rows.
struct CoreShape {
    enum class Kind { Empty, Rect };

    Kind kind = Kind::Empty;
    int l = 0;
    int a = 0;

    static CoreShape empty() { return {}; }
    static CoreShape rect(int l, int a);

    /// Rect(l, a) is a p-core iff l + a - 1 < p; the empty shape always is.
    bool is_p_core(int p) const;

    Partition to_partition() const;

    /// Box count: l * a, or 0 when empty.
    int size() const { return kind == Kind::Empty ? 0 : l * a; }

    std::string to_string() const;

    friend auto operator<=>(const CoreShape&, const CoreShape&) = default;
};

/// The shape of a partition if it is empty or rectangular, nullopt otherwise.
std::optional<CoreShape> shape_of(const Partition& lambda);

/// Result of removing one p-rim.
struct StripResult {
    Partition rest;
    int rim_length = 0;  // a: number of removed cells
    int row_count = 0;   // r: number of rows of the input
};

/// The p-rim as an ordered node list. Segments of p rim cells are taken from
/// the top row downwards; after a segment fills up mid-row, the walk resumes
/// at the first rim cell of the next row. Requires a nonempty p-regular input.
std::vector<Node> p_rim(const Partition& lambda, int p);

/// Removes the p-rim; the remainder is again p-regular.
StripResult strip_p_rim(const Partition& lambda, int p);

/// The unique p-core, computed on the abacus: first-column hook lengths are
/// placed on p runners and the beads pushed up.
Partition p_core(const Partition& lambda, int p);

/// (|lambda| - |core|) / p.
int weight(const Partition& lambda, int p);

/// Cyclic consecutive differences of the content vector; entries sum to 0.
std::vector<int> n_vector_of(const Partition& lambda, int p);

/// The n-vector of a rectangular (or empty) p-core, by the closed form:
/// for a <= l, +1 at residues l-a..l-1 and -1 at residues p-a..p-1; the tall
/// case is the reverse-negated vector of its conjugate. Throws if the shape
/// is not a p-core.
std::vector<int> rect_n_vector(const CoreShape& shape, int p);

/// Inverse lookup over rect_n_vector; nullopt when no rectangle or empty
/// shape produces v. Requires the entries of v to sum to 0.
std::optional<CoreShape> classify_rect_nvector(const std::vector<int>& v, int p);

}  // namespace mlx
