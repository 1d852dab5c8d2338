#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace mlx {

/// A cell (i, j) of a Young diagram. Rows and columns are 1-based.
struct Node {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Node&, const Node&) = default;
};

/// One block of the exponential form (l^a): `a` consecutive parts equal to `l`.
struct Block {
    int len = 0;   // part size l
    int mult = 0;  // multiplicity a

    friend auto operator<=>(const Block&, const Block&) = default;
};

/// An integer partition: weakly decreasing positive parts.
///
/// Immutable after construction. The constructor rejects anything that is
/// not a valid part list, so a Partition value is always well formed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts);

    /// Builds from exponential blocks (l_1^{a_1}, ..., l_t^{a_t}), l_1 > ... > l_t.
    static Partition from_blocks(const std::vector<Block>& blocks);

    const std::vector<int>& parts() const { return parts_; }

    /// Number of boxes.
    int n() const { return n_; }

    /// Number of (positive) parts.
    int rows() const { return static_cast<int>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    /// Part at 1-based row index; 0 beyond the last row.
    int part(int row) const;

    /// Exponential form; round-trips through from_blocks.
    std::vector<Block> blocks() const;

    /// Transpose of the Young diagram.
    Partition conjugate() const;

    bool contains(const Node& node) const;

    /// "(6,6,5,4)"; "()" for the empty partition.
    std::string to_string() const;

    /// "(6^2,5,4)"; "()" for the empty partition.
    std::string to_exponential_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// True iff every part occurs fewer than p times.
bool is_p_regular(const Partition& lambda, int p);

/// (col - row) mod p, in {0, ..., p-1}.
int node_residue(const Node& node, int p);

/// Cells whose removal leaves a Young diagram, by increasing row.
std::vector<Node> removable_nodes(const Partition& lambda);

/// Cells whose addition gives a Young diagram, by increasing row.
std::vector<Node> indent_nodes(const Partition& lambda);

/// Number of cells of each residue; length p, sums to |lambda|.
std::vector<int> content(const Partition& lambda, int p);

/// beta(i, j) = l_i - l_j + sum_{k=i..j} a_k mod p, on 1-based blocks, i <= j.
/// Vanishes exactly when the indent node of block i and the removable node of
/// block j have equal residue.
int beta(const Partition& lambda, int i, int j, int p);

/// gamma(i, j) = l_i - l_j + sum_{k=i+1..j} a_k mod p. Vanishes exactly when
/// the removable nodes of blocks i and j have equal residue.
int gamma(const Partition& lambda, int i, int j, int p);

/// All p-regular partitions of n in lexicographically decreasing order.
std::vector<Partition> p_regular_partitions(int n, int p);

/// Streams p-regular partitions of n without materializing the whole list.
/// Visit order matches p_regular_partitions.
void for_each_p_regular(int n, int p, const std::function<void(const Partition&)>& fn);

/// Parses "6,6,5,4" or the exponential form "5^2,4,1^3". Whitespace allowed
/// around tokens. Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

}  // namespace mlx
