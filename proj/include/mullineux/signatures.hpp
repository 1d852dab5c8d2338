#pragma once

#include <string>
#include <vector>

#include "mullineux/partition.hpp"
#include "mullineux/symbols.hpp"

namespace mlx {

/// One entry of a signature sequence: a residue with a sign (+1 or -1).
struct SigEntry {
    int res = 0;
    int sign = +1;

    friend auto operator<=>(const SigEntry&, const SigEntry&) = default;
};

using SignatureSequence = std::vector<SigEntry>;

/// Signed count of residue-alpha entries among indices 0..i.
int sigma(const SignatureSequence& seq, int alpha, int i);

/// Per-entry and per-residue analysis of a signature sequence.
///
/// Entry i of residue alpha is normal when its prefix value strictly exceeds
/// every earlier prefix value of alpha and is positive; its height is that
/// prefix value. The good entry of a residue is the first one attaining the
/// peak (equivalently, the last normal entry of that residue).
struct SignatureAnalysis {
    std::vector<bool> normal;
    std::vector<bool> good;
    std::vector<int> height;   // prefix value at normal entries, 0 elsewhere
    std::vector<int> peak;     // per residue: max prefix value, empty prefix counted as 0
    std::vector<int> end_value;  // per residue: prefix value at the last index
};

SignatureAnalysis analyze(const SignatureSequence& seq, int p);

/// Node sequence N(lambda): residues of the removable (+) and indent (-)
/// nodes read row by row, left to right within a row. The empty partition
/// yields the single entry 0-.
SignatureSequence node_sequence(const Partition& lambda, int p);

/// Mullineux sequence M(lambda): the entry 0- followed by the four entries
/// x+, (x+1)-, y+, (y-1)- of each residue-symbol column in order.
SignatureSequence mullineux_sequence(const Partition& lambda, int p);

SignatureSequence mullineux_sequence(const ResidueSymbol& symbol, int p);

/// "1+ 2- 1- 4+ ..." with ASCII signs.
std::string to_text(const SignatureSequence& seq);

/// Inverse of to_text. Throws std::invalid_argument on malformed input.
SignatureSequence signature_from_text(const std::string& text, int p);

/// A normal block of a partition: 1-based block index, the residue of its
/// removable node, its height (rank among normal blocks of equal residue,
/// counted from the top), and whether it is good (lowest normal of its
/// residue).
struct BlockNormal {
    int block = 0;
    int residue = 0;
    int height = 0;
    bool good = false;

    friend auto operator<=>(const BlockNormal&, const BlockNormal&) = default;
};

/// Normal and good blocks by the distinct-representatives condition: block i
/// is normal when the set M_i = {j < i : beta(j, i) = 0 mod p} admits an
/// injection j -> d(j) into {j+1, ..., i-1} with beta(j, d(j)) = 0 mod p,
/// found here by bipartite matching. Good blocks are the normal ones with no
/// lower normal block of the same removable residue.
std::vector<BlockNormal> normal_nodes_block(const Partition& lambda, int p);

}  // namespace mlx
