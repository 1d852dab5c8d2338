#pragma once

#include <string>
#include <vector>

#include "mullineux/partition.hpp"

namespace mlx {

/// Column (a, r) of a Mullineux symbol: p-rim length and row count.
struct SymbolColumn {
    int a = 0;
    int r = 0;

    friend auto operator<=>(const SymbolColumn&, const SymbolColumn&) = default;
};

/// Column (x, y) of a residue symbol, both entries in {0, ..., p-1}.
struct ResidueColumn {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const ResidueColumn&, const ResidueColumn&) = default;
};

/// The 2 x m array of (a_i, r_i) pairs from iterated p-rim stripping.
struct MullineuxSymbol {
    std::vector<SymbolColumn> columns;

    int length() const { return static_cast<int>(columns.size()); }
    std::string to_string() const;

    friend auto operator<=>(const MullineuxSymbol&, const MullineuxSymbol&) = default;
};

/// The reversed, mod-p reduced form of a Mullineux symbol: column j holds
/// x_j = a - r and y_j = 1 - r of the Mullineux column m+1-j.
struct ResidueSymbol {
    std::vector<ResidueColumn> columns;

    int length() const { return static_cast<int>(columns.size()); }
    std::string to_string() const;

    friend auto operator<=>(const ResidueSymbol&, const ResidueSymbol&) = default;
};

/// A Mullineux column is singular when p divides its rim length.
bool is_singular(const SymbolColumn& column, int p);

/// A residue column is singular when x + 1 = y mod p.
bool is_singular(const ResidueColumn& column, int p);

/// Iterated p-rim stripping. The empty partition yields the empty symbol.
MullineuxSymbol mullineux_symbol(const Partition& lambda, int p);

/// Inverse of mullineux_symbol: the unique p-regular partition with this
/// symbol. Rebuilds right to left, re-attaching one p-rim per column; each
/// step is validated by stripping again. Throws when no partition realizes
/// the symbol.
Partition partition_of_symbol(const MullineuxSymbol& symbol, int p);

ResidueSymbol residue_symbol(const MullineuxSymbol& symbol, int p);

ResidueSymbol residue_symbol(const Partition& lambda, int p);

/// Recovers the Mullineux symbol from a residue symbol. The base column is
/// pinned by r in {1..p} and a in [r, r+p); each earlier column is pinned by
/// the half-open windows eps <= r - r' < p + eps and r - r' + eps <= a - a'
/// < p + r - r' + eps, where eps = 0 iff the new column is singular. Throws
/// when the base column is not realizable.
MullineuxSymbol reconstruct_mullineux(const ResidueSymbol& symbol, int p);

/// The Mullineux map on symbols: keeps the top row and replaces each r_j by
/// s_j = a_j - r_j + eps_j, eps_j = 0 iff p | a_j.
MullineuxSymbol mullineux_map(const MullineuxSymbol& symbol, int p);

/// The Mullineux map on residue symbols: column (x, y) becomes
/// (delta - y, delta - x) with delta = 1 iff x + 1 = y mod p.
ResidueSymbol mullineux_map(const ResidueSymbol& symbol, int p);

/// The image partition under the Mullineux map.
Partition mullineux_image(const Partition& lambda, int p);

/// n_j = #{i : x_i = j} - #{i : y_i = j+1}; singular columns contribute 0.
std::vector<int> n_vector_from_residue_symbol(const ResidueSymbol& symbol, int p);

/// True iff x_j + y_j = delta_j mod p for every column; equivalently the
/// Mullineux symbol is fixed under the map.
bool is_mullineux_fixed(const Partition& lambda, int p);

/// Checks the two window inequalities on every adjacent column pair and
/// r_m <= a_m on the last column. Returns the 1-based index of the first
/// offending column pair, or 0 when the symbol is valid.
int first_invalid_column_pair(const MullineuxSymbol& symbol, int p);

}  // namespace mlx
