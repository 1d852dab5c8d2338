#include "mullineux/symbols.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mullineux/cores.hpp"

namespace mlx {

namespace {

int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

void require_p(int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
}

}  // namespace

std::string MullineuxSymbol::to_string() const {
    std::ostringstream top, bottom;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) {
            top << ' ';
            bottom << ' ';
        }
        top << columns[i].a;
        bottom << columns[i].r;
    }
    return "(" + top.str() + " // " + bottom.str() + ")";
}

std::string ResidueSymbol::to_string() const {
    std::ostringstream top, bottom;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) {
            top << ' ';
            bottom << ' ';
        }
        top << columns[i].x;
        bottom << columns[i].y;
    }
    return "{" + top.str() + " // " + bottom.str() + "}";
}

bool is_singular(const SymbolColumn& column, int p) {
    require_p(p);
    return column.a % p == 0;
}

bool is_singular(const ResidueColumn& column, int p) {
    require_p(p);
    return mod_p(column.x + 1, p) == column.y;
}

MullineuxSymbol mullineux_symbol(const Partition& lambda, int p) {
    require_p(p);
    if (!is_p_regular(lambda, p))
        throw std::invalid_argument("Mullineux symbol requires a p-regular partition");
    MullineuxSymbol symbol;
    Partition current = lambda;
    while (!current.empty()) {
        auto step = strip_p_rim(current, p);
        symbol.columns.push_back({step.rim_length, step.row_count});
        current = std::move(step.rest);
    }
    return symbol;
}

namespace {

// All partitions nu with exactly `rows` rows whose p-rim strip removes `rim`
// cells and leaves exactly mu. The search walks the rows top-down; at each
// row the strip either consumed the row's whole rim portion or was cut at a
// segment boundary, which pins the next row's first column to a narrow set.
// Every hit is re-validated by stripping.
class RimAttacher {
public:
    RimAttacher(const Partition& mu, int rim, int rows, int p)
        : mu_(mu), rim_(rim), rows_(rows), p_(p) {}

    std::vector<Partition> all() {
        if (mu_.rows() > rows_ || rim_ < rows_ || rows_ < 1) return {};
        nu_.assign(static_cast<std::size_t>(rows_), 0);
        // The top row belongs to the first segment, so it loses at most p.
        for (int d1 = std::min(p_, rim_); d1 >= 1; --d1) {
            nu_[0] = mu_.part(1) + d1;
            descend(1, d1);
        }
        return found_;
    }

private:
    // Budget left in the current segment when entering row j (1-based).
    int budget(int removed_before) const {
        const int r = removed_before % p_;
        return r == 0 ? p_ : p_ - r;
    }

    void descend(int j, int removed) {
        const int mu_j = mu_.part(j);
        const int d_j = nu_[static_cast<std::size_t>(j - 1)] - mu_j;
        const int b_j = budget(removed - d_j);
        if (d_j > b_j) return;
        if (j == rows_) {
            if (removed != rim_) return;
            if (mu_j != 0 && d_j != b_j) return;  // cut must land on a segment boundary
            finish();
            return;
        }
        const int remaining_rows = rows_ - j;
        if (removed + remaining_rows > rim_) return;
        if (removed + (mu_j - mu_.part(rows_)) + remaining_rows < rim_) return;

        // Row j consumed in full: the strip stopped at column mu_j + 1, so the
        // next row extends exactly to mu_j + 1.
        try_next(j, removed, mu_j + 1);
        // Row j cut at a segment boundary: anything at or left of mu_j works.
        if (d_j == b_j) {
            const int hi = std::min(mu_j, nu_[static_cast<std::size_t>(j - 1)]);
            for (int next = hi; next >= mu_.part(j + 1) + 1; --next)
                try_next(j, removed, next);
        }
    }

    void try_next(int j, int removed, int next) {
        if (next < mu_.part(j + 1) + 1) return;
        if (next > nu_[static_cast<std::size_t>(j - 1)]) return;
        nu_[static_cast<std::size_t>(j)] = next;
        descend(j + 1, removed + next - mu_.part(j + 1));
    }

    void finish() {
        Partition candidate(std::vector<int>(nu_.begin(), nu_.end()));
        if (!is_p_regular(candidate, p_)) return;
        const auto check = strip_p_rim(candidate, p_);
        if (check.rest == mu_ && check.rim_length == rim_ && check.row_count == rows_)
            found_.push_back(std::move(candidate));
    }

    const Partition& mu_;
    int rim_;
    int rows_;
    int p_;
    std::vector<int> nu_;
    std::vector<Partition> found_;
};

bool realize(const std::vector<SymbolColumn>& columns, std::size_t idx, int p,
             Partition& current) {
    if (idx == 0) return true;
    const auto& column = columns[idx - 1];
    for (auto& candidate : RimAttacher(current, column.a, column.r, p).all()) {
        Partition saved = std::move(current);
        current = std::move(candidate);
        if (realize(columns, idx - 1, p, current)) return true;
        current = std::move(saved);
    }
    return false;
}

}  // namespace

Partition partition_of_symbol(const MullineuxSymbol& symbol, int p) {
    require_p(p);
    for (std::size_t i = 0; i < symbol.columns.size(); ++i) {
        const auto& [a, r] = symbol.columns[i];
        if (r < 1 || a < r)
            throw std::invalid_argument("column " + std::to_string(i + 1) +
                                        " violates 1 <= r <= a");
    }
    Partition current;
    if (!realize(symbol.columns, symbol.columns.size(), p, current))
        throw std::invalid_argument("no p-regular partition realizes the symbol " +
                                    symbol.to_string());
    return current;
}

ResidueSymbol residue_symbol(const MullineuxSymbol& symbol, int p) {
    require_p(p);
    ResidueSymbol out;
    const int m = symbol.length();
    out.columns.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        const auto& col = symbol.columns[static_cast<std::size_t>(m - j)];
        out.columns.push_back({mod_p(col.a - col.r, p), mod_p(1 - col.r, p)});
    }
    return out;
}

ResidueSymbol residue_symbol(const Partition& lambda, int p) {
    return residue_symbol(mullineux_symbol(lambda, p), p);
}

MullineuxSymbol reconstruct_mullineux(const ResidueSymbol& symbol, int p) {
    require_p(p);
    const int m = symbol.length();
    MullineuxSymbol out;
    if (m == 0) return out;

    // Base column: r in {1..p} and a in [r, r+p), both pinned by residues.
    const auto& base = symbol.columns[0];
    int r = mod_p(1 - base.y, p);
    if (r == 0) r = p;
    int a = r + base.x;
    if (a == p && r == p)
        throw std::invalid_argument(
            "column 1 of " + symbol.to_string() +
            " is not realizable as a fully stripped p-regular partition");
    std::vector<SymbolColumn> rev{{a, r}};

    for (int k = 2; k <= m; ++k) {
        const auto& col = symbol.columns[static_cast<std::size_t>(k - 1)];
        const auto& prev = symbol.columns[static_cast<std::size_t>(k - 2)];
        // The row difference window is anchored by the new column's flag,
        // the rim-length window by the previous column's flag.
        const int eps_new = is_singular(col, p) ? 0 : 1;
        const int eps_prev = is_singular(prev, p) ? 0 : 1;
        const int dr = eps_new + mod_p(prev.y - col.y - eps_new, p);
        const int da = dr + eps_prev + mod_p(col.x - prev.x - eps_prev, p);
        rev.push_back({rev.back().a + da, rev.back().r + dr});
    }
    out.columns.assign(rev.rbegin(), rev.rend());
    return out;
}

MullineuxSymbol mullineux_map(const MullineuxSymbol& symbol, int p) {
    require_p(p);
    MullineuxSymbol out = symbol;
    for (auto& col : out.columns) {
        const int eps = is_singular(col, p) ? 0 : 1;
        col.r = col.a - col.r + eps;
    }
    return out;
}

ResidueSymbol mullineux_map(const ResidueSymbol& symbol, int p) {
    require_p(p);
    ResidueSymbol out = symbol;
    for (auto& col : out.columns) {
        const int delta = is_singular(col, p) ? 1 : 0;
        col = {mod_p(delta - col.y, p), mod_p(delta - col.x, p)};
    }
    return out;
}

Partition mullineux_image(const Partition& lambda, int p) {
    return partition_of_symbol(mullineux_map(mullineux_symbol(lambda, p), p), p);
}

std::vector<int> n_vector_from_residue_symbol(const ResidueSymbol& symbol, int p) {
    require_p(p);
    std::vector<int> n(static_cast<std::size_t>(p), 0);
    for (const auto& col : symbol.columns) {
        n[static_cast<std::size_t>(col.x)] += 1;
        n[static_cast<std::size_t>(mod_p(col.y - 1, p))] -= 1;
    }
    return n;
}

bool is_mullineux_fixed(const Partition& lambda, int p) {
    const auto symbol = residue_symbol(lambda, p);
    for (const auto& col : symbol.columns) {
        const int delta = is_singular(col, p) ? 1 : 0;
        if (mod_p(col.x + col.y, p) != delta) return false;
    }
    return true;
}

int first_invalid_column_pair(const MullineuxSymbol& symbol, int p) {
    require_p(p);
    const int m = symbol.length();
    if (m == 0) return 0;
    for (int i = 1; i < m; ++i) {
        const auto& left = symbol.columns[static_cast<std::size_t>(i - 1)];
        const auto& right = symbol.columns[static_cast<std::size_t>(i)];
        const int eps_left = is_singular(left, p) ? 0 : 1;
        const int eps_right = is_singular(right, p) ? 0 : 1;
        const int dr = left.r - right.r;
        const int da = left.a - right.a;
        if (dr < eps_left || dr >= p + eps_left) return i;
        if (da < dr + eps_right || da >= p + dr + eps_right) return i;
    }
    const auto& last = symbol.columns.back();
    if (last.r < 1 || last.r > last.a) return m;
    return 0;
}

}  // namespace mlx
