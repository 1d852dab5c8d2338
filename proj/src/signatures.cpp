#include "mullineux/signatures.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mlx {

namespace {

int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

void require_p(int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
}

void check_entries(const SignatureSequence& seq, int p) {
    require_p(p);
    for (const auto& e : seq) {
        if (e.res < 0 || e.res >= p)
            throw std::invalid_argument("signature residue out of range");
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("signature sign must be +1 or -1");
    }
}

}  // namespace

int sigma(const SignatureSequence& seq, int alpha, int i) {
    if (i < 0 || i >= static_cast<int>(seq.size()))
        throw std::out_of_range("signature index out of range");
    int value = 0;
    for (int k = 0; k <= i; ++k)
        if (seq[static_cast<std::size_t>(k)].res == alpha)
            value += seq[static_cast<std::size_t>(k)].sign;
    return value;
}

SignatureAnalysis analyze(const SignatureSequence& seq, int p) {
    check_entries(seq, p);
    const int s = static_cast<int>(seq.size());
    SignatureAnalysis out;
    out.normal.assign(static_cast<std::size_t>(s), false);
    out.good.assign(static_cast<std::size_t>(s), false);
    out.height.assign(static_cast<std::size_t>(s), 0);
    out.peak.assign(static_cast<std::size_t>(p), std::numeric_limits<int>::min());
    out.end_value.assign(static_cast<std::size_t>(p), 0);

    std::vector<int> value(static_cast<std::size_t>(p), 0);
    // Max prefix value per residue over indices strictly before the current one.
    std::vector<int> max_before(static_cast<std::size_t>(p),
                                std::numeric_limits<int>::min());
    std::vector<int> first_peak(static_cast<std::size_t>(p), -1);

    for (int i = 0; i < s; ++i) {
        const auto& e = seq[static_cast<std::size_t>(i)];
        const auto r = static_cast<std::size_t>(e.res);
        value[r] += e.sign;
        if (e.sign > 0 && value[r] > 0 && value[r] > max_before[r]) {
            out.normal[static_cast<std::size_t>(i)] = true;
            out.height[static_cast<std::size_t>(i)] = value[r];
        }
        for (int a = 0; a < p; ++a) {
            const auto ai = static_cast<std::size_t>(a);
            max_before[ai] = std::max(max_before[ai], value[ai]);
            if (value[ai] > out.peak[ai]) {
                out.peak[ai] = value[ai];
                first_peak[ai] = i;
            }
        }
    }
    for (int a = 0; a < p; ++a) {
        const auto ai = static_cast<std::size_t>(a);
        out.end_value[ai] = value[ai];
        const int i = first_peak[ai];
        if (i >= 0 && seq[static_cast<std::size_t>(i)].res == a &&
            out.normal[static_cast<std::size_t>(i)])
            out.good[static_cast<std::size_t>(i)] = true;
        // The empty prefix counts as value 0, so peaks are never negative.
        out.peak[ai] = std::max(out.peak[ai], 0);
    }
    return out;
}

SignatureSequence node_sequence(const Partition& lambda, int p) {
    require_p(p);
    SignatureSequence seq;
    const int k = lambda.rows();
    for (int i = 1; i <= k + 1; ++i) {
        // Within a row the removable node sits one column left of the indent.
        if (i <= k && lambda.part(i) > lambda.part(i + 1))
            seq.push_back({node_residue({i, lambda.part(i)}, p), +1});
        if (i <= k) {
            if (i == 1 || lambda.part(i - 1) > lambda.part(i))
                seq.push_back({node_residue({i, lambda.part(i) + 1}, p), -1});
        } else {
            seq.push_back({node_residue({k + 1, 1}, p), -1});
        }
    }
    return seq;
}

SignatureSequence mullineux_sequence(const ResidueSymbol& symbol, int p) {
    require_p(p);
    SignatureSequence seq;
    seq.push_back({0, -1});
    for (const auto& col : symbol.columns) {
        seq.push_back({col.x, +1});
        seq.push_back({mod_p(col.x + 1, p), -1});
        seq.push_back({col.y, +1});
        seq.push_back({mod_p(col.y - 1, p), -1});
    }
    return seq;
}

SignatureSequence mullineux_sequence(const Partition& lambda, int p) {
    return mullineux_sequence(residue_symbol(lambda, p), p);
}

std::string to_text(const SignatureSequence& seq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) os << ' ';
        os << seq[i].res << (seq[i].sign > 0 ? '+' : '-');
    }
    return os.str();
}

SignatureSequence signature_from_text(const std::string& text, int p) {
    require_p(p);
    SignatureSequence seq;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) {
        if (token.size() < 2)
            throw std::invalid_argument("bad signature token: " + token);
        const char sign = token.back();
        if (sign != '+' && sign != '-')
            throw std::invalid_argument("bad signature token: " + token);
        int res = 0;
        try {
            res = std::stoi(token.substr(0, token.size() - 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad signature token: " + token);
        }
        if (res < 0 || res >= p)
            throw std::invalid_argument("signature residue out of range: " + token);
        seq.push_back({res, sign == '+' ? +1 : -1});
    }
    return seq;
}

namespace {

// Kuhn's augmenting-path matching; sizes here are tiny.
bool augment(int left, const std::vector<std::vector<int>>& adj,
             std::vector<int>& match_right, std::vector<bool>& visited) {
    for (int right : adj[static_cast<std::size_t>(left)]) {
        if (visited[static_cast<std::size_t>(right)]) continue;
        visited[static_cast<std::size_t>(right)] = true;
        if (match_right[static_cast<std::size_t>(right)] < 0 ||
            augment(match_right[static_cast<std::size_t>(right)], adj, match_right,
                    visited)) {
            match_right[static_cast<std::size_t>(right)] = left;
            return true;
        }
    }
    return false;
}

bool has_distinct_representatives(const std::vector<std::vector<int>>& adj, int rights) {
    std::vector<int> match_right(static_cast<std::size_t>(rights), -1);
    for (std::size_t left = 0; left < adj.size(); ++left) {
        std::vector<bool> visited(static_cast<std::size_t>(rights), false);
        if (!augment(static_cast<int>(left), adj, match_right, visited)) return false;
    }
    return true;
}

}  // namespace

std::vector<BlockNormal> normal_nodes_block(const Partition& lambda, int p) {
    require_p(p);
    if (!is_p_regular(lambda, p))
        throw std::invalid_argument("block analysis requires a p-regular partition");
    const auto blocks = lambda.blocks();
    const int t = static_cast<int>(blocks.size());

    std::vector<int> removable_res(static_cast<std::size_t>(t));
    int rows_seen = 0;
    for (int i = 1; i <= t; ++i) {
        rows_seen += blocks[static_cast<std::size_t>(i - 1)].mult;
        removable_res[static_cast<std::size_t>(i - 1)] =
            mod_p(blocks[static_cast<std::size_t>(i - 1)].len - rows_seen, p);
    }

    std::vector<BlockNormal> out;
    for (int i = 1; i <= t; ++i) {
        std::vector<int> members;
        for (int j = 1; j < i; ++j)
            if (beta(lambda, j, i, p) == 0) members.push_back(j);
        // d(j) must lie strictly between j and i with beta(j, d(j)) = 0.
        std::vector<std::vector<int>> adj(members.size());
        for (std::size_t mi = 0; mi < members.size(); ++mi)
            for (int d = members[mi] + 1; d < i; ++d)
                if (beta(lambda, members[mi], d, p) == 0)
                    adj[mi].push_back(d - 1);
        if (!has_distinct_representatives(adj, std::max(0, i - 1))) continue;
        out.push_back({i, removable_res[static_cast<std::size_t>(i - 1)], 0, false});
    }

    for (auto& entry : out) {
        int rank = 0;
        bool lowest = true;
        for (const auto& other : out) {
            if (other.residue != entry.residue) continue;
            if (other.block <= entry.block) ++rank;
            if (other.block > entry.block) lowest = false;
        }
        entry.height = rank;
        entry.good = lowest;
    }
    return out;
}

}  // namespace mlx
