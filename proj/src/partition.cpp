#include "mullineux/partition.hpp"

#include <algorithm>
#include <numeric>
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

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::from_blocks(const std::vector<Block>& blocks) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& [len, mult] = blocks[i];
        if (len <= 0 || mult <= 0)
            throw std::invalid_argument("block lengths and multiplicities must be positive");
        if (i > 0 && len >= blocks[i - 1].len)
            throw std::invalid_argument("block lengths must be strictly decreasing");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), len);
    }
    return Partition(std::move(parts));
}

int Partition::part(int row) const {
    if (row < 1) throw std::out_of_range("row index is 1-based");
    if (row > rows()) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

std::vector<Block> Partition::blocks() const {
    std::vector<Block> out;
    for (int part : parts_) {
        if (!out.empty() && out.back().len == part)
            ++out.back().mult;
        else
            out.push_back({part, 1});
    }
    return out;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

bool Partition::contains(const Node& node) const {
    return node.row >= 1 && node.row <= rows() && node.col >= 1 &&
           node.col <= part(node.row);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::string Partition::to_exponential_string() const {
    std::ostringstream os;
    os << '(';
    const auto bs = blocks();
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (i) os << ',';
        os << bs[i].len;
        if (bs[i].mult > 1) os << '^' << bs[i].mult;
    }
    os << ')';
    return os.str();
}

bool is_p_regular(const Partition& lambda, int p) {
    require_p(p);
    for (const auto& block : lambda.blocks())
        if (block.mult >= p) return false;
    return true;
}

int node_residue(const Node& node, int p) {
    require_p(p);
    return mod_p(node.col - node.row, p);
}

std::vector<Node> removable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    const int k = lambda.rows();
    for (int i = 1; i <= k; ++i)
        if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
    return out;
}

std::vector<Node> indent_nodes(const Partition& lambda) {
    std::vector<Node> out;
    const int k = lambda.rows();
    for (int i = 1; i <= k; ++i)
        if (i == 1 || lambda.part(i - 1) > lambda.part(i))
            out.push_back({i, lambda.part(i) + 1});
    out.push_back({k + 1, 1});
    return out;
}

std::vector<int> content(const Partition& lambda, int p) {
    require_p(p);
    std::vector<int> counts(static_cast<std::size_t>(p), 0);
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            ++counts[static_cast<std::size_t>(mod_p(j - i, p))];
    return counts;
}

namespace {

int block_quantity(const Partition& lambda, int i, int j, int p, bool include_first) {
    require_p(p);
    const auto blocks = lambda.blocks();
    const int t = static_cast<int>(blocks.size());
    if (i < 1 || j < i || j > t)
        throw std::out_of_range("block indices must satisfy 1 <= i <= j <= t");
    long long value = blocks[static_cast<std::size_t>(i - 1)].len -
                      blocks[static_cast<std::size_t>(j - 1)].len;
    for (int k = include_first ? i : i + 1; k <= j; ++k)
        value += blocks[static_cast<std::size_t>(k - 1)].mult;
    return mod_p(value, p);
}

}  // namespace

int beta(const Partition& lambda, int i, int j, int p) {
    return block_quantity(lambda, i, j, p, true);
}

int gamma(const Partition& lambda, int i, int j, int p) {
    return block_quantity(lambda, i, j, p, false);
}

namespace {

// Parts are chosen left to right, each at most the previous one and repeated
// fewer than p times, so the emitted order is lexicographically decreasing.
void emit_p_regular(std::vector<int>& prefix, int remaining, int max_part, int p,
                    const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(prefix));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        int run = 0;
        for (auto it = prefix.rbegin(); it != prefix.rend() && *it == part; ++it) ++run;
        if (run >= p - 1) continue;
        prefix.push_back(part);
        emit_p_regular(prefix, remaining - part, part, p, fn);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_p_regular(int n, int p, const std::function<void(const Partition&)>& fn) {
    require_p(p);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<int> prefix;
    emit_p_regular(prefix, n, n, p, fn);
}

std::vector<Partition> p_regular_partitions(int n, int p) {
    std::vector<Partition> out;
    for_each_p_regular(n, p, [&](const Partition& lambda) { out.push_back(lambda); });
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<Block> blocks;
    std::string token;
    std::istringstream stream(text);
    bool saw_token = false;
    while (std::getline(stream, token, ',')) {
        saw_token = true;
        std::istringstream ts(token);
        int len = 0;
        if (!(ts >> len)) throw std::invalid_argument("bad partition token: " + token);
        int mult = 1;
        char caret = 0;
        if (ts >> caret) {
            if (caret != '^' || !(ts >> mult))
                throw std::invalid_argument("bad partition token: " + token);
        }
        char trailing = 0;
        if (ts >> trailing) throw std::invalid_argument("bad partition token: " + token);
        if (!blocks.empty() && blocks.back().len == len)
            blocks.back().mult += mult;
        else
            blocks.push_back({len, mult});
    }
    if (!saw_token) return {};
    return Partition::from_blocks(blocks);
}

}  // namespace mlx
