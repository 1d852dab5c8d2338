#include "mullineux/cores.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mlx {

namespace {

void require_p(int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
}

}  // namespace

CoreShape CoreShape::rect(int l, int a) {
    if (l < 1 || a < 1) throw std::invalid_argument("rectangle sides must be positive");
    return {Kind::Rect, l, a};
}

bool CoreShape::is_p_core(int p) const {
    require_p(p);
    return kind == Kind::Empty || l + a - 1 < p;
}

Partition CoreShape::to_partition() const {
    if (kind == Kind::Empty) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(a), l));
}

std::string CoreShape::to_string() const {
    if (kind == Kind::Empty) return "empty";
    std::ostringstream os;
    os << '(' << l << '^' << a << ')';
    return os.str();
}

std::optional<CoreShape> shape_of(const Partition& lambda) {
    if (lambda.empty()) return CoreShape::empty();
    const auto blocks = lambda.blocks();
    if (blocks.size() != 1) return std::nullopt;
    return CoreShape::rect(blocks[0].len, blocks[0].mult);
}

std::vector<Node> p_rim(const Partition& lambda, int p) {
    require_p(p);
    if (lambda.empty()) throw std::invalid_argument("p-rim of the empty partition");
    if (!is_p_regular(lambda, p))
        throw std::invalid_argument("p-rim requires a p-regular partition");

    std::vector<Node> rim;
    const int k = lambda.rows();
    int taken = 0;  // cells in the current segment
    for (int row = 1; row <= k; ++row) {
        // Rim cells of this row run from column part(row) down to the column
        // above the next row's last cell (down to 1 in the final row).
        const int lo = row < k ? lambda.part(row + 1) : 1;
        for (int col = lambda.part(row); col >= lo; --col) {
            rim.push_back({row, col});
            if (++taken == p) {
                taken = 0;
                if (col > lo) {
                    // Segment filled mid-row: skip the rest of this row, the
                    // next segment starts in the row below.
                    break;
                }
            }
        }
    }
    return rim;
}

StripResult strip_p_rim(const Partition& lambda, int p) {
    const auto rim = p_rim(lambda, p);
    std::vector<int> removed(static_cast<std::size_t>(lambda.rows()), 0);
    for (const auto& node : rim) ++removed[static_cast<std::size_t>(node.row - 1)];
    std::vector<int> parts;
    for (int i = 1; i <= lambda.rows(); ++i) {
        const int rest = lambda.part(i) - removed[static_cast<std::size_t>(i - 1)];
        if (rest > 0) parts.push_back(rest);
    }
    return {Partition(std::move(parts)), static_cast<int>(rim.size()), lambda.rows()};
}

Partition p_core(const Partition& lambda, int p) {
    require_p(p);
    const int k = lambda.rows();
    if (k == 0) return {};

    // First-column hook lengths, one bead per row.
    std::vector<int> beads(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        beads[static_cast<std::size_t>(i - 1)] = lambda.part(i) + (k - i);

    std::vector<int> per_runner(static_cast<std::size_t>(p), 0);
    for (int b : beads) ++per_runner[static_cast<std::size_t>(b % p)];

    std::vector<int> pushed;
    for (int r = 0; r < p; ++r)
        for (int i = 0; i < per_runner[static_cast<std::size_t>(r)]; ++i)
            pushed.push_back(r + i * p);
    std::sort(pushed.begin(), pushed.end(), std::greater<>());

    std::vector<int> parts;
    for (int i = 1; i <= k; ++i) {
        const int part = pushed[static_cast<std::size_t>(i - 1)] - (k - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

int weight(const Partition& lambda, int p) {
    const int removed = lambda.n() - p_core(lambda, p).n();
    if (removed % p != 0) throw std::logic_error("core defect not divisible by p");
    return removed / p;
}

std::vector<int> n_vector_of(const Partition& lambda, int p) {
    const auto c = content(lambda, p);
    std::vector<int> n(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j)
        n[static_cast<std::size_t>(j)] =
            c[static_cast<std::size_t>(j)] - c[static_cast<std::size_t>((j + 1) % p)];
    return n;
}

std::vector<int> rect_n_vector(const CoreShape& shape, int p) {
    require_p(p);
    if (!shape.is_p_core(p))
        throw std::invalid_argument("shape " + shape.to_string() + " is not a " +
                                    std::to_string(p) + "-core");
    std::vector<int> n(static_cast<std::size_t>(p), 0);
    if (shape.kind == CoreShape::Kind::Empty) return n;
    const int l = shape.l, a = shape.a;
    if (a <= l) {
        for (int j = l - a; j <= l - 1; ++j) n[static_cast<std::size_t>(j)] += 1;
        for (int j = p - a; j <= p - 1; ++j) n[static_cast<std::size_t>(j)] -= 1;
    } else {
        // Conjugate is the wide rectangle (a^l); reverse and negate its vector.
        const auto wide = rect_n_vector(CoreShape::rect(a, l), p);
        for (int j = 0; j < p; ++j)
            n[static_cast<std::size_t>(j)] = -wide[static_cast<std::size_t>(p - 1 - j)];
    }
    return n;
}

std::optional<CoreShape> classify_rect_nvector(const std::vector<int>& v, int p) {
    require_p(p);
    if (static_cast<int>(v.size()) != p)
        throw std::invalid_argument("n-vector must have length p");
    if (std::accumulate(v.begin(), v.end(), 0) != 0)
        throw std::invalid_argument("n-vector entries must sum to 0");
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
        return CoreShape::empty();
    for (int l = 1; l < p; ++l)
        for (int a = 1; l + a - 1 < p; ++a) {
            const auto shape = CoreShape::rect(l, a);
            if (rect_n_vector(shape, p) == v) return shape;
        }
    return std::nullopt;
}

}  // namespace mlx
