#include "crisscross/channel.hpp"

#include <algorithm>

namespace crisscross {

namespace {

constexpr long long kEnumerationGuard = 1ll << 26;

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (1ll << 62) / 64) return 1ll << 62;
    }
    return r;
}

// All size-k subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

void check_deletion_counts(const BitGrid& x, int t_r, int t_c) {
    if (t_r < 0 || t_c < 0) throw std::invalid_argument("deletion counts must be non-negative");
    if (t_r > 0 && t_r > x.rows() - 1)
        throw std::invalid_argument("cannot delete every row");
    if (t_c > 0 && t_c > x.cols() - 1)
        throw std::invalid_argument("cannot delete every column");
}

// One side of an insertion-ball membership pattern over a packed target
// grid: `known` marks the cells carrying the source grid, `value` holds the
// source bits scattered into those cells.
struct LiftPattern {
    uint64_t known;
    uint64_t value;
};

std::vector<LiftPattern> lift_patterns(const BitGrid& g, int target_rows,
                                       int target_cols) {
    int tr = target_rows - g.rows();
    int tc = target_cols - g.cols();
    uint64_t src = g.packed();
    std::vector<LiftPattern> out;
    for (const auto& rs : combinations(target_rows, tr)) {
        std::vector<bool> new_row(target_rows + 1, false);
        for (int i : rs) new_row[i] = true;
        for (const auto& cs : combinations(target_cols, tc)) {
            std::vector<bool> new_col(target_cols + 1, false);
            for (int j : cs) new_col[j] = true;
            LiftPattern p{0, 0};
            int k = 0;
            for (int i = 1; i <= target_rows; ++i) {
                if (new_row[i]) continue;
                for (int j = 1; j <= target_cols; ++j) {
                    if (new_col[j]) continue;
                    int bitpos = (i - 1) * target_cols + (j - 1);
                    p.known |= 1ull << bitpos;
                    p.value |= ((src >> k) & 1ull) << bitpos;
                    ++k;
                }
            }
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace

GridSet GridSet::from_vector(std::vector<BitGrid> grids) {
    for (size_t i = 1; i < grids.size(); ++i)
        if (grids[i].rows() != grids[0].rows() || grids[i].cols() != grids[0].cols())
            throw std::invalid_argument("grid set requires equal dimensions");
    std::sort(grids.begin(), grids.end());
    grids.erase(std::unique(grids.begin(), grids.end()), grids.end());
    GridSet s;
    s.grids_ = std::move(grids);
    return s;
}

bool GridSet::contains(const BitGrid& g) const {
    return std::binary_search(grids_.begin(), grids_.end(), g);
}

bool GridSet::intersects(const GridSet& other) const {
    auto a = grids_.begin();
    auto b = other.grids_.begin();
    while (a != grids_.end() && b != other.grids_.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else
            return true;
    }
    return false;
}

GridSet deletion_ball(const BitGrid& x, int t_r, int t_c) {
    check_deletion_counts(x, t_r, t_c);
    if (binom(x.rows(), t_r) * binom(x.cols(), t_c) > kEnumerationGuard)
        throw GuardError("deletion ball enumeration exceeds guard");
    std::vector<BitGrid> out;
    for (const auto& rs : combinations(x.rows(), t_r))
        for (const auto& cs : combinations(x.cols(), t_c))
            out.push_back(delete_rows_cols(x, DeletionSpec{rs, cs}));
    return GridSet::from_vector(std::move(out));
}

GridSet insertion_ball(const BitGrid& x, int t_r, int t_c) {
    if (t_r < 0 || t_c < 0) throw std::invalid_argument("insertion counts must be non-negative");
    int R = x.rows() + t_r, C = x.cols() + t_c;
    long long new_cells = static_cast<long long>(t_r) * C +
                          static_cast<long long>(t_c) * x.rows();
    long long combos = binom(R, t_r) * binom(C, t_c);
    if (new_cells > 26 || combos > kEnumerationGuard ||
        combos * (1ll << new_cells) > kEnumerationGuard)
        throw GuardError("insertion ball enumeration exceeds guard");

    std::vector<BitGrid> out;
    for (const auto& rs : combinations(R, t_r)) {
        for (const auto& cs : combinations(C, t_c)) {
            std::vector<bool> new_row(R + 1, false), new_col(C + 1, false);
            for (int i : rs) new_row[i] = true;
            for (int j : cs) new_col[j] = true;
            // Fill the base pattern once, then run all new-cell contents.
            BitGrid base(R, C);
            int oi = 1;
            for (int i = 1; i <= R; ++i) {
                if (new_row[i]) continue;
                int oj = 1;
                for (int j = 1; j <= C; ++j) {
                    if (new_col[j]) continue;
                    base.set(i, j, x.at(oi, oj));
                    ++oj;
                }
                ++oi;
            }
            std::vector<std::pair<int, int>> cells;
            for (int i = 1; i <= R; ++i)
                for (int j = 1; j <= C; ++j)
                    if (new_row[i] || new_col[j]) cells.push_back({i, j});
            for (uint64_t v = 0; v < (1ull << cells.size()); ++v) {
                BitGrid g = base;
                for (size_t k = 0; k < cells.size(); ++k)
                    g.set(cells[k].first, cells[k].second, (v >> k) & 1);
                out.push_back(std::move(g));
            }
        }
    }
    return GridSet::from_vector(std::move(out));
}

bool balls_intersect(const BitGrid& x, const BitGrid& y, BallMode mode, int t_r,
                     int t_c) {
    if (t_r < 0 || t_c < 0) throw std::invalid_argument("ball radii must be non-negative");
    int dir = mode == BallMode::deletion ? -1 : 1;
    int target_r = x.rows() + dir * t_r;
    int target_c = x.cols() + dir * t_c;
    int y_tr = dir * (target_r - y.rows());
    int y_tc = dir * (target_c - y.cols());
    if (target_r < 1 || target_c < 1 || y_tr < 0 || y_tc < 0)
        throw std::invalid_argument("grid dimensions do not reach a common target");

    if (mode == BallMode::deletion) {
        GridSet bx = deletion_ball(x, t_r, t_c);
        GridSet by = deletion_ball(y, y_tr, y_tc);
        return bx.intersects(by);
    }

    if (static_cast<long long>(target_r) * target_c <= 64) {
        std::vector<LiftPattern> px = lift_patterns(x, target_r, target_c);
        std::vector<LiftPattern> py = lift_patterns(y, target_r, target_c);
        if (static_cast<long long>(px.size()) * py.size() > kEnumerationGuard)
            throw GuardError("insertion intersection enumeration exceeds guard");
        for (const auto& a : px)
            for (const auto& b : py)
                if (((a.value ^ b.value) & a.known & b.known) == 0) return true;
        return false;
    }
    return insertion_ball(x, t_r, t_c).intersects(insertion_ball(y, y_tr, y_tc));
}

}  // namespace crisscross
