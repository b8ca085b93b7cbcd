#include "crisscross/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "crisscross/channel.hpp"

namespace crisscross {

bool collision_structure(const BitGrid& x, int i1, int j1, int i2, int j2) {
    int n = x.rows();
    if (x.cols() != n) throw std::invalid_argument("grid must be square");
    if (n < 3) throw std::invalid_argument("collision structure needs n >= 3");
    auto in_range = [n](int v) { return v >= 1 && v <= n; };
    if (!in_range(i1) || !in_range(j1) || !in_range(i2) || !in_range(j2))
        throw std::invalid_argument("indices out of range");
    if (i1 == i2 && j1 == j2)
        throw std::invalid_argument("index pairs must be distinct");

    if (j1 > j2) {
        std::swap(i1, i2);
        std::swap(j1, j2);
    }
    int imin = std::min(i1, i2), imax = std::max(i1, i2);

    // Row runs above and below the deleted rows, between the deleted columns.
    for (int i = 1; i <= imin - 1; ++i)
        for (int j = j1; j <= j2 - 1; ++j)
            if (x.at(i, j) != x.at(i, j + 1)) return false;
    for (int i = imax + 1; i <= n; ++i)
        for (int j = j1; j <= j2 - 1; ++j)
            if (x.at(i, j) != x.at(i, j + 1)) return false;

    // Column runs left and right of the deleted columns, between the rows.
    for (int i = imin; i <= imax - 1; ++i) {
        for (int j = 1; j <= j1 - 1; ++j)
            if (x.at(i, j) != x.at(i + 1, j)) return false;
        for (int j = j2 + 1; j <= n; ++j)
            if (x.at(i, j) != x.at(i + 1, j)) return false;
    }

    // Diagonal runs in the center block; direction follows the row order.
    if (i1 <= i2) {
        for (int i = imin; i <= imax - 1; ++i)
            for (int j = j1; j <= j2 - 1; ++j)
                if (x.at(i, j) != x.at(i + 1, j + 1)) return false;
    } else {
        for (int i = imin; i <= imax - 1; ++i)
            for (int j = j1 + 1; j <= j2; ++j)
                if (x.at(i, j) != x.at(i + 1, j - 1)) return false;
    }
    return true;
}

bool good_column_pair(const std::vector<int>& left, const std::vector<int>& col) {
    if (left.size() != col.size())
        throw std::invalid_argument("columns must have equal length");
    int n = static_cast<int>(col.size());
    for (int b : left)
        if (b != 0 && b != 1) throw std::invalid_argument("entries must be 0 or 1");
    for (int b : col)
        if (b != 0 && b != 1) throw std::invalid_argument("entries must be 0 or 1");

    // The pair is bad when col equals left after shifting the segment [i1,i2]
    // one step down or up, with strict equality outside the shifted segment.
    // Each such pattern pins every entry of col, so a fixed left rules out at
    // most 3*C(n,2) right neighbours.
    bool zero = true;
    for (int i = 1; i <= n && zero; ++i)
        if (left[i - 1] != col[i - 1]) zero = false;
    if (zero) return false;

    for (int i1 = 1; i1 <= n - 1; ++i1) {
        for (int i2 = i1 + 1; i2 <= n; ++i2) {
            bool down = true, up = true;
            for (int i = 1; i <= i1 && (down || up); ++i)
                if (left[i - 1] != col[i - 1]) down = up = false;
            for (int i = i2; i <= n && (down || up); ++i)
                if (left[i - 1] != col[i - 1]) down = up = false;
            for (int i = i1 + 1; i <= i2 && down; ++i)
                if (col[i - 1] != left[i - 2]) down = false;
            for (int i = i1; i <= i2 - 1 && up; ++i)
                if (col[i - 1] != left[i]) up = false;
            if (down || up) return false;
        }
    }
    return true;
}

namespace {

std::vector<int> column_of(const BitGrid& x, int j) {
    std::vector<int> v(x.rows());
    for (int i = 1; i <= x.rows(); ++i) v[i - 1] = x.at(i, j);
    return v;
}

}  // namespace

std::vector<int> good_columns(const BitGrid& x) {
    std::vector<int> out;
    for (int j = 2; j <= x.cols(); ++j)
        if (good_column_pair(column_of(x, j - 1), column_of(x, j))) out.push_back(j);
    return out;
}

std::vector<int> good_rows(const BitGrid& x) {
    return good_columns(x.transposed());
}

GoodIndexSets good_index_sets(const BitGrid& x) {
    return GoodIndexSets{good_columns(x), good_rows(x)};
}

long long ball_size(const BitGrid& x) {
    return static_cast<long long>(deletion_ball(x, 1, 1).size());
}

namespace {

// Source bit positions, in row-major target order, of the grid obtained by
// deleting (row i, col j) from an n x n grid packed row-major.
std::vector<int> gather_positions(int n, int i, int j) {
    std::vector<int> pos;
    pos.reserve((n - 1) * (n - 1));
    for (int r = 1; r <= n; ++r) {
        if (r == i) continue;
        for (int c = 1; c <= n; ++c) {
            if (c == j) continue;
            pos.push_back((r - 1) * n + (c - 1));
        }
    }
    return pos;
}

long long count_good_in_range(int n, const std::vector<std::vector<int>>& gathers,
                              uint64_t begin, uint64_t end) {
    int deletions = n * n;
    std::vector<uint64_t> vals(deletions);
    long long good = 0;
    for (uint64_t g = begin; g < end; ++g) {
        int distinct = 0;
        for (int d = 0; d < deletions; ++d) {
            const std::vector<int>& pos = gathers[d];
            uint64_t v = 0;
            for (size_t k = 0; k < pos.size(); ++k) v |= ((g >> pos[k]) & 1ull) << k;
            bool seen = false;
            for (int s = 0; s < distinct; ++s)
                if (vals[s] == v) {
                    seen = true;
                    break;
                }
            if (!seen) vals[distinct++] = v;
        }
        if (2 * distinct >= deletions) ++good;  // |D_{1,1}| >= n^2 / 2
    }
    return good;
}

}  // namespace

CensusReport census(int n, int num_threads) {
    if (n < 2 || n * n > 25)
        throw GuardError("census limited to 2 <= n <= 5");
    if (num_threads <= 0) {
        num_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (num_threads < 1) num_threads = 1;
    }

    std::vector<std::vector<int>> gathers;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gathers.push_back(gather_positions(n, i, j));

    uint64_t total = 1ull << (n * n);
    // Fixed chunking keeps the aggregate independent of the thread count.
    int chunks = 256;
    std::vector<long long> per_chunk(chunks, 0);
    std::vector<std::thread> workers;
    for (int t = 0; t < num_threads; ++t) {
        workers.emplace_back([&, t]() {
            for (int c = t; c < chunks; c += num_threads) {
                uint64_t begin = total / chunks * c;
                uint64_t end = c + 1 == chunks ? total : total / chunks * (c + 1);
                per_chunk[c] = count_good_in_range(n, gathers, begin, end);
            }
        });
    }
    for (auto& w : workers) w.join();

    CensusReport rep;
    rep.n = n;
    for (long long c : per_chunk) rep.num_good += c;
    rep.num_bad = static_cast<long long>(total) - rep.num_good;
    rep.bad_bound = std::sqrt(2.0) * std::pow(2.0, n * n - 3 * n);
    rep.bad_bound_applicable = n >= 54;
    return rep;
}

std::string format_census(const CensusReport& report) {
    return "n=" + std::to_string(report.n) + " good=" + std::to_string(report.num_good) +
           " bad=" + std::to_string(report.num_bad);
}

}  // namespace crisscross
