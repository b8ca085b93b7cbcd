#pragma once

#include <string>
#include <vector>

#include "crisscross/grid.hpp"

namespace crisscross {

// Whether deleting (row i1, col j1) and deleting (row i2, col j2) from x
// yield the same array, evaluated purely structurally: row runs above and
// below the deleted rows, column runs left and right of the deleted
// columns, and diagonal runs in the center block, with the four corner
// blocks unconstrained.
bool collision_structure(const BitGrid& x, int i1, int j1, int i2, int j2);

// Whether `col` is good against its left neighbor: col is not left itself,
// and no interval [i1, i2] (i1 < i2) turns left into col by shifting it one
// step down (col[i] == left[i-1] on [i1+1, i2]) or up (col[i] == left[i+1]
// on [i1, i2-1]) while keeping col[i] == left[i] outside the interval. Every
// such pattern fixes all of col, so a fixed left rules out at most 3*C(n,2)
// of the 2^n right neighbours, and a deleted row/column pair that collides
// across two columns always leaves the right one bad.
bool good_column_pair(const std::vector<int>& left, const std::vector<int>& col);

// Ordered index sets of good columns/rows, indices in [2, n].
std::vector<int> good_columns(const BitGrid& x);
std::vector<int> good_rows(const BitGrid& x);

struct GoodIndexSets {
    std::vector<int> good_cols;
    std::vector<int> good_rows;
};
GoodIndexSets good_index_sets(const BitGrid& x);

// |D_{1,1}(x)| by exact enumeration.
long long ball_size(const BitGrid& x);

// Good/bad split of all n x n arrays: good means |D_{1,1}| >= n^2 / 2.
struct CensusReport {
    int n = 0;
    long long num_good = 0;
    long long num_bad = 0;
    double bad_bound = 0;              // sqrt(2) * 2^(n^2 - 3n)
    bool bad_bound_applicable = false; // the bound is only claimed for n >= 54
};

// Exhaustive census over all 2^(n^2) grids, guarded at n <= 5. Thread count
// never changes the result; 0 means use the hardware count.
CensusReport census(int n, int num_threads = 0);

// One-line machine-readable form: "n=<n> good=<count> bad=<count>".
std::string format_census(const CensusReport& report);

}  // namespace crisscross
