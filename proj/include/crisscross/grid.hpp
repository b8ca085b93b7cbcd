#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crisscross {

// Malformed textual input; `line` is the 1-based offending line.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line_no)
        : std::runtime_error(what), line(line_no) {}
    int line;
};

// An enumeration whose state space exceeds the documented guard.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary n_rows x n_cols array. Entries are addressed 1-based as (row, col),
// matching the conventions used throughout this project. Operations never
// mutate their inputs; they return new grids.
class BitGrid {
public:
    BitGrid(int n_rows, int n_cols) : rows_(n_rows), cols_(n_cols) {
        if (n_rows < 0 || n_cols < 0)
            throw std::invalid_argument("grid dimensions must be non-negative");
        bits_.assign(static_cast<size_t>(n_rows) * n_cols, 0);
    }

    // Builder convenience: one string of '0'/'1' per row.
    static BitGrid from_rows(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const {
        assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
        return bits_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
    }

    void set(int i, int j, int value) {
        assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
        assert(value == 0 || value == 1);
        bits_[static_cast<size_t>(i - 1) * cols_ + (j - 1)] =
            static_cast<uint8_t>(value);
    }

    // Row-major packing, cell (i, j) at bit (i-1)*cols + (j-1). Requires
    // rows*cols <= 64; used by enumeration-heavy callers.
    uint64_t packed() const;
    static BitGrid from_packed(int n_rows, int n_cols, uint64_t bits);

    BitGrid transposed() const;

    friend auto operator<=>(const BitGrid&, const BitGrid&) = default;

private:
    int rows_;
    int cols_;
    std::vector<uint8_t> bits_;
};

// Distinct 1-based indices of rows and columns removed together. Order is
// irrelevant; deletion is by index set.
struct DeletionSpec {
    std::vector<int> row_indices;
    std::vector<int> col_indices;
};

BitGrid delete_rows_cols(const BitGrid& x, const DeletionSpec& spec);
BitGrid delete_row_col(const BitGrid& x, int row, int col);

// One inserted row/column: `position` is its 1-based index in the final
// grid, `bits` spans the final dimension (so a row insertion into an
// r x c grid that also gains k columns carries c + k bits).
struct RowInsertion {
    int position = 0;
    std::vector<int> bits;
};
struct ColInsertion {
    int position = 0;
    std::vector<int> bits;
};

// Inserts all rows and columns at once. Cells covered by both a new row and
// a new column must agree between the two contents.
BitGrid insert_rows_cols(const BitGrid& x, const std::vector<RowInsertion>& rows,
                         const std::vector<ColInsertion>& cols);
BitGrid insert_row(const BitGrid& x, int position, const std::vector<int>& bits);
BitGrid insert_col(const BitGrid& x, int position, const std::vector<int>& bits);

// Text format: "<n_rows> <n_cols>\n" then one '0'/'1' line per row, with a
// required trailing newline and no other whitespace.
BitGrid parse_grid(std::string_view text);
std::string format_grid(const BitGrid& x);

}  // namespace crisscross
