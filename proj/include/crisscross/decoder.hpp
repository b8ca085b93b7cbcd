#pragma once

#include <optional>

#include "crisscross/code.hpp"
#include "crisscross/grid.hpp"

namespace crisscross {

enum class DecodeCase { case_1a, case_1b, case_2 };

// Which parity-edge hypothesis produced the reconstruction: the deleted row
// was the parity row n, the deleted column was the parity column 1, both,
// or neither.
enum class ParityNote { none, parity_row_deleted, parity_col_deleted, parity_row_and_col_deleted };

struct DecodeTrace {
    DecodeCase case_taken = DecodeCase::case_1a;
    int row_index = 0;  // recovered deleted row, in [1, n]
    int col_index = 0;  // recovered deleted column, in [1, n]
    ParityNote hypothesis_notes = ParityNote::none;
};

struct Classification {
    enum class Kind { last_col_deleted, row_deleted_in_u, u_intact };
    Kind kind = Kind::u_intact;
    int row_index = 0;  // set when kind == row_deleted_in_u
};

// Case detection from the received last column: the all-zero prefix of
// column n-1 shows through iff column n was deleted; otherwise the
// alternating prefix either survives intact (u_intact) or carries the
// signature of one deleted row (first run wins, or a leading 1 for row 1).
Classification classify(const BitGrid& received, int n);

struct DecodeResult {
    BitGrid codeword;
    DecodeTrace trace;
};

// Recovers the unique codeword C of the code `params` with
// received in D_{1,1}(C). Returns nullopt when no reconstruction passes
// membership (received is not in any codeword's ball, or params are wrong).
std::optional<DecodeResult> decode(const BitGrid& received, const CodeParams& params);

}  // namespace crisscross
