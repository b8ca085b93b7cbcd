#pragma once

#include <optional>
#include <string>
#include <utility>

#include "crisscross/grid.hpp"
#include "crisscross/vt.hpp"

namespace crisscross {

// Parameters naming one code over n x n arrays, n = 2^ell >= 8:
// (a, b) label the column word of the top band, (c, d) label the masked row
// word of the right band. Ranges: a in [0, n), b in [0, n), c in [0, n-1),
// d in [0, n).
struct CodeParams {
    int n = 0;
    int ell = 0;
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    static CodeParams make(int n, int a, int b, int c, int d);
    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

// Single line "n a b c d" with a trailing newline.
CodeParams parse_params(std::string_view text);
std::string format_params(const CodeParams& p);

int log2_exact(int n);        // n must be a power of two
int alternating_bit(int i);   // 0, 1, 0, 1, ... for i = 1, 2, 3, ...

// The fixed mask: zero everywhere except column n, rows 1..ell+1, which
// alternates 0, 1, 0, ... Codewords are constrained on x xor mask_w.
BitGrid mask_w(int n);

// ell-bit symbol of column j over rows 1..ell, row 1 most significant.
int column_symbol(const BitGrid& x, int ell, int j);

// ell-bit masked symbol of row i over columns n-ell+1..n, leftmost bit most
// significant; the mask flips column n on rows 1..ell+1. `n` names the code
// length, so partially reassembled grids with n columns work too.
int masked_row_symbol(const BitGrid& x, int n, int ell, int i);

// Column word of the top band: n symbols over [0, 2^ell), symbol j reads
// column j rows 1..ell with row 1 as the most significant bit.
QaryWord u_word(const BitGrid& x);

// Row word of the masked right band: n-1 symbols over [0, 2^ell), symbol i
// reads row i of (x xor w) at columns n-ell+1..n, leftmost bit most
// significant.
QaryWord v_word(const BitGrid& x);

struct CodeLabels {
    int a = 0, b = 0, c = 0, d = 0;
    friend bool operator==(const CodeLabels&, const CodeLabels&) = default;
};

struct StructuralReport {
    bool u_cols_distinct = false;   // consecutive top-band columns differ
    bool u_fixed_bits = false;      // four zeros in column n-1, alternating column n
    bool v_rows_distinct = false;   // consecutive masked right-band rows differ
    bool v_fixed_zero_col = false;  // masked column n is zero on rows 1..ell+1
    bool pc_ok = false;             // rows ell+1..n-1 have even parity
    bool pr_ok = false;             // every column has even parity
    // Rows n-1 and n differ in at least two of the last ell columns. Mere
    // inequality is not enough: when the deletion removes the one column
    // where they differ plus row n-1, the parity row can masquerade as a
    // data row and a second codeword explains the received grid.
    bool parity_row_separated = false;
    // Rows ell+1 and ell+2 differ in the last ell columns before masking.
    // The masked symbols of these two rows differ automatically (only row
    // ell+1 carries the mask bit), so the masked check is vacuous exactly
    // when the raw windows coincide; swapping the two rows then yields a
    // second codeword with the same labels and the same deletion result.
    bool boundary_rows_distinct = false;
    std::optional<CodeLabels> labels;  // set iff all structural checks hold

    bool all_ok() const {
        return u_cols_distinct && u_fixed_bits && v_rows_distinct &&
               v_fixed_zero_col && pc_ok && pr_ok && parity_row_separated &&
               boundary_rows_distinct;
    }
};

StructuralReport structural_check(const BitGrid& x);
bool is_codeword(const BitGrid& x, const CodeParams& p);

// Draws a uniform-ish codeword by constrained rejection sampling and returns
// it with the parameters it belongs to (labels are computed, not chosen).
std::pair<BitGrid, CodeParams> sample_codeword(int n, uint64_t seed);

// Exact sizes of the structural component sets, by exhaustive enumeration of
// the constrained region (guarded at 2^24 states).
//   uperp: top-band fillings of columns 1..n-ell with consecutive columns
//          distinct; closed form 2^ell (2^ell - 1)^(n-ell-1). Parameter n.
//   vperp: right-band fillings of rows ell+1..n-1 with consecutive rows
//          distinct and the fixed masked bit; closed form
//          2^(ell-1) (2^ell - 1)^(n-ell-2). Parameter n.
//   scr:   ell x ell squares with consecutive rows and consecutive columns
//          distinct. Parameter ell.
//   sint:  ell x ell squares additionally carrying the fixed corner bits
//          (alternating last column, zeros in column ell-1 rows 1..min(4,ell))
//          with the distinctness restricted to the square. Parameter ell.
enum class StructuralKind { uperp, vperp, scr, sint };
long long count_structural(StructuralKind kind, int n_or_ell);

// Redundancy accounting in bits (log base 2) for code length n = 2^ell >= 8.
struct RedundancyReport {
    int n = 0;
    double lower = 0;              // 2n - 2 + 2 log n, the existence bound
    double prop1_bound = 0;        // best-coset counting bound
    double parity_redundancy = 0;  // 2n - log n - 1 spent on the parity sets
    double upper = 0;              // 2n + 4 log n + 7 + 2 log e
    double gap = 0;                // upper - lower
    double gap_bound = 0;          // 2 log n + 9 + 2 log e
};

RedundancyReport redundancy_bounds(int n);

}  // namespace crisscross
