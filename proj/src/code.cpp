#include "crisscross/code.hpp"

#include <bit>
#include <cmath>

#include "crisscross/rng.hpp"

namespace crisscross {

namespace {

constexpr int kMaxSampleTries = 1000000;

void check_code_n(int n) {
    if (n < 8) throw std::invalid_argument("code length must be at least 8");
    log2_exact(n);
}

void check_square_power_of_two(const BitGrid& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("grid must be square");
    log2_exact(x.rows());
}

int parse_single_int(std::string_view s, size_t* idx, int line) {
    size_t i = *idx;
    if (i >= s.size() || s[i] < '0' || s[i] > '9')
        throw ParseError("params line must be \"n a b c d\"", line);
    long v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000) throw ParseError("params value out of range", line);
        ++i;
    }
    *idx = i;
    return static_cast<int>(v);
}

}  // namespace

int log2_exact(int n) {
    if (n < 1 || (n & (n - 1)) != 0)
        throw std::invalid_argument("value must be a power of two");
    int l = 0;
    while ((1 << l) < n) ++l;
    return l;
}

int alternating_bit(int i) { return i % 2 == 0 ? 1 : 0; }

int column_symbol(const BitGrid& x, int ell, int j) {
    int s = 0;
    for (int i = 1; i <= ell; ++i) s = (s << 1) | x.at(i, j);
    return s;
}

int masked_row_symbol(const BitGrid& x, int n, int ell, int i) {
    int s = 0;
    for (int j = n - ell + 1; j <= n; ++j) {
        int b = x.at(i, j);
        if (j == n && i <= ell + 1) b ^= alternating_bit(i);
        s = (s << 1) | b;
    }
    return s;
}

CodeParams CodeParams::make(int n, int a, int b, int c, int d) {
    check_code_n(n);
    CodeParams p;
    p.n = n;
    p.ell = log2_exact(n);
    if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n - 1 || d < 0 || d >= n)
        throw std::invalid_argument("code labels out of range");
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    return p;
}

CodeParams parse_params(std::string_view text) {
    size_t nl = text.find('\n');
    if (nl == std::string_view::npos || nl + 1 != text.size())
        throw ParseError("params file must be a single newline-terminated line", 1);
    std::string_view line = text.substr(0, nl);
    size_t idx = 0;
    int vals[5];
    for (int k = 0; k < 5; ++k) {
        if (k > 0) {
            if (idx >= line.size() || line[idx] != ' ')
                throw ParseError("params line must be \"n a b c d\"", 1);
            ++idx;
        }
        vals[k] = parse_single_int(line, &idx, 1);
    }
    if (idx != line.size()) throw ParseError("unexpected trailing content", 1);
    try {
        return CodeParams::make(vals[0], vals[1], vals[2], vals[3], vals[4]);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1);
    }
}

std::string format_params(const CodeParams& p) {
    return std::to_string(p.n) + " " + std::to_string(p.a) + " " +
           std::to_string(p.b) + " " + std::to_string(p.c) + " " +
           std::to_string(p.d) + "\n";
}

BitGrid mask_w(int n) {
    int ell = log2_exact(n);
    if (n < 2) throw std::invalid_argument("mask needs n >= 2");
    BitGrid w(n, n);
    for (int i = 1; i <= ell + 1; ++i) w.set(i, n, alternating_bit(i));
    return w;
}

QaryWord u_word(const BitGrid& x) {
    check_square_power_of_two(x);
    int n = x.rows();
    int ell = log2_exact(n);
    QaryWord u{n, {}};
    u.symbols.reserve(n);
    for (int j = 1; j <= n; ++j) u.symbols.push_back(column_symbol(x, ell, j));
    return u;
}

QaryWord v_word(const BitGrid& x) {
    check_square_power_of_two(x);
    int n = x.rows();
    int ell = log2_exact(n);
    QaryWord v{n, {}};
    v.symbols.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i)
        v.symbols.push_back(masked_row_symbol(x, n, ell, i));
    return v;
}

StructuralReport structural_check(const BitGrid& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("grid must be square");
    int n = x.rows();
    check_code_n(n);
    int ell = log2_exact(n);

    StructuralReport rep;
    QaryWord u = u_word(x);
    rep.u_cols_distinct = true;
    for (int j = 1; j <= n - 1; ++j)
        if (u.symbols[j - 1] == u.symbols[j]) rep.u_cols_distinct = false;

    rep.u_fixed_bits = true;
    for (int i = 1; i <= 4; ++i)
        if (x.at(i, n - 1) != 0) rep.u_fixed_bits = false;
    for (int i = 1; i <= ell + 1; ++i)
        if (x.at(i, n) != alternating_bit(i)) rep.u_fixed_bits = false;

    QaryWord v = v_word(x);
    rep.v_rows_distinct = true;
    for (int i = 1; i <= n - 2; ++i)
        if (v.symbols[i - 1] == v.symbols[i]) rep.v_rows_distinct = false;

    rep.v_fixed_zero_col = true;
    for (int i = 1; i <= ell + 1; ++i)
        if ((x.at(i, n) ^ alternating_bit(i)) != 0) rep.v_fixed_zero_col = false;

    rep.pc_ok = true;
    for (int i = ell + 1; i <= n - 1; ++i) {
        int p = 0;
        for (int j = 1; j <= n; ++j) p ^= x.at(i, j);
        if (p != 0) rep.pc_ok = false;
    }

    rep.pr_ok = true;
    for (int j = 1; j <= n; ++j) {
        int p = 0;
        for (int i = 1; i <= n; ++i) p ^= x.at(i, j);
        if (p != 0) rep.pr_ok = false;
    }

    int gap = masked_row_symbol(x, n, ell, n - 1) ^ masked_row_symbol(x, n, ell, n);
    rep.parity_row_separated = std::popcount(static_cast<unsigned>(gap)) >= 2;

    // Undo the mask bit on row ell+1 to compare the raw windows.
    int raw_top = masked_row_symbol(x, n, ell, ell + 1) ^ alternating_bit(ell + 1);
    rep.boundary_rows_distinct = raw_top != masked_row_symbol(x, n, ell, ell + 2);

    if (rep.all_ok()) {
        VtLabel ul = vt_label(u);
        VtLabel vl = vt_label(v);
        rep.labels = CodeLabels{ul.a, ul.b, vl.a, vl.b};
    }
    return rep;
}

bool is_codeword(const BitGrid& x, const CodeParams& p) {
    if (x.rows() != p.n || x.cols() != p.n)
        throw std::invalid_argument("grid dimensions do not match the code length");
    StructuralReport rep = structural_check(x);
    if (!rep.all_ok()) return false;
    return rep.labels == CodeLabels{p.a, p.b, p.c, p.d};
}

namespace {

BitGrid draw_structural_grid(int n, int ell, int zfix, Rng& rng) {
    BitGrid x(n, n);

    // Top-right ell x ell square: fixed alternating last column and zero
    // prefix of column n-1, resampled until both band constraints hold
    // inside the square.
    for (int tries = 0;; ++tries) {
        if (tries > kMaxSampleTries)
            throw std::logic_error("sampling stalled in the corner square");
        for (int i = 1; i <= ell; ++i) {
            for (int j = n - ell + 1; j <= n; ++j) {
                if (j == n)
                    x.set(i, j, alternating_bit(i));
                else if (j == n - 1 && i <= zfix)
                    x.set(i, j, 0);
                else
                    x.set(i, j, rng.next_bit());
            }
        }
        bool ok = true;
        for (int j = n - ell + 1; j <= n - 1 && ok; ++j)
            if (column_symbol(x, ell, j) == column_symbol(x, ell, j + 1)) ok = false;
        for (int i = 1; i <= ell - 1 && ok; ++i)
            if (masked_row_symbol(x, n, ell, i) == masked_row_symbol(x, n, ell, i + 1))
                ok = false;
        if (ok) break;
    }

    // Remaining top-band columns, left to right; each must differ from its
    // left neighbor, and the last one also from the square's first column.
    for (int j = 1; j <= n - ell; ++j) {
        for (int tries = 0;; ++tries) {
            if (tries > kMaxSampleTries)
                throw std::logic_error("sampling stalled in the top band");
            for (int i = 1; i <= ell; ++i) x.set(i, j, rng.next_bit());
            int s = column_symbol(x, ell, j);
            if (j > 1 && s == column_symbol(x, ell, j - 1)) continue;
            if (j == n - ell && s == column_symbol(x, ell, j + 1)) continue;
            break;
        }
    }

    // Right-band rows ell+1..n-1, top to bottom; masked rows must differ
    // from their predecessor. Column-n of row ell+1 and the tail of the
    // 4-zero prefix are fixed, the rest is drawn.
    for (int i = ell + 1; i <= n - 1; ++i) {
        for (int tries = 0;; ++tries) {
            if (tries > kMaxSampleTries)
                throw std::logic_error("sampling stalled in the right band");
            for (int j = n - ell + 1; j <= n; ++j) {
                if (i == ell + 1 && j == n)
                    x.set(i, j, alternating_bit(i));
                else if (j == n - 1 && i <= 4)
                    x.set(i, j, 0);
                else
                    x.set(i, j, rng.next_bit());
            }
            if (masked_row_symbol(x, n, ell, i) != masked_row_symbol(x, n, ell, i - 1))
                break;
        }
    }

    // Free interior bits.
    for (int i = ell + 1; i <= n - 1; ++i)
        for (int j = 2; j <= n - ell; ++j) x.set(i, j, rng.next_bit());

    // Parity column (rows ell+1..n-1 of column 1), then parity row n.
    for (int i = ell + 1; i <= n - 1; ++i) {
        int p = 0;
        for (int j = 2; j <= n; ++j) p ^= x.at(i, j);
        x.set(i, 1, p);
    }
    for (int j = 1; j <= n; ++j) {
        int p = 0;
        for (int i = 1; i <= n - 1; ++i) p ^= x.at(i, j);
        x.set(n, j, p);
    }
    return x;
}

}  // namespace

std::pair<BitGrid, CodeParams> sample_codeword(int n, uint64_t seed) {
    check_code_n(n);
    int ell = log2_exact(n);
    int zfix = std::min(4, ell);
    Rng rng(seed);

    // The parity row is derived from everything else and the raw window of
    // row ell+1 is pinned by fixed bits, so the two separation constraints
    // are rejection tests on the whole draw. One attempt fails with
    // probability about (ell + 2) / 2^ell.
    for (int attempt = 0; attempt < 64; ++attempt) {
        BitGrid x = draw_structural_grid(n, ell, zfix, rng);
        StructuralReport rep = structural_check(x);
        if (rep.all_ok()) {
            CodeLabels l = *rep.labels;
            return {x, CodeParams::make(n, l.a, l.b, l.c, l.d)};
        }
        if (rep.parity_row_separated && rep.boundary_rows_distinct)
            throw std::logic_error("sampled grid fails its own structural checks");
    }
    throw std::logic_error("sampling stalled on the separation constraints");
}

long long count_structural(StructuralKind kind, int n_or_ell) {
    switch (kind) {
        case StructuralKind::uperp: {
            int n = n_or_ell;
            int ell = log2_exact(n);
            if (n < 4) throw std::invalid_argument("count requires n >= 4");
            int cols = n - ell;
            if (static_cast<long long>(ell) * cols > 24)
                throw GuardError("constrained region exceeds the enumeration guard");
            int q = 1 << ell;
            std::vector<int> sym(cols, 0);
            long long count = 0;
            while (true) {
                bool ok = true;
                for (int j = 0; j + 1 < cols; ++j)
                    if (sym[j] == sym[j + 1]) { ok = false; break; }
                if (ok) ++count;
                int k = 0;
                while (k < cols && ++sym[k] == q) sym[k++] = 0;
                if (k == cols) break;
            }
            return count;
        }
        case StructuralKind::vperp: {
            int n = n_or_ell;
            int ell = log2_exact(n);
            if (n < 4) throw std::invalid_argument("count requires n >= 4");
            int rows = n - ell - 1;
            if (static_cast<long long>(ell) * rows > 24)
                throw GuardError("constrained region exceeds the enumeration guard");
            int q = 1 << ell;
            // Raw row symbols; the symbol's lowest bit is column n. The fixed
            // bit pins row ell+1's column-n entry so its masked value is 0.
            int w1 = alternating_bit(ell + 1);
            std::vector<int> sym(rows, 0);
            long long count = 0;
            while (true) {
                bool ok = (sym[0] & 1) == w1;
                if (ok) {
                    int prev_masked = sym[0] ^ w1;
                    for (int k = 1; k < rows; ++k) {
                        if (sym[k] == prev_masked) { ok = false; break; }
                        prev_masked = sym[k];
                    }
                }
                if (ok) ++count;
                int k = 0;
                while (k < rows && ++sym[k] == q) sym[k++] = 0;
                if (k == rows) break;
            }
            return count;
        }
        case StructuralKind::scr:
        case StructuralKind::sint: {
            int ell = n_or_ell;
            if (ell < 2) throw std::invalid_argument("count requires ell >= 2");
            if (static_cast<long long>(ell) * ell > 24)
                throw GuardError("constrained region exceeds the enumeration guard");
            int zfix = std::min(4, ell);
            long long count = 0;
            for (uint64_t bits = 0; bits < (1ull << (ell * ell)); ++bits) {
                // Cell (i, j) of the square at bit (i-1)*ell + (j-1).
                auto cell = [&](int i, int j) {
                    return static_cast<int>((bits >> ((i - 1) * ell + (j - 1))) & 1);
                };
                bool ok = true;
                if (kind == StructuralKind::sint) {
                    for (int i = 1; i <= ell && ok; ++i)
                        if (cell(i, ell) != alternating_bit(i)) ok = false;
                    for (int i = 1; i <= zfix && ok; ++i)
                        if (cell(i, ell - 1) != 0) ok = false;
                }
                for (int j = 1; j + 1 <= ell && ok; ++j) {
                    bool diff = false;
                    for (int i = 1; i <= ell; ++i)
                        if (cell(i, j) != cell(i, j + 1)) { diff = true; break; }
                    if (!diff) ok = false;
                }
                for (int i = 1; i + 1 <= ell && ok; ++i) {
                    bool diff = false;
                    for (int j = 1; j <= ell; ++j)
                        if (cell(i, j) != cell(i + 1, j)) { diff = true; break; }
                    if (!diff) ok = false;
                }
                if (ok) ++count;
            }
            return count;
        }
    }
    throw std::invalid_argument("unknown structural kind");
}

RedundancyReport redundancy_bounds(int n) {
    check_code_n(n);
    RedundancyReport r;
    r.n = n;
    double log_n = std::log2(static_cast<double>(n));
    double log_e = 1.0 / std::log(2.0);
    r.lower = 2.0 * n - 2.0 + 2.0 * log_n;
    r.prop1_bound =
        (2.0 * n - 2.0 * log_n - 3.0) * std::log2(static_cast<double>(n) / (n - 1)) +
        5.0 * log_n + 6.0;
    r.parity_redundancy = 2.0 * n - log_n - 1.0;
    r.upper = 2.0 * n + 4.0 * log_n + 7.0 + 2.0 * log_e;
    r.gap = r.upper - r.lower;
    r.gap_bound = 2.0 * log_n + 9.0 + 2.0 * log_e;
    return r;
}

}  // namespace crisscross
