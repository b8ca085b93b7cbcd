#include "crisscross/grid.hpp"

#include <algorithm>

namespace crisscross {

namespace {

// Validates a 1-based index set against `limit` and returns it sorted.
std::vector<int> sorted_index_set(const std::vector<int>& indices, int limit,
                                  const char* what) {
    std::vector<int> s = indices;
    std::sort(s.begin(), s.end());
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 1 || s[k] > limit)
            throw std::invalid_argument(std::string(what) + " index out of range");
        if (k > 0 && s[k] == s[k - 1])
            throw std::invalid_argument(std::string(what) + " indices must be distinct");
    }
    return s;
}

void check_bit(int b, const char* what) {
    if (b != 0 && b != 1)
        throw std::invalid_argument(std::string(what) + " entries must be 0 or 1");
}

}  // namespace

BitGrid BitGrid::from_rows(const std::vector<std::string>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    BitGrid g(r, c);
    for (int i = 1; i <= r; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != c)
            throw std::invalid_argument("rows must have equal length");
        for (int j = 1; j <= c; ++j) {
            char ch = rows[i - 1][j - 1];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("rows must consist of 0 and 1");
            g.set(i, j, ch - '0');
        }
    }
    return g;
}

uint64_t BitGrid::packed() const {
    if (static_cast<long long>(rows_) * cols_ > 64)
        throw std::invalid_argument("grid too large to pack into 64 bits");
    uint64_t v = 0;
    for (size_t k = 0; k < bits_.size(); ++k)
        v |= static_cast<uint64_t>(bits_[k]) << k;
    return v;
}

BitGrid BitGrid::from_packed(int n_rows, int n_cols, uint64_t bits) {
    if (static_cast<long long>(n_rows) * n_cols > 64)
        throw std::invalid_argument("grid too large to pack into 64 bits");
    BitGrid g(n_rows, n_cols);
    for (size_t k = 0; k < g.bits_.size(); ++k)
        g.bits_[k] = static_cast<uint8_t>((bits >> k) & 1);
    return g;
}

BitGrid BitGrid::transposed() const {
    BitGrid t(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            t.set(j, i, at(i, j));
    return t;
}

BitGrid delete_rows_cols(const BitGrid& x, const DeletionSpec& spec) {
    std::vector<int> dr = sorted_index_set(spec.row_indices, x.rows(), "row");
    std::vector<int> dc = sorted_index_set(spec.col_indices, x.cols(), "column");
    int tr = static_cast<int>(dr.size());
    int tc = static_cast<int>(dc.size());
    if (tr > 0 && tr >= x.rows())
        throw std::invalid_argument("cannot delete every row");
    if (tc > 0 && tc >= x.cols())
        throw std::invalid_argument("cannot delete every column");
    BitGrid out(x.rows() - tr, x.cols() - tc);
    int oi = 1;
    for (int i = 1; i <= x.rows(); ++i) {
        if (std::binary_search(dr.begin(), dr.end(), i)) continue;
        int oj = 1;
        for (int j = 1; j <= x.cols(); ++j) {
            if (std::binary_search(dc.begin(), dc.end(), j)) continue;
            out.set(oi, oj, x.at(i, j));
            ++oj;
        }
        ++oi;
    }
    return out;
}

BitGrid delete_row_col(const BitGrid& x, int row, int col) {
    return delete_rows_cols(x, DeletionSpec{{row}, {col}});
}

BitGrid insert_rows_cols(const BitGrid& x, const std::vector<RowInsertion>& rows,
                         const std::vector<ColInsertion>& cols) {
    int fr = x.rows() + static_cast<int>(rows.size());
    int fc = x.cols() + static_cast<int>(cols.size());

    std::vector<int> rpos, cpos;
    for (const auto& r : rows) rpos.push_back(r.position);
    for (const auto& c : cols) cpos.push_back(c.position);
    rpos = sorted_index_set(rpos, fr, "row insertion");
    cpos = sorted_index_set(cpos, fc, "column insertion");

    BitGrid out(fr, fc);
    std::vector<bool> is_new_row(fr + 1, false), is_new_col(fc + 1, false);
    for (int p : rpos) is_new_row[p] = true;
    for (int p : cpos) is_new_col[p] = true;

    // Old cells keep their relative order.
    int oi = 1;
    for (int i = 1; i <= fr; ++i) {
        if (is_new_row[i]) continue;
        int oj = 1;
        for (int j = 1; j <= fc; ++j) {
            if (is_new_col[j]) continue;
            out.set(i, j, x.at(oi, oj));
            ++oj;
        }
        ++oi;
    }

    for (const auto& r : rows) {
        if (static_cast<int>(r.bits.size()) != fc)
            throw std::invalid_argument("row insertion content must span the final width");
        for (int j = 1; j <= fc; ++j) {
            check_bit(r.bits[j - 1], "row insertion");
            out.set(r.position, j, r.bits[j - 1]);
        }
    }
    for (const auto& c : cols) {
        if (static_cast<int>(c.bits.size()) != fr)
            throw std::invalid_argument("column insertion content must span the final height");
        for (int i = 1; i <= fr; ++i) {
            check_bit(c.bits[i - 1], "column insertion");
            if (is_new_row[i]) {
                if (out.at(i, c.position) != c.bits[i - 1])
                    throw std::invalid_argument(
                        "row and column insertions disagree on a shared cell");
            } else {
                out.set(i, c.position, c.bits[i - 1]);
            }
        }
    }
    return out;
}

BitGrid insert_row(const BitGrid& x, int position, const std::vector<int>& bits) {
    return insert_rows_cols(x, {RowInsertion{position, bits}}, {});
}

BitGrid insert_col(const BitGrid& x, int position, const std::vector<int>& bits) {
    return insert_rows_cols(x, {}, {ColInsertion{position, bits}});
}

BitGrid parse_grid(std::string_view text) {
    size_t pos = 0;
    int line_no = 1;
    auto next_line = [&](bool* ok) -> std::string_view {
        if (pos >= text.size()) {
            *ok = false;
            return {};
        }
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            *ok = false;  // every line, including the last, needs its newline
            return {};
        }
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        *ok = true;
        return line;
    };

    bool ok = false;
    std::string_view header = next_line(&ok);
    if (!ok) throw ParseError("missing or unterminated header line", 1);

    auto parse_int = [&](std::string_view s, size_t* idx) -> int {
        size_t i = *idx;
        if (i >= s.size() || s[i] < '0' || s[i] > '9')
            throw ParseError("header must be \"<n_rows> <n_cols>\"", 1);
        long v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw ParseError("dimension out of range", 1);
            ++i;
        }
        *idx = i;
        return static_cast<int>(v);
    };

    size_t idx = 0;
    int r = parse_int(header, &idx);
    if (idx >= header.size() || header[idx] != ' ')
        throw ParseError("header must be \"<n_rows> <n_cols>\"", 1);
    ++idx;
    int c = parse_int(header, &idx);
    if (idx != header.size())
        throw ParseError("header must be \"<n_rows> <n_cols>\"", 1);
    if (r < 1 || c < 1) throw ParseError("dimensions must be positive", 1);

    BitGrid g(r, c);
    for (int i = 1; i <= r; ++i) {
        line_no = 1 + i;
        std::string_view row = next_line(&ok);
        if (!ok) throw ParseError("missing or unterminated row", line_no);
        if (static_cast<int>(row.size()) != c)
            throw ParseError("row length does not match column count", line_no);
        for (int j = 1; j <= c; ++j) {
            char ch = row[j - 1];
            if (ch != '0' && ch != '1')
                throw ParseError("rows must consist of 0 and 1", line_no);
            g.set(i, j, ch - '0');
        }
    }
    if (pos != text.size())
        throw ParseError("unexpected trailing content", r + 2);
    return g;
}

std::string format_grid(const BitGrid& x) {
    std::string out = std::to_string(x.rows()) + " " + std::to_string(x.cols()) + "\n";
    for (int i = 1; i <= x.rows(); ++i) {
        for (int j = 1; j <= x.cols(); ++j) out += static_cast<char>('0' + x.at(i, j));
        out += '\n';
    }
    return out;
}

}  // namespace crisscross
