#include "crisscross/decoder.hpp"

#include "crisscross/vt.hpp"

namespace crisscross {

namespace {

int xor_of_row(const BitGrid& g, int i) {
    int p = 0;
    for (int j = 1; j <= g.cols(); ++j) p ^= g.at(i, j);
    return p;
}

int xor_of_column(const BitGrid& g, int j) {
    int p = 0;
    for (int i = 1; i <= g.rows(); ++i) p ^= g.at(i, j);
    return p;
}

void check_received(const BitGrid& received, int n) {
    if (n < 8) throw std::invalid_argument("code length must be at least 8");
    log2_exact(n);
    if (received.rows() != n - 1 || received.cols() != n - 1)
        throw std::invalid_argument("received grid must be (n-1) x (n-1)");
}

// Column word of the first ell rows of g (one column short of n), decoded
// against (a, b) to locate the missing column and its top-band symbol.
std::optional<VtDecode> decode_u(const BitGrid& g, const CodeParams& p) {
    QaryWord w{p.n, {}};
    w.symbols.reserve(g.cols());
    for (int j = 1; j <= g.cols(); ++j)
        w.symbols.push_back(column_symbol(g, p.ell, j));
    return vt_decode_deletion(w, p.n, VtLabel{p.a, p.b});
}

// g holds all n rows but misses one column. Rebuilds that column: top-band
// bits from the decoded symbol, rows ell+1..n-1 from their row parity, row n
// from the column parity of the rebuilt column.
BitGrid complete_column(const BitGrid& g, int j_star, int usym, const CodeParams& p) {
    std::vector<int> bits(p.n);
    for (int i = 1; i <= p.ell; ++i) bits[i - 1] = (usym >> (p.ell - i)) & 1;
    for (int i = p.ell + 1; i <= p.n - 1; ++i) bits[i - 1] = xor_of_row(g, i);
    int parity = 0;
    for (int i = 1; i <= p.n - 1; ++i) parity ^= bits[i - 1];
    bits[p.n - 1] = parity;
    return insert_col(g, j_star, bits);
}

// Same completion for the known-content last column: fixed alternating
// prefix instead of a decoded symbol.
BitGrid complete_last_column(const BitGrid& g, const CodeParams& p) {
    std::vector<int> bits(p.n);
    for (int i = 1; i <= p.ell + 1; ++i) bits[i - 1] = alternating_bit(i);
    for (int i = p.ell + 2; i <= p.n - 1; ++i) bits[i - 1] = xor_of_row(g, i);
    int parity = 0;
    for (int i = 1; i <= p.n - 1; ++i) parity ^= bits[i - 1];
    bits[p.n - 1] = parity;
    return insert_col(g, p.n, bits);
}

ParityNote note_of(bool parity_row, bool parity_col) {
    if (parity_row && parity_col) return ParityNote::parity_row_and_col_deleted;
    if (parity_row) return ParityNote::parity_row_deleted;
    if (parity_col) return ParityNote::parity_col_deleted;
    return ParityNote::none;
}

// The deleted row restricted to the surviving columns, one column parity
// per received column. Valid whenever the parity row survived.
std::vector<int> deleted_row_by_column_parity(const BitGrid& received) {
    std::vector<int> bits(received.cols());
    for (int j = 1; j <= received.cols(); ++j) bits[j - 1] = xor_of_column(received, j);
    return bits;
}

}  // namespace

Classification classify(const BitGrid& received, int n) {
    check_received(received, n);
    int ell = log2_exact(n);
    int last = n - 1;
    if (received.at(1, last) == 0 && received.at(2, last) == 0 &&
        received.at(3, last) == 0)
        return {Classification::Kind::last_col_deleted, 0};
    if (received.at(1, last) == 1)
        return {Classification::Kind::row_deleted_in_u, 1};
    for (int p = 1; p <= ell; ++p)
        if (received.at(p, last) == received.at(p + 1, last))
            return {Classification::Kind::row_deleted_in_u, p + 1};
    return {Classification::Kind::u_intact, 0};
}

std::optional<DecodeResult> decode(const BitGrid& received, const CodeParams& params) {
    check_received(received, params.n);
    int n = params.n;
    int ell = params.ell;

    std::vector<DecodeResult> survivors;
    auto consider = [&](const BitGrid& candidate, DecodeTrace trace) {
        if (!is_codeword(candidate, params)) return;
        if (delete_row_col(candidate, trace.row_index, trace.col_index) != received)
            return;
        survivors.push_back({candidate, trace});
    };

    // Reinsert the known deleted row i (i <= ell+1), then locate and rebuild
    // the deleted column through the top band's word.
    auto row_in_u = [&](int i) {
        BitGrid g = insert_row(received, i, deleted_row_by_column_parity(received));
        std::optional<VtDecode> u = decode_u(g, params);
        if (!u) return;
        BitGrid candidate = complete_column(g, u->position, u->symbol, params);
        consider(candidate, DecodeTrace{DecodeCase::case_1a, i, u->position,
                                        note_of(false, u->position == 1)});
    };

    // U intact, deleted row is the parity row n: after rebuilding the deleted
    // column over the received rows, the full (n-1)-symbol masked word must
    // already carry labels (c, d).
    auto u_intact_parity_row = [&]() {
        std::optional<VtDecode> u = decode_u(received, params);
        if (!u) return;
        std::vector<int> colbits(n - 1);
        for (int r = 1; r <= n - 1; ++r) {
            colbits[r - 1] = r <= ell ? (u->symbol >> (ell - r)) & 1
                                      : xor_of_row(received, r);
        }
        BitGrid g = insert_col(received, u->position, colbits);
        QaryWord v{n, {}};
        for (int r = 1; r <= n - 1; ++r)
            v.symbols.push_back(masked_row_symbol(g, n, ell, r));
        if (vt_label(v) != VtLabel{params.c, params.d}) return;
        std::vector<int> rowbits(n);
        for (int j = 1; j <= n; ++j) rowbits[j - 1] = xor_of_column(g, j);
        BitGrid candidate = insert_row(g, n, rowbits);
        consider(candidate, DecodeTrace{DecodeCase::case_1b, n, u->position,
                                        note_of(true, u->position == 1)});
    };

    // U intact, deleted row in [ell+2, n-1]: the (n-2)-symbol masked word of
    // the received rows (minus the parity row) locates the deleted row.
    auto u_intact_vt_row = [&]() {
        std::optional<VtDecode> u = decode_u(received, params);
        if (!u) return;
        std::vector<int> colbits(n - 1, 0);
        for (int r = 1; r <= n - 2; ++r) {
            colbits[r - 1] = r <= ell ? (u->symbol >> (ell - r)) & 1
                                      : xor_of_row(received, r);
        }
        // The last received row is the parity row under this hypothesis; its
        // entry in the rebuilt column is not needed for the word below.
        BitGrid g = insert_col(received, u->position, colbits);
        QaryWord v{n, {}};
        for (int r = 1; r <= n - 2; ++r)
            v.symbols.push_back(masked_row_symbol(g, n, ell, r));
        std::optional<VtDecode> vr = vt_decode_deletion(v, n - 1, VtLabel{params.c, params.d});
        if (!vr) return;
        BitGrid rows_restored =
            insert_row(received, vr->position, deleted_row_by_column_parity(received));
        BitGrid candidate = complete_column(rows_restored, u->position, u->symbol, params);
        consider(candidate, DecodeTrace{DecodeCase::case_1b, vr->position, u->position,
                                        note_of(false, u->position == 1)});
    };

    // Last column deleted; the deleted row is located through the masked
    // right-band word with the column-n bit reconstructed under the given
    // row-shift hypothesis, then everything is refilled from parities.
    // boundary_row_received tells how received row ell+1 maps: true means
    // the deleted row was at or above ell+1, so received row ell+1 is the
    // original row ell+2 and its masked bit is its row parity; false means
    // it is the original row ell+1 with masked bit 0.
    auto last_col_row = [&](bool shifted_at_boundary) {
        QaryWord v{n, {}};
        for (int r = 1; r <= n - 2; ++r) {
            int sym = 0;
            for (int j = n - ell + 1; j <= n - 1; ++j) sym = (sym << 1) | received.at(r, j);
            int coln_masked;
            if (r <= ell)
                coln_masked = 0;
            else if (r == ell + 1)
                coln_masked = shifted_at_boundary ? xor_of_row(received, r) : 0;
            else
                coln_masked = xor_of_row(received, r);
            v.symbols.push_back((sym << 1) | coln_masked);
        }
        std::optional<VtDecode> vr = vt_decode_deletion(v, n - 1, VtLabel{params.c, params.d});
        if (!vr) return;
        BitGrid rows_restored =
            insert_row(received, vr->position, deleted_row_by_column_parity(received));
        BitGrid candidate = complete_last_column(rows_restored, params);
        consider(candidate, DecodeTrace{DecodeCase::case_2, vr->position, n,
                                        note_of(false, false)});
    };

    auto last_col_parity_row = [&]() {
        std::vector<int> colbits(n - 1);
        for (int r = 1; r <= n - 1; ++r) {
            colbits[r - 1] = r <= ell + 1 ? alternating_bit(r) : xor_of_row(received, r);
        }
        BitGrid g = insert_col(received, n, colbits);
        QaryWord v{n, {}};
        for (int r = 1; r <= n - 1; ++r)
            v.symbols.push_back(masked_row_symbol(g, n, ell, r));
        if (vt_label(v) != VtLabel{params.c, params.d}) return;
        std::vector<int> rowbits(n);
        for (int j = 1; j <= n; ++j) rowbits[j - 1] = xor_of_column(g, j);
        BitGrid candidate = insert_row(g, n, rowbits);
        consider(candidate, DecodeTrace{DecodeCase::case_2, n, n, note_of(true, false)});
    };

    Classification cls = classify(received, n);
    switch (cls.kind) {
        case Classification::Kind::last_col_deleted:
            last_col_parity_row();
            last_col_row(true);   // deleted row at or above the mask boundary
            last_col_row(false);  // deleted row below the mask boundary
            break;
        case Classification::Kind::row_deleted_in_u:
            row_in_u(cls.row_index);
            break;
        case Classification::Kind::u_intact:
            u_intact_parity_row();
            u_intact_vt_row();
            // A deletion of row ell+1 can leave the alternating prefix
            // without a visible run; it is also valid as an in-band row.
            row_in_u(ell + 1);
            break;
    }

    if (survivors.empty()) return std::nullopt;
    for (const auto& s : survivors)
        if (s.codeword != survivors.front().codeword)
            throw std::logic_error(
                "two distinct codewords explain the received grid, which "
                "contradicts unique decodability");
    return survivors.front();
}

}  // namespace crisscross
