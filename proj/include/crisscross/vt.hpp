#pragma once

#include <optional>
#include <vector>

#include "crisscross/grid.hpp"

namespace crisscross {

// Word of length m over the alphabet {0, ..., q-1}. Symbols are addressed
// 1-based in the math and 0-based in `symbols`.
struct QaryWord {
    int q = 2;
    std::vector<int> symbols;

    int size() const { return static_cast<int>(symbols.size()); }
    friend bool operator==(const QaryWord&, const QaryWord&) = default;
    friend auto operator<=>(const QaryWord&, const QaryWord&) = default;
};

void validate_word(const QaryWord& x);

// Coset label of the single-deletion-correcting code: a in [0, m), b in [0, q).
struct VtLabel {
    int a = 0;
    int b = 0;
    friend bool operator==(const VtLabel&, const VtLabel&) = default;
};

// Binary signature s of x: s_1 = 1, s_i = 1 iff x_i >= x_{i-1}. Length m.
std::vector<int> signature(const QaryWord& x);

// a = sum_{i=1..m} (i-1) s_i mod m, b = sum x_i mod q.
VtLabel vt_label(const QaryWord& x);

struct VtDecode {
    QaryWord word;  // the unique completion of length m in the labeled coset
    int position;   // smallest deletion index p with delete(word, p) == received
    int symbol;     // word[position]
};

// Recovers the length-m word in coset `label` from which `received`
// (length m-1, same q) arose by one symbol deletion. Returns nullopt when the
// coset contains no completion. Two distinct completions would contradict the
// single-deletion correction property and raise an internal error.
std::optional<VtDecode> vt_decode_deletion(const QaryWord& received, int m,
                                           const VtLabel& label);

// Exhaustive tally of all q^m words by label. Guarded at q^m <= 2^24.
struct VtCosetCensus {
    int m = 0;
    int q = 0;
    std::vector<long long> sizes;  // indexed a * q + b

    long long size_of(int a, int b) const { return sizes[static_cast<size_t>(a) * q + b]; }
    long long total() const;
    long long max_size() const;
    // max coset size * (q m) >= q^m, the pigeonhole bound in exact arithmetic.
    bool pigeonhole_ok() const;
};

VtCosetCensus vt_coset_census(int m, int q);

}  // namespace crisscross
