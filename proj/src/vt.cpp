#include "crisscross/vt.hpp"

#include <algorithm>

namespace crisscross {

void validate_word(const QaryWord& x) {
    if (x.q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    for (int s : x.symbols)
        if (s < 0 || s >= x.q)
            throw std::invalid_argument("symbol out of alphabet range");
}

std::vector<int> signature(const QaryWord& x) {
    validate_word(x);
    int m = x.size();
    std::vector<int> s(m);
    if (m == 0) return s;
    s[0] = 1;
    for (int i = 1; i < m; ++i) s[i] = x.symbols[i] >= x.symbols[i - 1] ? 1 : 0;
    return s;
}

VtLabel vt_label(const QaryWord& x) {
    std::vector<int> s = signature(x);
    int m = x.size();
    if (m == 0) throw std::invalid_argument("label of the empty word is undefined");
    long long a = 0, b = 0;
    for (int i = 1; i <= m; ++i) {
        a += static_cast<long long>(i - 1) * s[i - 1];
        b += x.symbols[i - 1];
    }
    return VtLabel{static_cast<int>(a % m), static_cast<int>(b % x.q)};
}

std::optional<VtDecode> vt_decode_deletion(const QaryWord& received, int m,
                                           const VtLabel& label) {
    validate_word(received);
    if (m < 1 || received.size() != m - 1)
        throw std::invalid_argument("received word must have length m - 1");
    if (label.a < 0 || label.a >= m || label.b < 0 || label.b >= received.q)
        throw std::invalid_argument("label out of range");

    std::optional<QaryWord> found;
    QaryWord candidate{received.q, std::vector<int>(m)};
    for (int p = 1; p <= m; ++p) {
        // Skip insertions that duplicate the previous position's candidates:
        // inserting sigma at p and at p-1 coincide when received[p-1] == sigma.
        for (int sigma = 0; sigma < received.q; ++sigma) {
            if (p >= 2 && received.symbols[p - 2] == sigma) continue;
            for (int i = 0; i < p - 1; ++i) candidate.symbols[i] = received.symbols[i];
            candidate.symbols[p - 1] = sigma;
            for (int i = p; i < m; ++i) candidate.symbols[i] = received.symbols[i - 1];
            if (vt_label(candidate) != label) continue;
            if (found && *found != candidate)
                throw std::logic_error(
                    "two distinct completions share a label, which breaks the "
                    "single-deletion correction property");
            found = candidate;
        }
    }
    if (!found) return std::nullopt;

    // Canonical position: smallest p whose removal from the completion gives
    // back the received word (deleting anywhere in a run is equivalent).
    for (int p = 1; p <= m; ++p) {
        bool match = true;
        for (int i = 0, k = 0; i < m; ++i) {
            if (i == p - 1) continue;
            if (found->symbols[i] != received.symbols[k++]) {
                match = false;
                break;
            }
        }
        if (match) return VtDecode{*found, p, found->symbols[p - 1]};
    }
    throw std::logic_error("completion does not contain the received word");
}

long long VtCosetCensus::total() const {
    long long t = 0;
    for (long long s : sizes) t += s;
    return t;
}

long long VtCosetCensus::max_size() const {
    return *std::max_element(sizes.begin(), sizes.end());
}

bool VtCosetCensus::pigeonhole_ok() const {
    return max_size() * q * m >= total();
}

VtCosetCensus vt_coset_census(int m, int q) {
    if (m < 1 || q < 2) throw std::invalid_argument("census requires m >= 1, q >= 2");
    long long space = 1;
    for (int i = 0; i < m; ++i) {
        space *= q;
        if (space > (1ll << 24))
            throw GuardError("coset census limited to q^m <= 2^24");
    }

    VtCosetCensus census;
    census.m = m;
    census.q = q;
    census.sizes.assign(static_cast<size_t>(m) * q, 0);
    QaryWord x{q, std::vector<int>(m, 0)};
    for (long long k = 0; k < space; ++k) {
        VtLabel l = vt_label(x);
        ++census.sizes[static_cast<size_t>(l.a) * q + l.b];
        for (int i = 0; i < m; ++i) {
            if (++x.symbols[i] < q) break;
            x.symbols[i] = 0;
        }
    }
    return census;
}

}  // namespace crisscross
