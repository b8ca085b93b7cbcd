// Acceptance gate: one line per criterion, exit 0 iff all of them hold.
// Output is deterministic (fixed seeds, no timings) so runs can be diffed.

#include <cstdio>
#include <string>
#include <vector>

#include "crisscross/analysis.hpp"
#include "crisscross/code.hpp"
#include "crisscross/verify.hpp"

using namespace crisscross;

namespace {

constexpr uint64_t kSeed = 1;

struct Criterion {
    bool ok = true;
    std::vector<std::string> details;

    void take(const VerificationResult& r) {
        if (!r.passed) {
            ok = false;
            details.push_back(to_json_line(r));
        }
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back(what);
        }
    }
};

Criterion criterion_roundtrip() {
    Criterion c;
    c.take(verify_code(8, 1000, kSeed, 0));
    c.take(verify_code(16, 100, kSeed, 0));
    return c;
}

Criterion criterion_oracle() {
    Criterion c;
    c.take(verify_code(8, 100, kSeed, 100));
    return c;
}

Criterion criterion_del_pattern() {
    Criterion c;
    c.take(verify_del_pattern(3));
    c.take(verify_del_pattern(4));
    return c;
}

Criterion criterion_equivalence() {
    Criterion c;
    c.take(verify_equivalence(2));
    c.take(verify_equivalence(3));
    c.take(verify_t_equivalence(4, 2, 10000, kSeed));
    return c;
}

Criterion criterion_good_arrays() {
    Criterion c;
    c.take(verify_good_arrays(4, 0, 0));
    c.take(verify_good_arrays(6, 100000, kSeed));
    c.take(verify_good_arrays(8, 100000, kSeed));
    return c;
}

Criterion criterion_counts(const std::vector<VerificationResult>& counts) {
    Criterion c;
    for (size_t i = 0; i + 1 < counts.size(); ++i) c.take(counts[i]);
    return c;
}

Criterion criterion_vt() {
    Criterion c;
    c.take(verify_vt(4, 3, 0, kSeed));
    c.take(verify_vt(5, 2, 0, kSeed));
    c.take(verify_vt(6, 4, 6, kSeed));
    return c;
}

Criterion criterion_bounds(const std::vector<VerificationResult>& counts) {
    Criterion c;
    c.take(counts.back());
    return c;
}

Criterion criterion_determinism() {
    Criterion c;
    c.expect(to_json_line(verify_code(8, 3, 17, 2)) ==
                 to_json_line(verify_code(8, 3, 17, 2)),
             "repeated verify_code runs differ");
    c.expect(to_json_line(verify_t_equivalence(4, 2, 1000, 7)) ==
                 to_json_line(verify_t_equivalence(4, 2, 1000, 7)),
             "repeated verify_t_equivalence runs differ");
    c.expect(to_json_line(verify_vt(6, 4, 6, 9)) == to_json_line(verify_vt(6, 4, 6, 9)),
             "repeated verify_vt runs differ");
    auto [x1, p1] = sample_codeword(8, 99);
    auto [x2, p2] = sample_codeword(8, 99);
    c.expect(format_grid(x1) == format_grid(x2) &&
                 format_params(p1) == format_params(p2),
             "repeated codeword sampling differs");
    c.expect(format_census(census(4, 1)) == format_census(census(4, 2)),
             "census output depends on the thread count");
    return c;
}

}  // namespace

int main() {
    std::vector<VerificationResult> counts = verify_counts();
    struct Entry {
        const char* name;
        Criterion result;
    };
    const std::vector<Entry> entries = {
        {"decoder round trip over every single criss-cross deletion (n=8, n=16)",
         criterion_roundtrip()},
        {"decoder agreement with the completion-search oracle (n=8)", criterion_oracle()},
        {"collision predicate vs deleted-array equality (n=3,4 exhaustive)",
         criterion_del_pattern()},
        {"ball-intersection equivalence (m=2,3 exhaustive; m=4 t=2 sampled)",
         criterion_equivalence()},
        {"good-array ball bounds (n=4 exhaustive; n=6,8 sampled)",
         criterion_good_arrays()},
        {"structural count identities and bounds", criterion_counts(counts)},
        {"component-code single-deletion correction (three alphabet/length pairs)",
         criterion_vt()},
        {"redundancy closed forms at n in {8,16,32,64}", criterion_bounds(counts)},
        {"seeded runs repeat byte-identically", criterion_determinism()},
    };

    bool all_ok = true;
    for (size_t k = 0; k < entries.size(); ++k) {
        const Entry& e = entries[k];
        std::printf("%s criterion %zu: %s\n", e.result.ok ? "PASS" : "FAIL", k + 1,
                    e.name);
        for (const std::string& d : e.result.details)
            std::printf("  %s\n", d.c_str());
        all_ok = all_ok && e.result.ok;
    }
    return all_ok ? 0 : 1;
}
