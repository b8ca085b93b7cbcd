#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crisscross/grid.hpp"

namespace crisscross {

struct VerificationResult {
    std::string statement_id;
    std::string scope;
    bool passed = false;
    std::optional<std::string> witness;  // present whenever passed is false
};

// One JSON record: {"statement": ..., "scope": ..., "passed": ..., "witness": ...}
std::string to_json_line(const VerificationResult& r);

// Replacement ball-intersection primitives. Tests inject corrupted ones to
// confirm the harness reports counterexamples instead of masking them.
struct EquivalenceHooks {
    std::function<bool(const BitGrid&, const BitGrid&, int, int)> deletion_intersect;
    std::function<bool(const BitGrid&, const BitGrid&, int, int)> insertion_intersect;
};

// Deletion-ball intersection iff insertion-ball intersection, over all pairs
// of m x m grids (exhaustive for m in [2,3], sampled for m = 4), in four
// variants: one row and one column, row only, column only, and the
// mixed-dimension form pairing an (m+1) x m grid with an m x (m+1) one.
VerificationResult verify_equivalence(int m, int samples = 10000, uint64_t seed = 1,
                                      const EquivalenceHooks* hooks = nullptr);

// The same equivalence for t row and t column deletions, sampled pairs.
VerificationResult verify_t_equivalence(int m, int t, int samples, uint64_t seed);

// Deleted-array equality X^{i1,j1} == X^{i2,j2} iff the structural collision
// predicate holds; exhaustive at n in {3,4}, sampled grids at n = 5.
VerificationResult verify_del_pattern(int n, int samples = 2000, uint64_t seed = 1);

// |D_{1,1}(X)| >= |good cols| * |good rows|, plus the derived threshold that
// enough good indices force a good array; exhaustive at n = 4, sampled above.
VerificationResult verify_good_arrays(int n, int samples, uint64_t seed);

// Decoder round trip over every deletion of sampled codewords, pairwise
// deletion-ball disjointness within one parameter set, and (optionally, at
// n = 8) agreement with the independent completion-search oracle.
VerificationResult verify_code(int n, int num_codewords, uint64_t seed,
                               int oracle_cases = 0);

// Structural-count identities and bounds, one result per statement family.
std::vector<VerificationResult> verify_counts();

// Coset census and pigeonhole bound for the component code, plus
// single-deletion correction of every (or `sampled_cosets` sampled) cosets.
VerificationResult verify_vt(int m, int q, int sampled_cosets, uint64_t seed);

}  // namespace crisscross
