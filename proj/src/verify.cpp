#include "crisscross/verify.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "crisscross/analysis.hpp"
#include "crisscross/channel.hpp"
#include "crisscross/code.hpp"
#include "crisscross/decoder.hpp"
#include "crisscross/rng.hpp"
#include "crisscross/vt.hpp"

namespace crisscross {

std::string to_json_line(const VerificationResult& r) {
    nlohmann::ordered_json j;
    j["statement"] = r.statement_id;
    j["scope"] = r.scope;
    j["passed"] = r.passed;
    if (r.witness)
        j["witness"] = *r.witness;
    else
        j["witness"] = nullptr;
    return j.dump();
}

namespace {

std::string compact(const BitGrid& g) {
    std::string s;
    for (int i = 1; i <= g.rows(); ++i) {
        if (i > 1) s += '/';
        for (int j = 1; j <= g.cols(); ++j) s += static_cast<char>('0' + g.at(i, j));
    }
    return s;
}

std::vector<std::vector<int>> index_combos(int n, int t) {
    std::vector<std::vector<int>> out;
    if (t < 0 || t > n) return out;
    if (t == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur(t);
    for (int i = 0; i < t; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int k = t - 1;
        while (k >= 0 && cur[k] == n - t + k + 1) --k;
        if (k < 0) break;
        ++cur[k];
        for (int i = k + 1; i < t; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

// One deletion outcome on a row-major packed grid: target bit k reads
// source bit src_pos[k].
struct GatherPlan {
    std::vector<int> src_pos;
};

std::vector<GatherPlan> gather_plans(int rows, int cols, int t_r, int t_c) {
    std::vector<GatherPlan> plans;
    for (const auto& rc : index_combos(rows, t_r)) {
        for (const auto& cc : index_combos(cols, t_c)) {
            GatherPlan p;
            p.src_pos.reserve(static_cast<size_t>(rows - t_r) * (cols - t_c));
            for (int i = 1; i <= rows; ++i) {
                if (std::find(rc.begin(), rc.end(), i) != rc.end()) continue;
                for (int j = 1; j <= cols; ++j) {
                    if (std::find(cc.begin(), cc.end(), j) != cc.end()) continue;
                    p.src_pos.push_back((i - 1) * cols + (j - 1));
                }
            }
            plans.push_back(std::move(p));
        }
    }
    return plans;
}

uint64_t gather(uint64_t src, const GatherPlan& p) {
    uint64_t v = 0;
    for (size_t k = 0; k < p.src_pos.size(); ++k)
        v |= ((src >> p.src_pos[k]) & 1ull) << k;
    return v;
}

// One insertion outcome: source bit k lands at target bit dst_pos[k]; the
// inserted cells stay free. `known` marks exactly the carried-over cells.
struct SpreadPlan {
    uint64_t known = 0;
    std::vector<int> dst_pos;
};

std::vector<SpreadPlan> spread_plans(int rows, int cols, int t_r, int t_c) {
    const int tr_rows = rows + t_r, tr_cols = cols + t_c;
    std::vector<SpreadPlan> plans;
    for (const auto& rc : index_combos(tr_rows, t_r)) {
        for (const auto& cc : index_combos(tr_cols, t_c)) {
            SpreadPlan p;
            p.dst_pos.reserve(static_cast<size_t>(rows) * cols);
            for (int i = 1; i <= tr_rows; ++i) {
                if (std::find(rc.begin(), rc.end(), i) != rc.end()) continue;
                for (int j = 1; j <= tr_cols; ++j) {
                    if (std::find(cc.begin(), cc.end(), j) != cc.end()) continue;
                    int dst = (i - 1) * tr_cols + (j - 1);
                    p.known |= 1ull << dst;
                    p.dst_pos.push_back(dst);
                }
            }
            plans.push_back(std::move(p));
        }
    }
    return plans;
}

struct Lift {
    uint64_t known = 0;
    uint64_t value = 0;
};

Lift spread(uint64_t src, const SpreadPlan& p) {
    Lift l;
    l.known = p.known;
    for (size_t k = 0; k < p.dst_pos.size(); ++k)
        l.value |= ((src >> k) & 1ull) << p.dst_pos[k];
    return l;
}

// Two partially-specified lifted grids admit a common completion iff they
// agree wherever both carry old content.
bool lifts_intersect(const std::vector<Lift>& a, const std::vector<Lift>& b) {
    for (const Lift& la : a)
        for (const Lift& lb : b)
            if (((la.value ^ lb.value) & la.known & lb.known) == 0) return true;
    return false;
}

std::vector<uint64_t> sorted_gathers(uint64_t src, const std::vector<GatherPlan>& plans) {
    std::vector<uint64_t> v;
    v.reserve(plans.size());
    for (const auto& p : plans) v.push_back(gather(src, p));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool sorted_intersect(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

std::vector<Lift> spread_all(uint64_t src, const std::vector<SpreadPlan>& plans) {
    std::vector<Lift> out;
    out.reserve(plans.size());
    for (const auto& p : plans) out.push_back(spread(src, p));
    return out;
}

int distinct_gathers(uint64_t src, const std::vector<GatherPlan>& plans) {
    uint64_t vals[64];
    int count = 0;
    for (const auto& p : plans) {
        uint64_t v = gather(src, p);
        bool seen = false;
        for (int i = 0; i < count; ++i)
            if (vals[i] == v) {
                seen = true;
                break;
            }
        if (!seen) vals[count++] = v;
    }
    return count;
}

uint64_t low_mask(int bits) { return bits >= 64 ? ~0ull : (1ull << bits) - 1; }

}  // namespace

VerificationResult verify_equivalence(int m, int samples, uint64_t seed,
                                      const EquivalenceHooks* hooks) {
    if (m < 2 || m > 4)
        throw GuardError("verify_equivalence supports m in [2, 4]; larger m needs "
                         "2^(2 m^2) pair work");
    struct Variant {
        const char* name;
        int xr, xc, yr, yc;  // pair shapes
        int dtr, dtc;        // deletions applied to x
        int itr, itc;        // insertions applied to x
    };
    const std::vector<Variant> variants = {
        {"square-1-1", m, m, m, m, 1, 1, 1, 1},
        {"row-only", m, m, m, m, 1, 0, 1, 0},
        {"col-only", m, m, m, m, 0, 1, 0, 1},
        {"mixed-dims", m + 1, m, m, m + 1, 1, 0, 0, 1},
    };
    const bool exhaustive = m <= 3;
    long long pairs_total = 0, failures = 0, cross_checks = 0;
    std::optional<std::string> witness;
    Rng rng(seed);

    for (const auto& var : variants) {
        const int del_r = var.xr - var.dtr, del_c = var.xc - var.dtc;
        const int ins_r = var.xr + var.itr, ins_c = var.xc + var.itc;
        const int ydtr = var.yr - del_r, ydtc = var.yc - del_c;
        const int yitr = ins_r - var.yr, yitc = ins_c - var.yc;
        const int xbits = var.xr * var.xc, ybits = var.yr * var.yc;
        const auto xd = gather_plans(var.xr, var.xc, var.dtr, var.dtc);
        const auto yd = gather_plans(var.yr, var.yc, ydtr, ydtc);
        const auto xi = spread_plans(var.xr, var.xc, var.itr, var.itc);
        const auto yi = spread_plans(var.yr, var.yc, yitr, yitc);

        long long variant_pairs = 0;
        auto handle = [&](uint64_t xv, uint64_t yv, bool dfast, bool ifast) {
            bool d = dfast, ins = ifast;
            if (hooks) {
                BitGrid xg = BitGrid::from_packed(var.xr, var.xc, xv);
                BitGrid yg = BitGrid::from_packed(var.yr, var.yc, yv);
                d = hooks->deletion_intersect(xg, yg, var.dtr, var.dtc);
                ins = hooks->insertion_intersect(xg, yg, var.itr, var.itc);
            }
            ++pairs_total;
            ++variant_pairs;
            if (d != ins) {
                ++failures;
                if (!witness) {
                    std::ostringstream os;
                    os << "variant=" << var.name
                       << ";X=" << compact(BitGrid::from_packed(var.xr, var.xc, xv))
                       << ";Y=" << compact(BitGrid::from_packed(var.yr, var.yc, yv))
                       << ";deletion-intersect=" << d << ";insertion-intersect=" << ins;
                    witness = os.str();
                }
                return;
            }
            // spot-check the packed fast path against the channel module
            if (!hooks && (variant_pairs <= 8 || variant_pairs % 1000000 == 0)) {
                BitGrid xg = BitGrid::from_packed(var.xr, var.xc, xv);
                BitGrid yg = BitGrid::from_packed(var.yr, var.yc, yv);
                bool dref = balls_intersect(xg, yg, BallMode::deletion, var.dtr, var.dtc);
                bool iref = balls_intersect(xg, yg, BallMode::insertion, var.itr, var.itc);
                ++cross_checks;
                if (dref != dfast || iref != ifast) {
                    ++failures;
                    if (!witness) {
                        std::ostringstream os;
                        os << "cross-check;variant=" << var.name << ";X=" << compact(xg)
                           << ";Y=" << compact(yg) << ";fast-del=" << dfast
                           << ";api-del=" << dref << ";fast-ins=" << ifast
                           << ";api-ins=" << iref;
                        witness = os.str();
                    }
                }
            }
        };

        if (exhaustive) {
            const int del_bits = del_r * del_c;
            assert(del_bits <= 9);
            (void)del_bits;
            struct Cache {
                std::vector<std::array<uint64_t, 8>> del;
                std::vector<std::vector<Lift>> lifts;
            };
            auto build = [](int bits, const std::vector<GatherPlan>& dp,
                            const std::vector<SpreadPlan>& sp) {
                Cache c;
                const uint64_t count = 1ull << bits;
                c.del.assign(count, {});
                c.lifts.resize(count);
                for (uint64_t v = 0; v < count; ++v) {
                    auto& bm = c.del[v];
                    for (const auto& p : dp) {
                        uint64_t val = gather(v, p);
                        bm[val >> 6] |= 1ull << (val & 63);
                    }
                    c.lifts[v] = spread_all(v, sp);
                }
                return c;
            };
            const Cache cx = build(xbits, xd, xi);
            const Cache cy = build(ybits, yd, yi);
            const bool same_side = var.xr == var.yr && var.xc == var.yc;
            const uint64_t nx = 1ull << xbits, ny = 1ull << ybits;
            for (uint64_t xv = 0; xv < nx; ++xv) {
                const auto& dxv = cx.del[xv];
                const auto& lxv = cx.lifts[xv];
                for (uint64_t yv = same_side ? xv : 0; yv < ny; ++yv) {
                    const auto& dyv = cy.del[yv];
                    bool dfast = false;
                    for (int w = 0; w < 8; ++w)
                        if (dxv[w] & dyv[w]) {
                            dfast = true;
                            break;
                        }
                    bool ifast = lifts_intersect(lxv, cy.lifts[yv]);
                    handle(xv, yv, dfast, ifast);
                }
            }
        } else {
            for (int s = 0; s < samples; ++s) {
                uint64_t xv = rng.next_u64() & low_mask(xbits);
                uint64_t yv = rng.next_u64() & low_mask(ybits);
                bool dfast = sorted_intersect(sorted_gathers(xv, xd), sorted_gathers(yv, yd));
                bool ifast = lifts_intersect(spread_all(xv, xi), spread_all(yv, yi));
                handle(xv, yv, dfast, ifast);
            }
        }
    }

    std::ostringstream scope;
    scope << "m=" << m << ";mode=" << (exhaustive ? "exhaustive" : "sampled");
    if (!exhaustive) scope << ";samples-per-variant=" << samples << ";seed=" << seed;
    scope << ";variants=square-1-1,row-only,col-only,mixed-dims;pairs=" << pairs_total
          << ";cross-checks=" << cross_checks;
    return {"ball-intersection-equivalence", scope.str(), failures == 0, witness};
}

VerificationResult verify_t_equivalence(int m, int t, int samples, uint64_t seed) {
    if (t < 1 || m <= t) throw std::invalid_argument("require 1 <= t < m");
    if ((m + t) * (m + t) > 64)
        throw GuardError("lifted grids exceed 64 packed bits; keep (m+t)^2 <= 64");
    const auto dp = gather_plans(m, m, t, t);
    const auto sp = spread_plans(m, m, t, t);
    const uint64_t mask = low_mask(m * m);
    long long pairs = 0, failures = 0, cross_checks = 0;
    std::optional<std::string> witness;

    auto verdicts = [&](uint64_t xv, uint64_t yv) {
        bool d = sorted_intersect(sorted_gathers(xv, dp), sorted_gathers(yv, dp));
        bool ins = lifts_intersect(spread_all(xv, sp), spread_all(yv, sp));
        return std::pair<bool, bool>(d, ins);
    };
    auto record = [&](uint64_t xv, uint64_t yv, bool d, bool ins, const char* tag) {
        ++pairs;
        if (d != ins) {
            ++failures;
            if (!witness) {
                std::ostringstream os;
                os << tag << ";X=" << compact(BitGrid::from_packed(m, m, xv))
                   << ";Y=" << compact(BitGrid::from_packed(m, m, yv))
                   << ";deletion-intersect=" << d << ";insertion-intersect=" << ins;
                witness = os.str();
            }
        }
    };

    Rng rng(seed);
    // fixed case: X == Y, both sides trivially nonempty
    {
        uint64_t z = rng.next_u64() & mask;
        auto [d, ins] = verdicts(z, z);
        record(z, z, d, ins, "fixed-equal");
        if (!(d && ins) && failures == 0) {
            ++failures;
            witness = "fixed-equal;expected both sides nonempty";
        }
    }
    // fixed case: all-zero vs all-one have disjoint balls on both sides
    {
        auto [d, ins] = verdicts(0, mask);
        record(0, mask, d, ins, "fixed-constant");
        if ((d || ins) && failures == 0) {
            ++failures;
            witness = "fixed-constant;expected both sides empty";
        }
    }
    for (int s = 0; s < samples; ++s) {
        uint64_t xv = rng.next_u64() & mask;
        uint64_t yv = rng.next_u64() & mask;
        auto [d, ins] = verdicts(xv, yv);
        record(xv, yv, d, ins, "sampled");
        if (s < 4 || (s > 0 && s % 2000 == 0)) {
            BitGrid xg = BitGrid::from_packed(m, m, xv);
            BitGrid yg = BitGrid::from_packed(m, m, yv);
            bool dref = balls_intersect(xg, yg, BallMode::deletion, t, t);
            bool iref = balls_intersect(xg, yg, BallMode::insertion, t, t);
            ++cross_checks;
            if (dref != d || iref != ins) {
                ++failures;
                if (!witness)
                    witness = "cross-check;X=" + compact(xg) + ";Y=" + compact(yg);
            }
        }
    }

    std::ostringstream scope;
    scope << "m=" << m << ";t=" << t << ";mode=sampled;samples=" << samples
          << ";seed=" << seed << ";pairs=" << pairs << ";cross-checks=" << cross_checks;
    return {"t-ball-intersection-equivalence", scope.str(), failures == 0, witness};
}

VerificationResult verify_del_pattern(int n, int samples, uint64_t seed) {
    if (n < 3 || n > 5)
        throw GuardError("verify_del_pattern supports n in [3, 5] (exhaustive below, "
                         "sampled at n=5)");
    const auto dp = gather_plans(n, n, 1, 1);  // plan index (i-1)*n + (j-1)
    long long grids = 0, pairs = 0, failures = 0;
    std::optional<std::string> witness;

    auto scan = [&](uint64_t v) {
        BitGrid g = BitGrid::from_packed(n, n, v);
        uint64_t vals[25];
        for (int d = 0; d < n * n; ++d) vals[d] = gather(v, dp[d]);
        for (int d1 = 0; d1 < n * n; ++d1) {
            for (int d2 = d1 + 1; d2 < n * n; ++d2) {
                bool eq = vals[d1] == vals[d2];
                bool pred = collision_structure(g, d1 / n + 1, d1 % n + 1, d2 / n + 1,
                                                d2 % n + 1);
                ++pairs;
                if (eq != pred) {
                    ++failures;
                    if (!witness) {
                        std::ostringstream os;
                        os << "X=" << compact(g) << ";i1=" << d1 / n + 1
                           << ";j1=" << d1 % n + 1 << ";i2=" << d2 / n + 1
                           << ";j2=" << d2 % n + 1 << ";deleted-equal=" << eq
                           << ";predicate=" << pred;
                        witness = os.str();
                    }
                }
            }
        }
        ++grids;
    };

    const bool exhaustive = n <= 4;
    if (exhaustive) {
        for (uint64_t v = 0; v < (1ull << (n * n)); ++v) scan(v);
    } else {
        Rng rng(seed);
        for (int s = 0; s < samples; ++s) scan(rng.next_u64() & low_mask(n * n));
    }

    std::ostringstream scope;
    scope << "n=" << n << ";mode=" << (exhaustive ? "exhaustive" : "sampled")
          << ";grids=" << grids << ";index-pairs=" << pairs;
    if (!exhaustive) scope << ";seed=" << seed;
    return {"deletion-collision-predicate", scope.str(), failures == 0, witness};
}

VerificationResult verify_good_arrays(int n, int samples, uint64_t seed) {
    if (n < 4 || n > 8) throw GuardError("verify_good_arrays supports n in [4, 8]");
    const auto dp = gather_plans(n, n, 1, 1);
    long long grids = 0, failures = 0, cross_checks = 0;
    std::optional<std::string> witness;

    auto scan = [&](uint64_t v) {
        BitGrid g = BitGrid::from_packed(n, n, v);
        GoodIndexSets gi = good_index_sets(g);
        long long ball = distinct_gathers(v, dp);
        long long gc = static_cast<long long>(gi.good_cols.size());
        long long gr = static_cast<long long>(gi.good_rows.size());
        if (ball < gc * gr) {
            ++failures;
            if (!witness)
                witness = "product-bound;X=" + compact(g) + ";ball=" + std::to_string(ball) +
                          ";good-cols=" + std::to_string(gc) +
                          ";good-rows=" + std::to_string(gr);
        }
        // enough good indices force |D_{1,1}| >= n^2 / 2 (n/sqrt 2 in exact form)
        if (2 * gc * gc >= n * n && 2 * gr * gr >= n * n && 2 * ball < n * n) {
            ++failures;
            if (!witness)
                witness = "threshold;X=" + compact(g) + ";ball=" + std::to_string(ball);
        }
        if (grids % 8192 == 0) {
            ++cross_checks;
            if (ball != ball_size(g)) {
                ++failures;
                if (!witness) witness = "cross-check;X=" + compact(g);
            }
        }
        ++grids;
    };

    const bool exhaustive = n == 4;
    if (exhaustive) {
        for (uint64_t v = 0; v < (1ull << 16); ++v) scan(v);
    } else {
        Rng rng(seed);
        for (int s = 0; s < samples; ++s) scan(rng.next_u64() & low_mask(n * n));
    }

    std::ostringstream scope;
    scope << "n=" << n << ";mode=" << (exhaustive ? "exhaustive" : "sampled")
          << ";grids=" << grids << ";cross-checks=" << cross_checks;
    if (!exhaustive) scope << ";seed=" << seed;
    return {"good-array-ball-bound", scope.str(), failures == 0, witness};
}

namespace {

// Every grid reachable from the 7x7 received grid by one row and one column
// insertion that also passes is_codeword. Works on packed 8x8 grids; the
// fixed cells of the construction (zeros in column 7, alternating prefix in
// column 8, rows 1..4) make a cheap one-op prefilter.
std::vector<uint64_t> completion_search_8(uint64_t received49, const CodeParams& p) {
    constexpr uint64_t kFixMask = (1ull << 6) | (1ull << 7) | (1ull << 14) | (1ull << 15) |
                                  (1ull << 22) | (1ull << 23) | (1ull << 30) | (1ull << 31);
    constexpr uint64_t kFixValue = (1ull << 15) | (1ull << 31);

    // column-content spreads: table[c-1][bits] places bit r of `bits` at cell (r+1, c)
    static std::array<std::array<uint64_t, 256>, 8> col_spread = [] {
        std::array<std::array<uint64_t, 256>, 8> t{};
        for (int c = 1; c <= 8; ++c)
            for (uint32_t bits = 0; bits < 256; ++bits) {
                uint64_t v = 0;
                for (int r = 0; r < 8; ++r)
                    v |= static_cast<uint64_t>((bits >> r) & 1u) << (8 * r + c - 1);
                t[c - 1][bits] = v;
            }
        return t;
    }();

    std::vector<uint64_t> prefiltered;
    for (int r = 1; r <= 8; ++r) {
        const int shift = 7 * (r - 1);
        const uint64_t lo = received49 & low_mask(shift);
        const uint64_t hi = (received49 >> shift) << (shift + 7);
        for (uint64_t row_bits = 0; row_bits < 128; ++row_bits) {
            const uint64_t mid56 = lo | (row_bits << shift) | hi;
            for (int c = 1; c <= 8; ++c) {
                uint64_t base = 0;
                for (int row = 0; row < 8; ++row) {
                    uint64_t r7 = (mid56 >> (7 * row)) & 0x7f;
                    uint64_t left = r7 & low_mask(c - 1);
                    uint64_t right = (r7 >> (c - 1)) << c;
                    base |= (left | right) << (8 * row);
                }
                const auto& table = col_spread[c - 1];
                for (uint32_t col_bits = 0; col_bits < 256; ++col_bits) {
                    uint64_t cand = base | table[col_bits];
                    if ((cand & kFixMask) == kFixValue) prefiltered.push_back(cand);
                }
            }
        }
    }
    std::sort(prefiltered.begin(), prefiltered.end());
    prefiltered.erase(std::unique(prefiltered.begin(), prefiltered.end()),
                      prefiltered.end());
    std::vector<uint64_t> survivors;
    for (uint64_t cand : prefiltered)
        if (is_codeword(BitGrid::from_packed(8, 8, cand), p)) survivors.push_back(cand);
    return survivors;
}

}  // namespace

VerificationResult verify_code(int n, int num_codewords, uint64_t seed, int oracle_cases) {
    if (n != 8 && n != 16) throw std::invalid_argument("verify_code supports n in {8, 16}");
    if (num_codewords < 1) throw std::invalid_argument("need at least one codeword");
    if (oracle_cases > 0 && n != 8)
        throw std::invalid_argument("the completion-search oracle runs packed 8x8 only");

    Rng rng(seed);
    std::vector<BitGrid> words;
    std::vector<CodeParams> params;
    words.reserve(num_codewords);
    params.reserve(num_codewords);
    for (int k = 0; k < num_codewords; ++k) {
        auto [x, p] = sample_codeword(n, rng.next_u64());
        words.push_back(std::move(x));
        params.push_back(p);
    }

    long long roundtrips = 0, failures = 0;
    std::optional<std::string> witness;
    auto fail = [&](const std::string& w) {
        ++failures;
        if (!witness) witness = w;
    };

    for (int k = 0; k < num_codewords; ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                BitGrid received = delete_row_col(words[k], i, j);
                auto res = decode(received, params[k]);
                ++roundtrips;
                if (!res || !(res->codeword == words[k])) {
                    std::ostringstream os;
                    os << "roundtrip;params=" << params[k].n << "," << params[k].a << ","
                       << params[k].b << "," << params[k].c << "," << params[k].d
                       << ";X=" << compact(words[k]) << ";i=" << i << ";j=" << j
                       << ";decoded=" << (res ? compact(res->codeword) : std::string("none"));
                    fail(os.str());
                }
            }
        }
    }

    // pairwise deletion-ball disjointness among codewords sharing one params tuple
    std::map<std::array<int, 5>, std::vector<int>> groups;
    for (int k = 0; k < num_codewords; ++k) {
        const CodeParams& p = params[k];
        groups[{p.n, p.a, p.b, p.c, p.d}].push_back(k);
    }
    long long disjoint_pairs = 0;
    constexpr long long kPairBudget = 50;
    for (const auto& [label, members] : groups) {
        (void)label;
        for (size_t s = 0; s < members.size() && disjoint_pairs < kPairBudget; ++s) {
            for (size_t u = s + 1; u < members.size() && disjoint_pairs < kPairBudget; ++u) {
                const BitGrid& x = words[members[s]];
                const BitGrid& y = words[members[u]];
                if (x == y) continue;  // the sampler may repeat a codeword
                ++disjoint_pairs;
                if (deletion_ball(x, 1, 1).intersects(deletion_ball(y, 1, 1)))
                    fail("ball-overlap;X=" + compact(x) + ";Y=" + compact(y));
            }
        }
    }

    for (int c = 0; c < oracle_cases; ++c) {
        int k = static_cast<int>(rng.next_below(static_cast<uint32_t>(num_codewords)));
        int i = 1 + static_cast<int>(rng.next_below(static_cast<uint32_t>(n)));
        int j = 1 + static_cast<int>(rng.next_below(static_cast<uint32_t>(n)));
        BitGrid received = delete_row_col(words[k], i, j);
        auto survivors = completion_search_8(received.packed(), params[k]);
        auto res = decode(received, params[k]);
        bool ok = survivors.size() == 1 &&
                  BitGrid::from_packed(8, 8, survivors[0]) == words[k] && res.has_value() &&
                  res->codeword == words[k];
        if (!ok) {
            std::ostringstream os;
            os << "oracle;case=" << c << ";X=" << compact(words[k]) << ";i=" << i
               << ";j=" << j << ";survivors=" << survivors.size();
            fail(os.str());
        }
    }

    std::ostringstream scope;
    scope << "n=" << n << ";codewords=" << num_codewords << ";roundtrips=" << roundtrips
          << ";disjoint-pairs=" << disjoint_pairs << ";oracle-cases=" << oracle_cases
          << ";seed=" << seed;
    return {"code-decoder-roundtrip", scope.str(), failures == 0, witness};
}

std::vector<VerificationResult> verify_counts() {
    std::vector<VerificationResult> out;

    // top-band count vs closed form, plus the enumeration guard at n = 16
    {
        bool ok = true;
        std::optional<std::string> wit;
        for (int n : {4, 8}) {
            int ell = log2_exact(n);
            long long expect = 1ll << ell;
            for (int i = 0; i < n - ell - 1; ++i) expect *= (1ll << ell) - 1;
            long long got = count_structural(StructuralKind::uperp, n);
            if (got != expect) {
                ok = false;
                wit = "n=" + std::to_string(n) + ";enumerated=" + std::to_string(got) +
                      ";closed-form=" + std::to_string(expect);
            }
        }
        bool refused = false;
        try {
            (void)count_structural(StructuralKind::uperp, 16);
        } catch (const GuardError&) {
            refused = true;
        }
        if (!refused) {
            ok = false;
            wit = "n=16;enumeration was not refused by the guard";
        }
        out.push_back({"count-top-band", "n in {4,8} enumerated vs 2^l (2^l-1)^(n-l-1); n=16 guard refusal",
                       ok, wit});
    }

    // right-band count vs closed form
    {
        bool ok = true;
        std::optional<std::string> wit;
        for (int n : {4, 8}) {
            int ell = log2_exact(n);
            long long expect = 1ll << (ell - 1);
            for (int i = 0; i < n - ell - 2; ++i) expect *= (1ll << ell) - 1;
            long long got = count_structural(StructuralKind::vperp, n);
            if (got != expect) {
                ok = false;
                wit = "n=" + std::to_string(n) + ";enumerated=" + std::to_string(got) +
                      ";closed-form=" + std::to_string(expect);
            }
        }
        bool refused = false;
        try {
            (void)count_structural(StructuralKind::vperp, 16);
        } catch (const GuardError&) {
            refused = true;
        }
        if (!refused) {
            ok = false;
            wit = "n=16;enumeration was not refused by the guard";
        }
        out.push_back({"count-right-band", "n in {4,8} enumerated vs 2^(l-1) (2^l-1)^(n-l-2); n=16 guard refusal",
                       ok, wit});
    }

    // distinct-run squares: exact value at l=2 and the 2^(l^2-1) lower bound
    {
        bool ok = true;
        std::optional<std::string> wit;
        std::ostringstream values;
        for (int ell : {2, 3, 4}) {
            long long got = count_structural(StructuralKind::scr, ell);
            values << (ell > 2 ? "," : "") << "scr(" << ell << ")=" << got;
            long long bound = 1ll << (ell * ell - 1);
            if (got < bound) {
                ok = false;
                wit = "l=" + std::to_string(ell) + ";count=" + std::to_string(got) +
                      ";bound=" + std::to_string(bound);
            }
            if (ell == 2 && got != 10) {
                ok = false;
                wit = "l=2;count=" + std::to_string(got) + ";expected=10";
            }
        }
        out.push_back({"count-square-bound", "l in {2,3,4}: " + values.str() + " vs 2^(l^2-1)",
                       ok, wit});
    }

    // constrained squares with the fixed corner bits; subset of the above
    {
        bool ok = true;
        std::optional<std::string> wit;
        const std::map<int, long long> frozen = {{2, 1}, {3, 7}, {4, 225}};
        for (const auto& [ell, expect] : frozen) {
            long long got = count_structural(StructuralKind::sint, ell);
            if (got != expect) {
                ok = false;
                wit = "l=" + std::to_string(ell) + ";count=" + std::to_string(got) +
                      ";frozen=" + std::to_string(expect);
            }
            if (got > count_structural(StructuralKind::scr, ell)) {
                ok = false;
                wit = "l=" + std::to_string(ell) + ";constrained count exceeds the free one";
            }
        }
        out.push_back({"count-constrained-square", "l in {2,3,4} vs frozen enumeration {1,7,225}",
                       ok, wit});
    }

    // chain inequality 2(l-1) 2^-l <= 1/2, integer form 4(l-1) <= 2^l; the
    // source text states the reversed inequality for all l >= 0, so record
    // where that version actually holds
    {
        bool ok = true;
        std::optional<std::string> wit;
        std::ostringstream reversed;
        bool first = true;
        for (int ell = 0; ell <= 30; ++ell) {
            bool as_written = 4ll * (ell - 1) >= (1ll << ell);
            if (as_written) {
                reversed << (first ? "" : ",") << ell;
                first = false;
            }
            if (ell >= 3 && 4ll * (ell - 1) > (1ll << ell)) {
                ok = false;
                wit = "l=" + std::to_string(ell) + ";4(l-1) > 2^l";
            }
        }
        out.push_back({"square-chain-inequality",
                       "4(l-1) <= 2^l for l in [3,30]; reversed form holds only for l in {" +
                           reversed.str() + "}",
                       ok, wit});
    }

    // redundancy accounting: closed forms, the gap identity, and its bound
    {
        bool ok = true;
        std::optional<std::string> wit;
        const double log2e = std::numbers::log2e;
        for (int n : {8, 16, 32, 64}) {
            RedundancyReport r = redundancy_bounds(n);
            double logn = std::log2(static_cast<double>(n));
            auto close = [](double a, double b) { return std::fabs(a - b) <= 1e-9; };
            bool good = close(r.lower, 2.0 * n - 2 + 2 * logn) &&
                        close(r.upper, 2.0 * n + 4 * logn + 7 + 2 * log2e) &&
                        close(r.parity_redundancy, 2.0 * n - logn - 1) &&
                        close(r.prop1_bound, (2.0 * n - 2 * logn - 3) *
                                                     std::log2(n / (n - 1.0)) +
                                                 5 * logn + 6) &&
                        close(r.gap, r.upper - r.lower) &&
                        close(r.gap_bound, 2 * logn + 9 + 2 * log2e) &&
                        r.gap <= r.gap_bound + 1e-9 && r.upper > r.lower;
            if (!good) {
                ok = false;
                wit = "n=" + std::to_string(n);
            }
        }
        out.push_back({"redundancy-bounds", "n in {8,16,32,64}; closed forms at 1e-9, gap <= 2 log n + 9 + 2 log e",
                       ok, wit});
    }

    return out;
}

namespace {

QaryWord erased(const QaryWord& w, int pos) {
    QaryWord r{w.q, {}};
    r.symbols.reserve(w.symbols.size() - 1);
    for (int i = 0; i < static_cast<int>(w.symbols.size()); ++i)
        if (i != pos - 1) r.symbols.push_back(w.symbols[i]);
    return r;
}

uint64_t pack_word(const QaryWord& w) {
    uint64_t v = 0;
    for (int s : w.symbols) v = v * static_cast<uint64_t>(w.q) + static_cast<uint64_t>(s);
    return v;
}

std::string word_str(const QaryWord& w) {
    std::string s;
    for (int sym : w.symbols) s += std::to_string(sym);
    return s;
}

}  // namespace

VerificationResult verify_vt(int m, int q, int sampled_cosets, uint64_t seed) {
    if (m < 2 || q < 2) throw std::invalid_argument("require m >= 2 and q >= 2");
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= q;
        if (total > (1ll << 20)) throw GuardError("q^m exceeds the word-list guard 2^20");
    }

    long long failures = 0;
    std::optional<std::string> witness;
    auto fail = [&](const std::string& w) {
        ++failures;
        if (!witness) witness = w;
    };

    VtCosetCensus census = vt_coset_census(m, q);
    if (!census.pigeonhole_ok()) fail("pigeonhole;max-coset too small");
    if (census.total() != total) fail("census total mismatch");

    // bucket all words by label
    std::vector<std::vector<QaryWord>> buckets(static_cast<size_t>(m) * q);
    {
        QaryWord w{q, std::vector<int>(m, 0)};
        while (true) {
            VtLabel lab = vt_label(w);
            buckets[static_cast<size_t>(lab.a) * q + lab.b].push_back(w);
            int i = m - 1;
            while (i >= 0 && w.symbols[i] == q - 1) w.symbols[i--] = 0;
            if (i < 0) break;
            ++w.symbols[i];
        }
    }
    for (int idx = 0; idx < m * q; ++idx)
        if (static_cast<long long>(buckets[idx].size()) != census.sizes[idx])
            fail("bucket size disagrees with census at index " + std::to_string(idx));

    std::vector<int> chosen;
    if (sampled_cosets <= 0 || sampled_cosets >= m * q) {
        for (int idx = 0; idx < m * q; ++idx) chosen.push_back(idx);
    } else {
        Rng rng(seed);
        while (static_cast<int>(chosen.size()) < sampled_cosets) {
            int idx = static_cast<int>(rng.next_below(static_cast<uint32_t>(m * q)));
            if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end())
                chosen.push_back(idx);
        }
        std::sort(chosen.begin(), chosen.end());
    }

    long long words_checked = 0, ball_pairs = 0;
    for (int idx : chosen) {
        VtLabel label{idx / q, idx % q};
        const auto& ws = buckets[idx];
        std::vector<std::vector<uint64_t>> balls(ws.size());
        for (size_t k = 0; k < ws.size(); ++k) {
            const QaryWord& w = ws[k];
            ++words_checked;
            for (int p = 1; p <= m; ++p) {
                QaryWord del = erased(w, p);
                balls[k].push_back(pack_word(del));
                auto dec = vt_decode_deletion(del, m, label);
                if (!dec || dec->word != w) {
                    fail("decode;word=" + word_str(w) + ";pos=" + std::to_string(p) +
                         ";a=" + std::to_string(label.a) + ";b=" + std::to_string(label.b));
                    continue;
                }
                // returned position is the smallest reproducing the received word
                int smallest = 0;
                for (int p2 = 1; p2 <= m; ++p2)
                    if (erased(w, p2) == del) {
                        smallest = p2;
                        break;
                    }
                if (dec->position != smallest ||
                    dec->symbol != w.symbols[dec->position - 1])
                    fail("canonical-position;word=" + word_str(w) +
                         ";pos=" + std::to_string(p));
            }
            std::sort(balls[k].begin(), balls[k].end());
            balls[k].erase(std::unique(balls[k].begin(), balls[k].end()), balls[k].end());
        }
        for (size_t s = 0; s < ws.size(); ++s)
            for (size_t u = s + 1; u < ws.size(); ++u) {
                ++ball_pairs;
                if (sorted_intersect(balls[s], balls[u]))
                    fail("ball-overlap;a=" + std::to_string(label.a) +
                         ";b=" + std::to_string(label.b) + ";X=" + word_str(ws[s]) +
                         ";Y=" + word_str(ws[u]));
            }
    }

    std::ostringstream scope;
    scope << "m=" << m << ";q=" << q << ";cosets=" << chosen.size() << "/" << m * q
          << ";words=" << words_checked << ";ball-pairs=" << ball_pairs;
    if (sampled_cosets > 0 && sampled_cosets < m * q) scope << ";seed=" << seed;
    return {"vt-single-deletion", scope.str(), failures == 0, witness};
}

}  // namespace crisscross
