#include "doctest.h"

#include <algorithm>

#include "crisscross/vt.hpp"

using namespace crisscross;

namespace {

QaryWord word(int q, std::vector<int> symbols) { return QaryWord{q, std::move(symbols)}; }

QaryWord erased(const QaryWord& w, int pos) {
    QaryWord r{w.q, {}};
    for (int i = 0; i < static_cast<int>(w.symbols.size()); ++i)
        if (i != pos - 1) r.symbols.push_back(w.symbols[i]);
    return r;
}

// every length-m word over {0..q-1}, in odometer order
std::vector<QaryWord> all_words(int m, int q) {
    std::vector<QaryWord> out;
    QaryWord w{q, std::vector<int>(m, 0)};
    while (true) {
        out.push_back(w);
        int i = m - 1;
        while (i >= 0 && w.symbols[i] == q - 1) w.symbols[i--] = 0;
        if (i < 0) break;
        ++w.symbols[i];
    }
    return out;
}

}  // namespace

TEST_CASE("signature definition") {
    CHECK(signature(word(4, {2, 0, 3, 3})) == std::vector<int>{1, 0, 1, 1});
    CHECK(signature(word(4, {0, 0, 0, 0})) == std::vector<int>{1, 1, 1, 1});
    CHECK(signature(word(2, {1, 0})) == std::vector<int>{1, 0});
}

TEST_CASE("coset label") {
    CHECK(vt_label(word(4, {2, 0, 3, 3})) == VtLabel{1, 0});
    CHECK(vt_label(word(4, {0, 0, 0, 0})) == VtLabel{2, 0});
    CHECK(vt_label(word(2, {1, 0})) == VtLabel{0, 1});
}

TEST_CASE("word validation") {
    CHECK_THROWS_AS(validate_word(word(3, {0, 3})), std::invalid_argument);
    CHECK_THROWS_AS(validate_word(word(3, {-1})), std::invalid_argument);
    CHECK_THROWS_AS(validate_word(word(1, {0})), std::invalid_argument);
    CHECK_NOTHROW(validate_word(word(3, {0, 2, 1})));
}

TEST_CASE("decode one deletion, hand-checked cases") {
    auto dec = vt_decode_deletion(word(3, {0, 1, 0}), 4, VtLabel{1, 0});
    REQUIRE(dec.has_value());
    CHECK(dec->word == word(3, {0, 2, 1, 0}));
    CHECK(dec->position == 2);
    CHECK(dec->symbol == 2);

    auto run = vt_decode_deletion(word(2, {0, 0, 0}), 4, VtLabel{2, 0});
    REQUIRE(run.has_value());
    CHECK(run->word == word(2, {0, 0, 0, 0}));
    CHECK(run->position == 1);  // a run decodes to its smallest index

    // label (1,2) over q=3 has no completion of (2,2,2): the only candidate
    // with symbol sum 2 mod 3 is (2,2,2,2), whose label is (2,2)
    CHECK_FALSE(vt_decode_deletion(word(3, {2, 2, 2}), 4, VtLabel{1, 2}).has_value());
}

TEST_CASE("decode validates its inputs") {
    CHECK_THROWS_AS(vt_decode_deletion(word(3, {0, 1}), 3, VtLabel{3, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(vt_decode_deletion(word(3, {0, 1}), 3, VtLabel{0, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(vt_decode_deletion(word(3, {0, 1}), 4, VtLabel{0, 0}),
                    std::invalid_argument);
}

TEST_CASE("every deletion of every word decodes back, m=4 q=3") {
    for (const QaryWord& w : all_words(4, 3)) {
        VtLabel label = vt_label(w);
        bool distinct_adjacent = true;
        for (int i = 1; i < 4; ++i)
            if (w.symbols[i] == w.symbols[i - 1]) distinct_adjacent = false;
        for (int p = 1; p <= 4; ++p) {
            QaryWord y = erased(w, p);
            auto dec = vt_decode_deletion(y, 4, label);
            REQUIRE(dec.has_value());
            CHECK(dec->word == w);
            CHECK(dec->symbol == w.symbols[dec->position - 1]);
            if (distinct_adjacent) {
                CHECK(dec->position == p);  // exact position recovery
            } else {
                int smallest = 0;
                for (int p2 = 1; p2 <= 4; ++p2)
                    if (erased(w, p2) == y) {
                        smallest = p2;
                        break;
                    }
                CHECK(dec->position == smallest);
            }
        }
    }
}

TEST_CASE("coset census partitions the word space") {
    VtCosetCensus c = vt_coset_census(2, 2);
    CHECK(c.total() == 4);
    CHECK(c.pigeonhole_ok());

    VtCosetCensus big = vt_coset_census(6, 4);
    CHECK(big.total() == 4096);
    CHECK(big.max_size() >= 171);  // ceil(4^6 / (4*6))
    CHECK(big.pigeonhole_ok());

    CHECK_THROWS_AS(vt_coset_census(30, 4), GuardError);
}

TEST_CASE("cosets are single-deletion correcting, m=4 q=3 exhaustive") {
    auto words = all_words(4, 3);
    for (size_t s = 0; s < words.size(); ++s) {
        for (size_t u = s + 1; u < words.size(); ++u) {
            if (!(vt_label(words[s]) == vt_label(words[u]))) continue;
            bool overlap = false;
            for (int p1 = 1; p1 <= 4 && !overlap; ++p1)
                for (int p2 = 1; p2 <= 4 && !overlap; ++p2)
                    if (erased(words[s], p1) == erased(words[u], p2)) overlap = true;
            CHECK_FALSE(overlap);
        }
    }
}
