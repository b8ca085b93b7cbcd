#include "doctest.h"

#include "crisscross/code.hpp"
#include "crisscross/decoder.hpp"

using namespace crisscross;

namespace {

DecodeResult decode_deletion(const BitGrid& x, const CodeParams& p, int i, int j) {
    auto res = decode(delete_row_col(x, i, j), p);
    REQUIRE(res.has_value());
    return *res;
}

}  // namespace

TEST_CASE("classification reads the received last column") {
    auto [x, p] = sample_codeword(8, 2);

    Classification c1 = classify(delete_row_col(x, 3, 8), 8);
    CHECK(c1.kind == Classification::Kind::last_col_deleted);

    Classification c2 = classify(delete_row_col(x, 2, 4), 8);
    CHECK(c2.kind == Classification::Kind::row_deleted_in_u);
    CHECK(c2.row_index == 2);

    Classification c3 = classify(delete_row_col(x, 1, 4), 8);
    CHECK(c3.kind == Classification::Kind::row_deleted_in_u);
    CHECK(c3.row_index == 1);

    Classification c4 = classify(delete_row_col(x, 6, 4), 8);
    CHECK(c4.kind == Classification::Kind::u_intact);
}

TEST_CASE("decoding recovers the codeword from every single criss-cross deletion") {
    for (uint64_t seed : {1, 2, 3, 4, 5}) {
        auto [x, p] = sample_codeword(8, seed);
        for (int i = 1; i <= 8; ++i) {
            for (int j = 1; j <= 8; ++j) {
                DecodeResult r = decode_deletion(x, p, i, j);
                CHECK(r.codeword == x);
            }
        }
    }
}

TEST_CASE("decoding recovers a 16 x 16 codeword from every deletion") {
    auto [x, p] = sample_codeword(16, 1);
    for (int i = 1; i <= 16; ++i) {
        for (int j = 1; j <= 16; ++j) {
            DecodeResult r = decode_deletion(x, p, i, j);
            CHECK(r.codeword == x);
        }
    }
}

TEST_CASE("traces name the reconstruction path taken") {
    auto [x, p] = sample_codeword(8, 7);

    DecodeResult r = decode_deletion(x, p, 2, 5);
    CHECK(r.trace.case_taken == DecodeCase::case_1a);
    CHECK(r.trace.row_index == 2);
    CHECK(r.trace.col_index == 5);
    CHECK(r.trace.hypothesis_notes == ParityNote::none);

    r = decode_deletion(x, p, 2, 1);
    CHECK(r.trace.case_taken == DecodeCase::case_1a);
    CHECK(r.trace.row_index == 2);
    CHECK(r.trace.col_index == 1);
    CHECK(r.trace.hypothesis_notes == ParityNote::parity_col_deleted);

    r = decode_deletion(x, p, 8, 1);
    CHECK(r.trace.case_taken == DecodeCase::case_1b);
    CHECK(r.trace.row_index == 8);
    CHECK(r.trace.col_index == 1);
    CHECK(r.trace.hypothesis_notes == ParityNote::parity_row_and_col_deleted);

    r = decode_deletion(x, p, 8, 4);
    CHECK(r.trace.case_taken == DecodeCase::case_1b);
    CHECK(r.trace.row_index == 8);
    CHECK(r.trace.col_index == 4);
    CHECK(r.trace.hypothesis_notes == ParityNote::parity_row_deleted);

    r = decode_deletion(x, p, 6, 3);
    CHECK(r.trace.case_taken == DecodeCase::case_1b);
    CHECK(r.trace.row_index == 6);
    CHECK(r.trace.col_index == 3);
    CHECK(r.trace.hypothesis_notes == ParityNote::none);

    r = decode_deletion(x, p, 3, 8);
    CHECK(r.trace.case_taken == DecodeCase::case_2);
    CHECK(r.trace.row_index == 3);
    CHECK(r.trace.col_index == 8);
    CHECK(r.trace.hypothesis_notes == ParityNote::none);

    r = decode_deletion(x, p, 8, 8);
    CHECK(r.trace.case_taken == DecodeCase::case_2);
    CHECK(r.trace.row_index == 8);
    CHECK(r.trace.col_index == 8);
    CHECK(r.trace.hypothesis_notes == ParityNote::parity_row_deleted);
}

TEST_CASE("the boundary row decodes whether or not its signature shows") {
    // deleting row ell + 1 may or may not disturb the alternating prefix,
    // depending on the data bit below it; both routes must round trip
    for (uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8}) {
        auto [x, p] = sample_codeword(8, seed);
        CHECK(decode_deletion(x, p, 4, 5).codeword == x);
        CHECK(decode_deletion(x, p, 4, 8).codeword == x);
        CHECK(decode_deletion(x, p, 4, 1).codeword == x);
    }
}

TEST_CASE("decoding rejects inputs outside every ball") {
    CodeParams p = CodeParams::make(8, 0, 0, 0, 0);
    CHECK_FALSE(decode(BitGrid(7, 7), p).has_value());
}

TEST_CASE("decoding validates received dimensions") {
    auto [x, p] = sample_codeword(8, 1);
    CHECK_THROWS_AS(decode(x, p), std::invalid_argument);
    CHECK_THROWS_AS(decode(BitGrid(7, 6), p), std::invalid_argument);
}

TEST_CASE("decoding with the wrong labels never returns a different codeword") {
    auto [x, p] = sample_codeword(8, 9);
    CodeParams wrong = CodeParams::make(8, (p.a + 3) % 8, (p.b + 5) % 8, p.c, p.d);
    auto res = decode(delete_row_col(x, 5, 5), wrong);
    if (res.has_value()) CHECK(is_codeword(res->codeword, wrong));
}
