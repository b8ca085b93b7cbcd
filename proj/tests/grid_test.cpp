#include "doctest.h"

#include "crisscross/grid.hpp"
#include "crisscross/rng.hpp"

using namespace crisscross;

TEST_CASE("grid construction and cell access") {
    BitGrid g(2, 3);
    CHECK(g.rows() == 2);
    CHECK(g.cols() == 3);
    CHECK(g.at(1, 1) == 0);
    g.set(2, 3, 1);
    CHECK(g.at(2, 3) == 1);
    CHECK_THROWS_AS(BitGrid(-1, 2), std::invalid_argument);
}

TEST_CASE("from_rows builds the expected grid") {
    BitGrid g = BitGrid::from_rows({"10", "01"});
    CHECK(g.at(1, 1) == 1);
    CHECK(g.at(1, 2) == 0);
    CHECK(g.at(2, 1) == 0);
    CHECK(g.at(2, 2) == 1);
    CHECK_THROWS_AS(BitGrid::from_rows({"10", "0"}), std::invalid_argument);
    CHECK_THROWS_AS(BitGrid::from_rows({"1x"}), std::invalid_argument);
}

TEST_CASE("packed round trip and transpose") {
    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        uint64_t bits = rng.next_u64() & ((1ull << 20) - 1);
        BitGrid g = BitGrid::from_packed(4, 5, bits);
        CHECK(g.packed() == bits);
        BitGrid t = g.transposed();
        CHECK(t.rows() == 5);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 5; ++j) CHECK(t.at(j, i) == g.at(i, j));
    }
    CHECK_THROWS_AS(BitGrid(9, 9).packed(), std::invalid_argument);
}

TEST_CASE("delete rows and columns") {
    BitGrid g = BitGrid::from_rows({"10", "01"});
    BitGrid d = delete_rows_cols(g, {{1}, {2}});
    CHECK(d.rows() == 1);
    CHECK(d.cols() == 1);
    CHECK(d.at(1, 1) == 0);

    BitGrid eye = BitGrid::from_rows({"100", "010", "001"});
    CHECK(delete_row_col(eye, 2, 3) == BitGrid::from_rows({"10", "00"}));

    BitGrid z(4, 4);
    CHECK(delete_row_col(z, 2, 3) == BitGrid(3, 3));
}

TEST_CASE("deletion validates its index sets") {
    BitGrid g(3, 3);
    CHECK_THROWS_AS(delete_rows_cols(g, {{0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(delete_rows_cols(g, {{4}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(delete_rows_cols(g, {{1, 1}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(delete_rows_cols(g, {{1, 2, 3}, {}}), std::invalid_argument);
    CHECK(delete_rows_cols(g, {{}, {}}) == g);
}

TEST_CASE("deletion is order independent") {
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        BitGrid g = BitGrid::from_packed(4, 4, rng.next_u64() & 0xffff);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                BitGrid both = delete_rows_cols(g, {{i}, {j}});
                BitGrid rows_first =
                    delete_rows_cols(delete_rows_cols(g, {{i}, {}}), {{}, {j}});
                BitGrid cols_first =
                    delete_rows_cols(delete_rows_cols(g, {{}, {j}}), {{i}, {}});
                CHECK(both == rows_first);
                CHECK(both == cols_first);
            }
    }
}

TEST_CASE("insert a row or column") {
    BitGrid g = BitGrid::from_rows({"0"});
    BitGrid r = insert_row(g, 1, {1});
    CHECK(r == BitGrid::from_rows({"1", "0"}));

    BitGrid z(2, 2);
    BitGrid grown = insert_rows_cols(z, {RowInsertion{2, {0, 0, 0}}},
                                     {ColInsertion{2, {0, 0, 0}}});
    CHECK(grown == BitGrid(3, 3));
}

TEST_CASE("insert then delete the same indices is identity") {
    Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        BitGrid g = BitGrid::from_packed(3, 3, rng.next_u64() & 0x1ff);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                std::vector<int> rbits(4), cbits(4);
                for (int t = 0; t < 4; ++t) {
                    rbits[t] = static_cast<int>(rng.next_bit());
                    cbits[t] = static_cast<int>(rng.next_bit());
                }
                cbits[i - 1] = rbits[j - 1];  // shared crossing cell must agree
                BitGrid grown = insert_rows_cols(g, {RowInsertion{i, rbits}},
                                                 {ColInsertion{j, cbits}});
                CHECK(delete_row_col(grown, i, j) == g);
            }
    }
}

TEST_CASE("insertion rejects disagreeing crossing cells and bad shapes") {
    BitGrid g(2, 2);
    CHECK_THROWS_AS(insert_rows_cols(g, {RowInsertion{1, {1, 1, 1}}},
                                     {ColInsertion{1, {0, 0, 0}}}),
                    std::invalid_argument);
    CHECK_NOTHROW(insert_rows_cols(g, {RowInsertion{1, {1, 1, 1}}},
                                   {ColInsertion{1, {1, 0, 0}}}));
    CHECK_THROWS_AS(insert_row(g, 1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(insert_row(g, 4, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(insert_col(g, 1, {0, 2, 0}), std::invalid_argument);
}

TEST_CASE("parse and format grid files") {
    BitGrid g = parse_grid("2 2\n10\n01\n");
    CHECK(g == BitGrid::from_rows({"10", "01"}));
    CHECK(format_grid(g) == "2 2\n10\n01\n");

    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        BitGrid x = BitGrid::from_packed(3, 5, rng.next_u64() & 0x7fff);
        CHECK(parse_grid(format_grid(x)) == x);
    }
}

TEST_CASE("parse errors carry the offending line") {
    auto line_of = [](const char* text) {
        try {
            parse_grid(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("2x2\n10\n01\n") == 1);
    CHECK(line_of("0 2\n") == 1);
    CHECK(line_of("2 2\n10\n0\n") == 3);
    CHECK(line_of("2 2\n10\n0x\n") == 3);
    CHECK(line_of("2 2\n10\n01") == 3);
    CHECK(line_of("2 2\n10\n01\nextra\n") == 4);
    CHECK(line_of("2 2\n10\n01\n\n") == 4);
}
