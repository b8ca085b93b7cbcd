#include "doctest.h"

#include "crisscross/channel.hpp"
#include "crisscross/verify.hpp"

using namespace crisscross;

TEST_CASE("json lines carry the fixed key order and a null witness when passing") {
    VerificationResult ok{"stmt", "scope-text", true, std::nullopt};
    CHECK(to_json_line(ok) ==
          R"({"statement":"stmt","scope":"scope-text","passed":true,"witness":null})");
    VerificationResult bad{"stmt", "scope-text", false, std::string("X=00/00")};
    CHECK(to_json_line(bad) ==
          R"({"statement":"stmt","scope":"scope-text","passed":false,"witness":"X=00/00"})");
}

TEST_CASE("deletion and insertion intersection coincide exhaustively at m=2") {
    VerificationResult r = verify_equivalence(2);
    CHECK(r.statement_id == "ball-intersection-equivalence");
    CHECK(r.passed);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.scope.find("mode=exhaustive") != std::string::npos);
    CHECK(r.scope.find("mixed-dims") != std::string::npos);
}

TEST_CASE("a corrupted intersection primitive is reported with a witness") {
    EquivalenceHooks hooks;
    hooks.deletion_intersect = [](const BitGrid& x, const BitGrid& y, int tr, int tc) {
        return balls_intersect(x, y, BallMode::deletion, tr, tc);
    };
    hooks.insertion_intersect = [](const BitGrid& x, const BitGrid& y, int tr, int tc) {
        bool real = balls_intersect(x, y, BallMode::insertion, tr, tc);
        bool x_zero = true, y_one = true;
        for (int i = 1; i <= x.rows(); ++i)
            for (int j = 1; j <= x.cols(); ++j) x_zero &= x.at(i, j) == 0;
        for (int i = 1; i <= y.rows(); ++i)
            for (int j = 1; j <= y.cols(); ++j) y_one &= y.at(i, j) == 1;
        return (x_zero && y_one) ? !real : real;
    };
    VerificationResult r = verify_equivalence(2, 10000, 1, &hooks);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->find("variant=square-1-1") != std::string::npos);
    CHECK(r.witness->find("X=00/00") != std::string::npos);
    CHECK(r.witness->find("Y=11/11") != std::string::npos);
}

TEST_CASE("equivalence checks refuse sizes beyond their guards") {
    CHECK_THROWS_AS(verify_equivalence(1), GuardError);
    CHECK_THROWS_AS(verify_equivalence(5), GuardError);
    CHECK_THROWS_AS(verify_t_equivalence(7, 2, 10, 1), GuardError);
    CHECK_THROWS_AS(verify_t_equivalence(3, 3, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_del_pattern(2), GuardError);
    CHECK_THROWS_AS(verify_del_pattern(6), GuardError);
    CHECK_THROWS_AS(verify_good_arrays(3, 10, 1), GuardError);
    CHECK_THROWS_AS(verify_good_arrays(9, 10, 1), GuardError);
}

TEST_CASE("the multi-deletion equivalence holds on sampled pairs") {
    VerificationResult r = verify_t_equivalence(4, 2, 500, 3);
    CHECK(r.statement_id == "t-ball-intersection-equivalence");
    CHECK(r.passed);
    CHECK(r.scope.find("m=4;t=2") != std::string::npos);
}

TEST_CASE("the collision predicate matches deletion equality") {
    VerificationResult r3 = verify_del_pattern(3);
    CHECK(r3.passed);
    CHECK(r3.scope.find("n=3;mode=exhaustive;grids=512") != std::string::npos);
    VerificationResult r5 = verify_del_pattern(5, 50, 7);
    CHECK(r5.passed);
    CHECK(r5.scope.find("mode=sampled") != std::string::npos);
}

TEST_CASE("good arrays dominate the product bound") {
    VerificationResult r4 = verify_good_arrays(4, 0, 0);
    CHECK(r4.passed);
    CHECK(r4.scope.find("mode=exhaustive;grids=65536") != std::string::npos);
    VerificationResult r5 = verify_good_arrays(5, 2000, 1);
    CHECK(r5.passed);
}

TEST_CASE("count identities all verify") {
    std::vector<VerificationResult> results = verify_counts();
    REQUIRE(results.size() == 6);
    CHECK(results[0].statement_id == "count-top-band");
    CHECK(results[1].statement_id == "count-right-band");
    CHECK(results[2].statement_id == "count-square-bound");
    CHECK(results[3].statement_id == "count-constrained-square");
    CHECK(results[4].statement_id == "square-chain-inequality");
    CHECK(results[5].statement_id == "redundancy-bounds");
    for (const VerificationResult& r : results) {
        CAPTURE(r.statement_id);
        CHECK(r.passed);
    }
    // the reversed reading of the chain inequality is recorded, not asserted
    CHECK(results[4].scope.find("l in {2,3}") != std::string::npos);
    CHECK(results[2].scope.find("scr(2)=10") != std::string::npos);
}

TEST_CASE("component code cosets correct a single deletion") {
    CHECK(verify_vt(4, 3, 0, 1).passed);
    CHECK(verify_vt(5, 2, 0, 1).passed);
    VerificationResult sampled = verify_vt(6, 4, 6, 9);
    CHECK(sampled.passed);
    CHECK(sampled.scope.find("cosets=6/24") != std::string::npos);
    CHECK_THROWS_AS(verify_vt(30, 4, 0, 1), GuardError);
    CHECK_THROWS_AS(verify_vt(1, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("code verification round trips and consults the oracle") {
    VerificationResult r = verify_code(8, 12, 5, 3);
    CHECK(r.statement_id == "code-decoder-roundtrip");
    CHECK(r.passed);
    CHECK(r.scope.find("roundtrips=768") != std::string::npos);
    CHECK(r.scope.find("oracle-cases=3") != std::string::npos);
    CHECK_THROWS_AS(verify_code(9, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_code(16, 1, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_code(8, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("verification runs are reproducible") {
    VerificationResult a = verify_code(8, 5, 11, 2);
    VerificationResult b = verify_code(8, 5, 11, 2);
    CHECK(a.passed == b.passed);
    CHECK(a.scope == b.scope);
    VerificationResult c = verify_t_equivalence(4, 1, 200, 5);
    VerificationResult d = verify_t_equivalence(4, 1, 200, 5);
    CHECK(c.scope == d.scope);
    CHECK(c.passed == d.passed);
}
