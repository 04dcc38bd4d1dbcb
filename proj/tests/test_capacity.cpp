#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adt/capacity.hpp"

using namespace adt;

TEST_CASE("cut-set bound") {
    CHECK(upper_cutset(Params2x2{3, 5, 5, 3}) == Rational{3});
    CHECK(upper_cutset(Params2x2{0, 7, 7, 0}) == Rational{0});
    CHECK(upper_cutset(Params2x2{4, 2, 5, 3}) == Rational{2});
}

TEST_CASE("non-degenerate bound") {
    CHECK(upper_nondegenerate(Params2x2{4, 3, 3, 4}) == Rational{8, 3});
    CHECK(!upper_nondegenerate(Params2x2{4, 2, 5, 3}));
    CHECK(upper_nondegenerate(Params2x2{5, 3, 3, 5}) == Rational{10, 3});
}

TEST_CASE("degenerate capacity") {
    CHECK(capacity_degenerate(Params2x2{4, 2, 5, 3}) == Rational{2});
    CHECK(capacity_degenerate(Params2x2{3, 3, 3, 3}) == Rational{3});
    CHECK(capacity_degenerate(Params2x2{2, 2, 4, 4}) == Rational{2});
    CHECK_THROWS(capacity_degenerate(Params2x2{4, 3, 3, 4}));
}

TEST_CASE("symmetric capacity") {
    CHECK(capacity_symmetric(3, 5) == Rational{3});
    CHECK(capacity_symmetric(3, 4) == Rational{8, 3});
    CHECK(capacity_symmetric(4, 4) == Rational{4});
    CHECK(capacity_symmetric(0, 0) == Rational{0});
}

TEST_CASE("normalized capacity") {
    CHECK(normalized_capacity(1, 2) == Rational{1, 2});
    CHECK(normalized_capacity(3, 4) == Rational{2, 3});
    CHECK(normalized_capacity(5, 5) == Rational{1});
}

TEST_CASE("separation rate") {
    CHECK(separation_rate(3, 5) == Rational{5, 2});
    CHECK(separation_rate(2, 4) == Rational{2});
    CHECK(separation_rate(0, 6) == Rational{0});
}

TEST_CASE("L-user formulas") {
    CHECK(luser_linear_capacity(3, 4, 3) == Rational{2});
    CHECK(luser_upper_bound(3, 4, 3) == Rational{12, 5});
    for (int L = 3; L <= 6; ++L) {
        CHECK(luser_linear_capacity(4, 4, L) == Rational{4});
        CHECK(luser_upper_bound(4, 4, L) == Rational{4});
    }
    CHECK_THROWS(luser_linear_capacity(3, 4, 2));
    CHECK_THROWS(luser_upper_bound(3, 4, 2));
    // gap to the upper bound shrinks monotonically in L
    Rational prev{100};
    for (int L = 3; L <= 12; ++L) {
        Rational gap = luser_upper_bound(3, 4, L) - luser_linear_capacity(3, 4, L);
        CHECK(gap <= prev);
        CHECK(gap >= Rational{0});
        prev = gap;
    }
}

TEST_CASE("formula invariants over a grid") {
    for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n) {
            Rational cap = capacity_symmetric(m, n);
            CHECK(cap == capacity_symmetric(n, m));
            if (m != n) {
                Params2x2 p{n, m, m, n};
                CHECK(cap <= upper_cutset(p));
                CHECK(cap <= *upper_nondegenerate(p));
            }
            if (std::max(m, n) > 0) {
                Rational sep = separation_rate(m, n);
                CHECK(sep <= cap);
                int mi = std::min(m, n), ma = std::max(m, n);
                // Coding beats separation strictly once alpha > 1/2 (including
                // the matched channel, where separation halves the rate).
                bool strict = 2 * mi > ma;
                CHECK((sep < cap) == strict);
            }
            for (int L : {3, 4, 5}) CHECK(luser_linear_capacity(m, n, L) <= luser_upper_bound(m, n, L));
        }
}
