#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adt/capacity.hpp"
#include "adt/construct.hpp"
#include "adt/serialize.hpp"
#include "adt/verify.hpp"

using namespace adt;

namespace {

Gf2Matrix sparse(std::size_t rows, std::size_t cols, const std::vector<std::pair<int, int>>& ones) {
    Gf2Matrix m(rows, cols);
    for (auto [r, c] : ones) m.set(r - 1, c - 1, 1);  // 1-based coordinates
    return m;
}

void check_valid(const LinearCode& c) {
    for (const auto& v : c.V)
        for (std::size_t j = 0; j < v.cols(); ++j) CHECK(!v.col_slice(j, j + 1).is_zero());
    CHECK(decoder_exists(c).pass);
}

}  // namespace

TEST_CASE("uncoded") {
    LinearCode c = construct_uncoded(4, 2);
    CHECK(c.K == 4);
    check_valid(c);
    CHECK(construct_uncoded(1, 3).K == 1);
    CHECK(construct_uncoded(0, 2).K == 0);
    CHECK_THROWS(construct_uncoded(-1, 2));
}

TEST_CASE("degenerate") {
    LinearCode c = construct_degenerate(Params2x2{4, 2, 5, 3});
    CHECK(c.K == 2);
    check_valid(c);
    LinearCode u = construct_degenerate(Params2x2{3, 3, 3, 3});
    CHECK(u.K == 3);
    check_valid(u);
    LinearCode w = construct_degenerate(Params2x2{2, 2, 4, 4});
    CHECK(w.K == 2);
    check_valid(w);
    CHECK_THROWS(construct_degenerate(Params2x2{4, 3, 3, 4}));
    // degenerate capacity achieved on a small exhaustive grid
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c2 = 0; c2 <= 3; ++c2) {
                int d = a - b;
                for (int e = 0; e <= 3; ++e) {
                    if (c2 - e != d) continue;
                    Params2x2 p{a, b, c2, e};
                    if (p.q() == 0) continue;
                    LinearCode code = construct_degenerate(p);
                    CHECK(Rational{code.K} == capacity_degenerate(p));
                    CHECK(decoder_exists(code).pass);
                }
            }
}

TEST_CASE("case I") {
    LinearCode c = construct_case1(3, 5);
    CHECK(c.K == 3);
    CHECK(c.N == 1);
    // canonical placement: X2 = (b3, b2, b1, 0, 0)
    CHECK(c.V[1] == sparse(5, 3, {{3, 1}, {2, 2}, {1, 3}}));
    check_valid(c);
    check_valid(construct_case1(2, 4));
    LinearCode c46 = construct_case1(4, 6);
    CHECK(c46.K == 4);
    check_valid(c46);
    CHECK_THROWS(construct_case1(1, 3));  // alpha < 1/2
    CHECK_THROWS(construct_case1(5, 6));  // alpha > 2/3
}

TEST_CASE("case II reproduces the (3,4) matrices") {
    LinearCode c = construct_case2(3, 4);
    CHECK(c.N == 3);
    CHECK(c.K == 8);
    Case2Parts p = case2_parts(3, 4);
    Gf2Matrix v1 = sparse(12, 4, {{1, 1}, {5, 2}, {9, 3}, {7, 4}, {8, 4}, {10, 4}});
    Gf2Matrix v2 = sparse(12, 4, {{1, 1}, {5, 2}, {9, 3}, {3, 4}, {4, 4}, {10, 4}});
    CHECK(p.V1 == v1);
    CHECK(p.V2 == v2);
    CHECK(p.T == kron(Gf2Matrix::identity(3), Gf2Matrix::shift_matrix(4, 1)));
    CHECK(c.V[0] == hconcat({v1, p.T * v2}));
    CHECK(c.V[1] == hconcat({p.T * v1, v2}));
    CHECK(hconcat({v1, p.T * v2, p.T * (p.T * v1)}).rank() == 12);
    check_valid(c);
    CHECK(c.rate() == capacity_symmetric(3, 4));
}

TEST_CASE("case II general") {
    LinearCode c45 = construct_case2(4, 5);
    CHECK(c45.K == 10);
    check_valid(c45);
    for (int n = 4; n <= 10; ++n)
        for (int m = (2 * n + 2) / 3; m < n; ++m) {
            LinearCode c = construct_case2(m, n);
            CHECK(c.rate() == capacity_symmetric(m, n));
            CHECK(decoder_exists(c).pass);
        }
}

TEST_CASE("mirror property") {
    LinearCode a = construct_case1(5, 3);
    LinearCode b = construct_case1(3, 5);
    CHECK(a.V[0] == b.V[1]);
    CHECK(a.V[1] == b.V[0]);
    check_valid(a);
    LinearCode c = construct_case2(4, 3);
    CHECK(c.V[0] == construct_case2(3, 4).V[1]);
    check_valid(c);
    check_valid(construct_gap1_L2(3, true));
    check_valid(construct_luser_gap1(4, true, 3));
}

TEST_CASE("gap-1 two-user codes") {
    CHECK(construct_gap1_L2(0).K == 0);
    LinearCode r1 = construct_gap1_L2(1);
    CHECK(r1.K == 1);
    check_valid(r1);

    LinearCode r2 = construct_gap1_L2(2);
    CHECK(r2.K == 2);
    CHECK(r2.N == 1);
    check_valid(r2);

    LinearCode r3 = construct_gap1_L2(3);
    CHECK(r3.K == 8);
    CHECK(r3.N == 3);
    check_valid(r3);
    CHECK(r3.rate() == Rational{8, 3});

    for (int r = 0; r <= 13; ++r) {
        LinearCode c = construct_gap1_L2(r);
        CHECK(c.rate() == capacity_symmetric(r, r + 1));
        if (c.K > 0) CHECK(decoder_exists(c).pass);
    }
}

TEST_CASE("L-user gap-1 codes") {
    LinearCode f6 = construct_luser_gap1(4, false, 3);
    CHECK(f6.K == 2);
    CHECK(f6.N == 1);
    CHECK(f6.V[0] == sparse(4, 2, {{1, 1}, {3, 2}}));  // sources on odd levels
    CHECK(f6.V[0] == f6.V[1]);
    check_valid(f6);

    LinearCode f7 = construct_luser_gap1(5, false, 3);
    CHECK(f7.K == 5);
    CHECK(f7.N == 2);
    CHECK(f7.rate() == Rational{5, 2});
    check_valid(f7);

    CHECK(construct_luser_gap1(1, false, 3).K == 0);
    CHECK(construct_luser_gap1(1, false, 5).K == 0);

    for (int L : {3, 4, 5})
        for (int r = 2; r <= 9; ++r) {
            LinearCode c = construct_luser_gap1(r, false, L);
            CHECK(c.rate() == luser_linear_capacity(r - 1, r, L));
            CHECK(decoder_exists(c).pass);
        }
}

TEST_CASE("composition") {
    // (3,5) from (1,2) x (2,3)
    Decomposition d35 = full_decompose(3, 5);
    LinearCode c35 = compose_from_decomposition(
        ParamsSym{3, 5, 2}, d35, {construct_gap1_L2(2), construct_gap1_L2(1)});
    CHECK(c35.K == 3);
    CHECK(c35.N == 1);
    check_valid(c35);
    CHECK(c35.rate() == capacity_symmetric(3, 5));

    // (2,7) from (0,1)^3 x (1,2)^2
    Decomposition d27 = full_decompose(2, 7);
    std::vector<LinearCode> subs27;
    for (auto [mc, nc] : d27.color_shape) subs27.push_back(construct_gap1_L2(mc));
    LinearCode c27 = compose_from_decomposition(ParamsSym{2, 7, 2}, d27, subs27);
    CHECK(c27.rate() == Rational{2});
    check_valid(c27);

    // (6,8) from (3,4)^2 with Case II sub-codes
    Decomposition d68 = full_decompose(6, 8);
    LinearCode c68 = compose_from_decomposition(
        ParamsSym{6, 8, 2}, d68, {construct_case2(3, 4), construct_case2(3, 4)});
    CHECK(c68.rate() == Rational{16, 3});
    check_valid(c68);

    CHECK_THROWS(compose_from_decomposition(ParamsSym{3, 5, 2}, d35,
                                            {construct_gap1_L2(1), construct_gap1_L2(1)}));
}

TEST_CASE("composition restricts back to the sub-codes") {
    Decomposition d = full_decompose(3, 5);
    std::vector<LinearCode> subs = {construct_gap1_L2(2), construct_gap1_L2(1)};
    LinearCode c = compose_from_decomposition(ParamsSym{3, 5, 2}, d, subs);
    int q = 5, koff = 0;
    for (std::size_t j = 0; j < subs.size(); ++j) {
        int qj = std::max(d.color_shape[j].first, d.color_shape[j].second);
        for (int tx = 0; tx < 2; ++tx) {
            std::vector<int> lv(qj);
            for (int p = 0; p < q; ++p)
                if (d.coloring.color[tx][p] == static_cast<int>(j))
                    lv[d.coloring.sublevel[tx][p] - 1] = p;
            for (int sr = 0; sr < subs[j].N * qj; ++sr)
                for (int b = 0; b < subs[j].K; ++b)
                    CHECK(subs[j].V[tx].get(sr, b) ==
                          c.V[tx].get((sr / qj) * q + lv[sr % qj], koff + b));
        }
        koff += subs[j].K;
    }
}

TEST_CASE("auto selection achieves capacity (spot checks)") {
    CHECK(construct_auto(4, 4, 2).label == "uncoded");
    CHECK(construct_auto(0, 3, 2).K == 0);
    CHECK(construct_auto(3, 5, 2).label == "case1");
    CHECK(construct_auto(3, 4, 2).label == "case2");
    CHECK(construct_auto(2, 7, 2).label == "compose");
    CHECK(construct_auto(2, 7, 3).label == "compose");
    for (auto [m, n] : {std::pair{1, 4}, {2, 7}, {5, 8}, {7, 3}}) {
        LinearCode c = construct_auto(m, n, 2);
        CHECK(c.rate() == capacity_symmetric(m, n));
        check_valid(c);
    }
    for (int L : {3, 4})
        for (auto [m, n] : {std::pair{2, 5}, {4, 3}, {3, 7}}) {
            LinearCode c = construct_auto(m, n, L);
            CHECK(c.rate() == luser_linear_capacity(m, n, L));
            check_valid(c);
        }
}

TEST_CASE("code json round trip") {
    LinearCode c = construct_case2(3, 4);
    nlohmann::json j = c;
    LinearCode back = j.get<LinearCode>();
    CHECK(back.params == c.params);
    CHECK(back.N == c.N);
    CHECK(back.K == c.K);
    CHECK(back.V == c.V);
    CHECK(back.label == c.label);
}
