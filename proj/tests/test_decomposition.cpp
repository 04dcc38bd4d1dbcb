#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adt/decomposition.hpp"

using namespace adt;

TEST_CASE("full_decompose examples") {
    CHECK(full_decompose(2, 7).format() == "(0,1)^3 x (1,2)^2");
    CHECK(full_decompose(3, 5).format() == "(1,2) x (2,3)");
    CHECK(full_decompose(4, 6).format() == "(2,3)^2");
    CHECK_THROWS(full_decompose(3, 3));
}

TEST_CASE("decompose_scale examples") {
    Decomposition d = decompose_scale(3, 4, 3);
    CHECK(d.m == 9);
    CHECK(d.n == 12);
    CHECK(d.format() == "(3,4)^3");
    CHECK(validate_coloring(d));
    CHECK(decompose_scale(3, 4, 1).format() == "(3,4)");
    CHECK(decompose_scale(1, 2, 2).format() == "(1,2)^2");
}

TEST_CASE("decompose_odd examples") {
    CHECK(decompose_odd(3, 5).format() == "(1,2) x (2,3)");
    CHECK(decompose_odd(1, 1).format() == "(0,0) x (1,1)");
    CHECK(decompose_odd(5, 7).format() == "(2,3) x (3,4)");
    CHECK_THROWS(decompose_odd(2, 4));
}

TEST_CASE("validate rejects corrupted colorings") {
    Decomposition d = full_decompose(2, 7);
    CHECK(validate_coloring(d));
    Decomposition bad = d;
    // receiver 1 only: swap the colors (and sublevels) of levels 1 and 2
    auto& col = bad.coloring.color[bad.L];
    auto& sub = bad.coloring.sublevel[bad.L];
    std::swap(col[0], col[1]);
    std::swap(sub[0], sub[1]);
    CHECK(!validate_coloring(bad));

    Decomposition wrong = d;
    wrong.parts[0].multiplicity += 1;  // declared multiset no longer matches
    CHECK(!validate_coloring(wrong));
}

TEST_CASE("structural sweep") {
    for (int L : {2, 3})
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; n <= 8; ++n) {
                if (m == n) continue;
                Decomposition d = full_decompose(m, n, L);
                CHECK(validate_coloring(d));
                int sm = 0, sn = 0;
                for (const auto& p : d.parts) {
                    sm += p.m_sub * p.multiplicity;
                    sn += p.n_sub * p.multiplicity;
                    CHECK(std::abs(p.n_sub - p.m_sub) == 1);
                }
                CHECK(sm == m);
                CHECK(sn == n);
                // identical rule at every node
                for (std::size_t node = 1; node < d.coloring.color.size(); ++node) {
                    CHECK(d.coloring.color[node] == d.coloring.color[0]);
                    CHECK(d.coloring.sublevel[node] == d.coloring.sublevel[0]);
                }
            }
}
