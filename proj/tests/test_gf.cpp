#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "overpath/gf.hpp"
#include "overpath/lattice_path.hpp"
#include "overpath/overpartition.hpp"

using namespace overpath;

TEST_CASE("sum side: basics") {
    CHECK(gf_sum(Identity::AB, 2, 1, 0)[0] == 1);
    CHECK(gf_sum(Identity::AB, 2, 1, 3)[3] == 3);
    // constant term is 1 for every identity and admissible (k, a)
    for (int k = 2; k <= 4; ++k) {
        for (int a = 1; a <= k; ++a) CHECK(gf_sum(Identity::AB, k, a, 0)[0] == 1);
        for (int a = 1; a <= k - 1; ++a)
            for (Identity id : {Identity::D, Identity::H, Identity::J,
                                Identity::O, Identity::OverO})
                CHECK(gf_sum(id, k, a, 0)[0] == 1);
    }
}

TEST_CASE("product side: basics") {
    CHECK(gf_prod(Identity::AB, 2, 1, 3)[3] == 3);
    for (int k = 2; k <= 4; ++k)
        for (int a = 1; a <= k; ++a) CHECK(gf_prod(Identity::AB, k, a, 0)[0] == 1);
}

TEST_CASE("sum equals product") {
    CHECK(gf_sum(Identity::D, 3, 2, 12) == gf_prod(Identity::D, 3, 2, 12));
    CHECK(gf_sum(Identity::D, 3, 1, 12) == gf_prod(Identity::D, 3, 1, 12));
    CHECK(gf_sum(Identity::AB, 3, 2, 12) == gf_prod(Identity::AB, 3, 2, 12));
    CHECK(gf_sum(Identity::AB, 4, 4, 10) == gf_prod(Identity::AB, 4, 4, 10));
}

TEST_CASE("sum side matches brute-force counts") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(gf_sum(Identity::J, 3, 1, 10)[n] ==
              count_overpartitions(OverpartitionFamily::O, 3, 1, n));
        CHECK(gf_sum(Identity::OverO, 3, 2, 10)[n] ==
              count_overpartitions(OverpartitionFamily::OverO, 3, 2, n));
    }
}

TEST_CASE("trivariate series") {
    const TriSeries g = gf_gt(3, 10);
    CHECK(g.coeff(0, 0, 0) == 1);
    // each y and each x carries at least one q
    for (const auto& [key, c] : g.terms()) {
        const auto& [l, m, n] = key;
        if (n >= 1) {
            CHECK(l <= m);
            CHECK(m <= n);
        }
        CHECK(c > 0);
    }
    // y = x = 1 specialization counts the full family B(k,k,n)
    const Series spec = g.specialize(10);
    CHECK(spec == gf_sum(Identity::AB, 3, 3, 10));
    // desk-scale triple check at one point
    CHECK(g.coeff(1, 2, 5) == count_G(3, 1, 2, 5));
    CHECK(g.coeff(1, 2, 5) == count_T(3, 1, 2, 5));
}

TEST_CASE("argument validation") {
    CHECK_THROWS(gf_sum(Identity::AB, 1, 1, 5));
    CHECK_THROWS(gf_sum(Identity::AB, 3, 0, 5));
    CHECK_THROWS(gf_sum(Identity::AB, 3, 4, 5));
    CHECK_THROWS(gf_sum(Identity::D, 3, 3, 5));
    CHECK_THROWS(identity_from_string("nope"));
}
