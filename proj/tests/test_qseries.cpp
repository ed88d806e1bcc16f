#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "overpath/qseries.hpp"

using namespace overpath;

namespace {

// Independent brute-force oracles: count partitions / overpartitions of n by
// explicit recursion over (remaining, largest allowed part).
long long partitions_brute(int rem, int maxv) {
    if (rem == 0) return 1;
    long long c = 0;
    for (int v = std::min(rem, maxv); v >= 1; --v) c += partitions_brute(rem - v, v);
    return c;
}

long long overpartitions_brute(int rem, int maxv) {
    if (rem == 0) return 1;
    long long c = 0;
    for (int v = std::min(rem, maxv); v >= 1; --v)
        for (int mult = 1; mult * v <= rem; ++mult)
            // first copy of v overlined or not
            c += 2 * overpartitions_brute(rem - mult * v, v - 1);
    return c;
}

Series from_coeffs(const std::vector<long long>& cs) {
    Series s(static_cast<int>(cs.size()) - 1);
    for (std::size_t i = 0; i < cs.size(); ++i) s.at(static_cast<int>(i)) = cs[i];
    return s;
}

}  // namespace

TEST_CASE("finite Pochhammer symbols") {
    CHECK(poch_finite(-1, 1, 0, 10) == Series::one(10));
    // (-q;q)_2 = (1+q)(1+q^2) = 1 + q + q^2 + q^3
    CHECK(poch_finite(-1, 1, 2, 10) == from_coeffs({1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0}));
    // single factor (q;q)_1 = 1 - q
    CHECK(poch_finite(1, 1, 1, 3) == from_coeffs({1, -1, 0, 0}));
    CHECK_THROWS(poch_finite(2, 1, 1, 3));
}

TEST_CASE("infinite Pochhammer symbols") {
    // 1/(q;q)_inf: partition numbers 1,1,2,3,5,7
    CHECK(poch_inf(1, 1, 1, 5).inverse() == from_coeffs({1, 1, 2, 3, 5, 7}));
    // (-q;q)_inf: partitions into distinct parts 1,1,1,2
    CHECK(poch_inf(-1, 1, 1, 3) == from_coeffs({1, 1, 1, 2}));
    // no factor with exponent <= 1
    CHECK(poch_inf(1, 2, 2, 1) == Series::one(1));
    CHECK_THROWS(poch_inf(1, 0, 1, 5));
}

TEST_CASE("ring operations") {
    const int T = 8;
    const Series f = from_coeffs({1, -1, 0, 0, 0, 0, 0, 0, 0});  // 1 - q
    CHECK(f * f.inverse() == Series::one(T));
    // (1+q) + (1-q) = 2
    Series g = from_coeffs({1, 1, 0, 0, 0, 0, 0, 0, 0});
    CHECK((g + f)[0] == 2);
    CHECK((g + f)[1] == 0);
    // associativity / commutativity / distributivity on small fixed series
    const Series h = from_coeffs({2, 0, 3, 0, 0, 1, 0, 0, 0});
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    // monomial and truncation behavior
    CHECK(Series::monomial(5, 3, 8)[3] == 5);
    CHECK(Series::monomial(5, 9, 8) == Series(8));
}

TEST_CASE("canonical text form") {
    CHECK(Series::one(4).to_string() == "1");
    Series s = from_coeffs({1, 2, 0, -1});
    CHECK(s.to_string() == "1 + 2*q - 1*q^3");
}

TEST_CASE("partition numbers to n = 30") {
    const int N = 30;
    const Series p = poch_inf(1, 1, 1, N).inverse();
    for (int n = 0; n <= N; ++n)
        CHECK(p[n] == partitions_brute(n, n));
    CHECK(p[30] == 5604);
}

TEST_CASE("overpartition numbers to n = 30") {
    const int N = 30;
    const Series op = (poch_inf(-1, 1, 1, N) * poch_inf(1, 1, 1, N).inverse()).truncated(N);
    for (int n = 0; n <= N; ++n)
        CHECK(op[n] == overpartitions_brute(n, n));
    // spot values: 1, 2, 4, 8, 14 ...
    CHECK(op[1] == 2);
    CHECK(op[2] == 4);
    CHECK(op[3] == 8);
    CHECK(op[4] == 14);
}
