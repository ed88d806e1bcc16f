#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "overpath/bijection.hpp"
#include "overpath/lattice_path.hpp"

using namespace overpath;

namespace {

BuildSpec worked_example() {
    // k=4, a=1, peak profile n=(1,1,5), moves mu3=(7,3,3,3,0), mu2=(5),
    // mu1=(6), overline shifts beta=(6,2,1), leftmost peak NSE.
    BuildSpec s;
    s.k = 4;
    s.a = 1;
    s.n = {1, 1, 5};
    s.mu = {{6}, {5}, {7, 3, 3, 3, 0}};
    s.beta = {6, 2, 1};
    s.leftmost = PeakKind::NSE;
    return s;
}

std::multiset<int> rel_multiset(const LatticePath& p) {
    const auto rh = relative_heights(p);
    return {rh.begin(), rh.end()};
}

}  // namespace

TEST_CASE("golden build: worked example") {
    const BuildSpec s = worked_example();
    std::vector<TraceEntry> trace;
    const LatticePath p = build_path(s, &trace);

    // intermediate major indices along the construction
    const std::vector<int> want_majors = {0,  15, 20,  27,  30,  33,  36, 61, 67,
                                          73, 78, 114, 121, 127, 133, 135, 136};
    REQUIRE(trace.size() == want_majors.size());
    for (std::size_t i = 0; i < trace.size(); ++i)
        CHECK(major_index(trace[i].path) == want_majors[i]);

    CHECK(major_index(p) == 136);
    const auto pk = annotated_peaks(p);
    REQUIRE(pk.size() == 7);
    const int want_x[] = {5, 9, 13, 18, 23, 29, 39};
    for (int i = 0; i < 7; ++i) CHECK(pk[i].x == want_x[i]);
    CHECK(std::count_if(pk.begin(), pk.end(),
                        [](const Peak& q) { return !q.nese; }) == 4);
    CHECK(rel_multiset(p) == std::multiset<int>{1, 2, 3, 3, 3, 3, 3});

    // the inverse map recovers the build parameters exactly
    CHECK(decompose_path(p) == s);
}

TEST_CASE("elementary operations") {
    // inserting c fresh peaks at the start creates majors 1 + 2 + ... + c
    LatticePath p{4, 3, {}};
    p = insert_nse_peaks(p, 5, 1);
    CHECK(major_index(p) == 15);
    CHECK(peaks(p).size() == 5);
    // an SE step at the start shifts every peak weight by one
    const int before = major_index(p);
    p = insert_se_step(p);
    CHECK(major_index(p) == before + 5);
    CHECK(p.a == 2);  // start height rose by one
    // count = 0 insert is the identity
    CHECK(insert_nse_peaks(p, 0, 2) == p);
}

TEST_CASE("operation laws over all small paths") {
    // over all valid paths with major index <= 10, k <= 3
    for (int k = 2; k <= 3; ++k)
        for (int a = 1; a <= k; ++a)
            for (int n = 0; n <= 10; ++n)
                for (const auto& p : enumerate_paths(k, a, n)) {
                    const auto pk = peaks(p);
                    const int s = static_cast<int>(pk.size());
                    // volcanic uplift adds s^2 to the major index and raises
                    // every relative height by one (when headroom allows)
                    bool headroom = s > 0;
                    for (const auto& q : annotated_peaks(p))
                        if (q.y >= k - 1 || q.rel_height >= k - 1) headroom = false;
                    if (headroom) {
                        const LatticePath up = volcanic_uplift(p);
                        CHECK(major_index(up) == n + s * s);
                        auto want = relative_heights(p);
                        for (int& h : want) ++h;
                        CHECK(relative_heights(up) == want);
                    }
                }
}

TEST_CASE("dilations and reductions") {
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : enumerate_paths(3, 2, n)) {
            const auto pk = peaks(p);
            const bool has_nse =
                std::any_of(pk.begin(), pk.end(), [](const Peak& q) { return !q.nese; });
            if (has_nse) {
                LatticePath d;
                try {
                    d = dilation_A(p);
                } catch (const std::exception&) {
                    continue;  // rightmost NSE not eligible on this path
                }
                CHECK(major_index(d) == n + 1);
                CHECK(reduction_A(d) == p);
            }
        }
}

TEST_CASE("moves preserve the relative-height multiset") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_paths(3, 1, n)) {
            // the move is defined on paths whose peaks are all NSE except
            // possibly the leftmost
            const auto pk = peaks(p);
            bool in_domain = true;
            for (std::size_t i = 1; i < pk.size(); ++i)
                if (pk[i].nese) in_domain = false;
            if (!in_domain) continue;
            const auto rh = relative_heights(p);
            // find the leftmost relative-height-1 peak, if any
            int target = -1;
            for (std::size_t i = 0; i < rh.size(); ++i)
                if (rh[i] == 1) { target = static_cast<int>(i); break; }
            if (target < 0) continue;
            LatticePath moved;
            try {
                moved = move_peak_right(p, target, 2);
            } catch (const std::exception&) {
                continue;  // move not applicable on this configuration
            }
            CHECK(rel_multiset(moved) == rel_multiset(p));
            CHECK(major_index(moved) == n + 2);
        }
}

TEST_CASE("build inverts decompose on every small path") {
    long long total = 0;
    for (int k = 2; k <= 4; ++k)
        for (int a = 1; a <= k; ++a)
            for (int n = 0; n <= (k == 4 ? 7 : 10); ++n)
                for (const auto& p : enumerate_paths(k, a, n)) {
                    ++total;
                    const BuildSpec s = decompose_path(p);
                    CHECK(build_path(s) == p);
                }
    CHECK(total > 1000);
}

TEST_CASE("build spec validation") {
    BuildSpec s = worked_example();
    s.n = {1, 1};  // wrong length for k=4
    CHECK_THROWS(build_path(s));
    s = worked_example();
    s.mu[2] = {3, 7, 3, 3, 0};  // not weakly decreasing
    CHECK_THROWS(build_path(s));
}
