#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "overpath/overpartition.hpp"

using namespace overpath;

TEST_CASE("text form round trip") {
    const auto lam = Overpartition::from_text("8~,8,8,7");
    CHECK(lam.parts.size() == 4);
    CHECK(lam.parts[0].value == 8);
    CHECK(lam.parts[0].overlined);
    CHECK_FALSE(lam.parts[1].overlined);
    CHECK(lam.to_text() == "8~,8,8,7");
    CHECK(lam.weight() == 31);
    CHECK(Overpartition{}.to_text() == "");
    CHECK(Overpartition::from_text("") == Overpartition{});
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_overpartitions(0).size() == 1);
    CHECK(enumerate_overpartitions(1).size() == 2);   // 1, 1~
    CHECK(enumerate_overpartitions(3).size() == 8);
    // canonical forms are pairwise distinct
    const auto all = enumerate_overpartitions(6);
    std::set<std::string> texts;
    for (const auto& lam : all) texts.insert(lam.to_text());
    CHECK(texts.size() == all.size());
}

TEST_CASE("Gordon marking: worked example") {
    const auto lam = Overpartition::from_text(
        "16,13,12,12,11,10~,8~,8,8,7,6~,6,5,5,4~,2,2,1~");
    const auto gm = gordon_mark(lam);
    // expected pairs (value, overlined, mark) in ascending order
    const std::vector<std::tuple<int, bool, int>> want = {
        {1, true, 1},  {2, false, 2}, {2, false, 3}, {4, true, 1},
        {5, false, 2}, {5, false, 3}, {6, true, 1},  {6, false, 2},
        {7, false, 3}, {8, true, 1},  {8, false, 2}, {8, false, 3},
        {10, true, 1}, {11, false, 2}, {12, false, 1}, {12, false, 3},
        {13, false, 2}, {16, false, 1}};
    REQUIRE(gm.parts.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(gm.parts[i].part.value == std::get<0>(want[i]));
        CHECK(gm.parts[i].part.overlined == std::get<1>(want[i]));
        CHECK(gm.parts[i].mark == std::get<2>(want[i]));
    }
    CHECK(gm.max_mark() == 3);
    CHECK(gm.N(1) == 7);

    const auto cl = left_clusters(gm);
    REQUIRE(cl.size() == 7);
    const std::vector<std::pair<int, int>> want_cl = {
        {3, 1}, {3, 4}, {3, 6}, {3, 8}, {3, 10}, {2, 12}, {1, 16}};
    for (std::size_t i = 0; i < want_cl.size(); ++i) {
        CHECK(cl[i].r() == want_cl[i].first);
        CHECK(cl[i].l() == want_cl[i].second);
    }
}

TEST_CASE("Gordon marking: small cases") {
    // single part gets mark 1
    const auto gm1 = gordon_mark(Overpartition::from_text("5"));
    REQUIRE(gm1.parts.size() == 1);
    CHECK(gm1.parts[0].mark == 1);
    // (2,2,1~): 1~ -> 1, the two 2s -> 2 and 3
    const auto gm2 = gordon_mark(Overpartition::from_text("2,2,1~"));
    REQUIRE(gm2.parts.size() == 3);
    CHECK(gm2.parts[0].mark == 1);  // 1~
    CHECK(gm2.parts[1].mark == 2);
    CHECK(gm2.parts[2].mark == 3);
    // every overlined part gets mark 1
    for (const auto& lam : enumerate_overpartitions(7))
        for (const auto& mp : gordon_mark(lam).parts)
            if (mp.part.overlined) CHECK(mp.mark == 1);
    // (2~,2,2) is one 3-cluster C3(2)
    const auto cl = left_clusters(gordon_mark(Overpartition::from_text("2~,2,2")));
    REQUIRE(cl.size() == 1);
    CHECK(cl[0].r() == 3);
    CHECK(cl[0].l() == 2);
}

TEST_CASE("cluster parity") {
    // cluster (1~,2,2) with V(1)=1: #even=2, 2-1 odd -> parity even
    const auto lam = Overpartition::from_text("2,2,1~");
    const auto cl = left_clusters(gordon_mark(lam));
    REQUIRE(cl.size() == 1);
    CHECK(cl[0].even_count() == 2);
    CHECK(cluster_parity(cl[0], lam.V(cl[0].l())) == Parity::Even);
    // single odd part with V(l)=0: #even=0 -> parity odd
    const auto lam2 = Overpartition::from_text("3");
    const auto cl2 = left_clusters(gordon_mark(lam2));
    CHECK(cluster_parity(cl2[0], 0) == Parity::Odd);
    // relation: parity(sum of members - r) == parity(#even members)
    for (const auto& l : enumerate_overpartitions(8))
        for (const auto& c : left_clusters(gordon_mark(l))) {
            int sum = 0;
            for (const auto& mp : c.members) sum += mp.part.value;
            CHECK(((sum - c.r()) % 2 + 2) % 2 == c.even_count() % 2);
        }
}

TEST_CASE("counting families") {
    CHECK(count_overpartitions(OverpartitionFamily::B, 2, 1, 3) == 3);
    CHECK(count_overpartitions(OverpartitionFamily::A, 2, 1, 3) == 3);
    CHECK(count_overpartitions(OverpartitionFamily::B, 3, 2, 0) == 1);
    CHECK(count_overpartitions(OverpartitionFamily::B, 4, 4, 0) == 1);
    // members of B(2,1,3) = {3, 3~, 2~+1~}; of A(2,1,3) = {3~, 2+1~, 2~+1~}
    std::set<std::string> b_members, a_members;
    for (const auto& lam : enumerate_overpartitions(3)) {
        if (in_family(lam, OverpartitionFamily::B, 2, 1)) b_members.insert(lam.to_text());
        if (in_family(lam, OverpartitionFamily::A, 2, 1)) a_members.insert(lam.to_text());
    }
    CHECK(b_members == std::set<std::string>{"3", "3~", "2~,1~"});
    CHECK(a_members == std::set<std::string>{"3~", "2,1~", "2~,1~"});
}

TEST_CASE("full lower even cluster parity index") {
    CHECK(full_lower_even_cluster_parity_index(Overpartition{}, 3).full == 0);
    // single cluster: index 1 iff its parity differs from the virtual start
    for (const auto& lam : enumerate_overpartitions(5)) {
        const auto cl = left_clusters(gordon_mark(lam));
        if (cl.size() != 1 || cl[0].r() > 2) continue;
        const Parity start = cl[0].has_overlined() ? Parity::Even : Parity::Odd;
        const Parity got = cluster_parity(cl[0], lam.V(cl[0].l()));
        const int idx = full_lower_even_cluster_parity_index(lam, 3).full;
        CHECK(idx == (got != start ? 1 : 0));
    }
}

TEST_CASE("trivariate statistic T") {
    CHECK(count_T(3, 0, 0, 0) == 1);
    // the statistic partitions B(k,k,n)
    for (int k = 2; k <= 3; ++k)
        for (int n = 0; n <= 8; ++n) {
            long long total = 0;
            for (int m = 0; m <= n; ++m)
                for (int l = 0; l <= m; ++l) total += count_T(k, l, m, n);
            CHECK(total == count_overpartitions(OverpartitionFamily::B, k, k, n));
        }
}
