#pragma once

// Overpartitions, Gordon markings, left clusters, cluster parities, and the
// counting families (B, A, C, D, O, OverO) plus the trivariate statistic T.

#include <string>
#include <vector>

namespace overpath {

enum class Parity { Even, Odd };

struct Part {
    int value = 0;
    bool overlined = false;
    bool operator==(const Part&) const = default;
};

// Canonical storage: weakly decreasing values; among equal values the
// overlined copy is listed first (the paper's printed order, e.g. 8̄,8,8).
struct Overpartition {
    std::vector<Part> parts;

    bool operator==(const Overpartition&) const = default;
    int weight() const;
    bool contains_overlined(int value) const;
    // V(l): number of overlined parts with value <= l.
    int V(int l) const;

    std::string to_text() const;                    // e.g. "8~,8,8,7"
    static Overpartition from_text(const std::string& s);
};

std::vector<Overpartition> enumerate_overpartitions(int n);

struct MarkedPart {
    Part part;
    int mark = 0;  // 1-based
    bool operator==(const MarkedPart&) const = default;
};

// Parts ascending in the order 1̄ < 1 < 2̄ < 2 < ..., each with its mark.
struct GordonMarking {
    std::vector<MarkedPart> parts;
    int max_mark() const;
    // N_r: the number of r-marked parts.
    int N(int r) const;
};

GordonMarking gordon_mark(const Overpartition& lambda);

// An r-cluster: one j-marked part for j = 1..r, values weakly increasing with
// consecutive steps <= 1; l is the value of its 1-marked part.
struct Cluster {
    std::vector<MarkedPart> members;  // ordered by mark 1..r
    int r() const { return static_cast<int>(members.size()); }
    int l() const { return members.front().part.value; }
    bool has_overlined() const;
    int even_count() const;  // members with even value
    int odd_count() const;
};

// Left-to-right decomposition into maximal clusters.
std::vector<Cluster> left_clusters(const GordonMarking& marking);

// Parity of a cluster: opposite to the parity of (#even members - V(l)).
Parity cluster_parity(const Cluster& c, int V_at_l);

enum class OverpartitionFamily { B, A, C, D, O, OverO };
OverpartitionFamily overpartition_family_from_string(const std::string& s);

bool in_family(const Overpartition& lambda, OverpartitionFamily f, int k, int a);

long long count_overpartitions(OverpartitionFamily f, int k, int a, int n);

// Sum over r of the lower even r-cluster parity indices: for each r, the
// number of times the parity changes along the r-clusters read left to right,
// measured against a virtual initial parity that is even iff the leftmost
// cluster of the whole overpartition has an overlined part. Per-r values are
// returned for diagnostics.
struct ParityIndexBreakdown {
    std::vector<int> per_r;  // index 0 -> r = 1
    int full = 0;
};
ParityIndexBreakdown full_lower_even_cluster_parity_index(const Overpartition& lambda, int k);

// #{lambda in B̄_{k,k}(n) : m parts, full lower even cluster parity index l}.
long long count_T(int k, int l, int m, int n);

}  // namespace overpath
