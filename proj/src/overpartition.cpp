#include "overpath/overpartition.hpp"

#include "overpath/budget.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace overpath {

int Overpartition::weight() const {
    int w = 0;
    for (const auto& p : parts) w += p.value;
    return w;
}

bool Overpartition::contains_overlined(int value) const {
    for (const auto& p : parts)
        if (p.overlined && p.value == value) return true;
    return false;
}

int Overpartition::V(int l) const {
    int v = 0;
    for (const auto& p : parts)
        if (p.overlined && p.value <= l) ++v;
    return v;
}

std::string Overpartition::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i].value;
        if (parts[i].overlined) os << "~";
    }
    return os.str();
}

Overpartition Overpartition::from_text(const std::string& s) {
    Overpartition lam;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("overpartition: empty token");
        Part p;
        if (tok.back() == '~') {
            p.overlined = true;
            tok.pop_back();
        }
        p.value = std::stoi(tok);
        if (p.value <= 0) throw std::invalid_argument("overpartition: parts must be positive");
        lam.parts.push_back(p);
    }
    // canonicalize: descending by value, overlined first among equals
    std::stable_sort(lam.parts.begin(), lam.parts.end(), [](const Part& a, const Part& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.overlined && !b.overlined;
    });
    for (std::size_t i = 1; i < lam.parts.size(); ++i)
        if (lam.parts[i].overlined && lam.parts[i].value == lam.parts[i - 1].value &&
            lam.parts[i - 1].overlined)
            throw std::invalid_argument("overpartition: repeated overlined value");
    return lam;
}

std::vector<Overpartition> enumerate_overpartitions(int n) {
    std::vector<Overpartition> out;
    Overpartition cur;
    // Choose distinct values descending; for each value pick a multiplicity
    // and whether its first copy is overlined.
    auto rec = [&](auto&& self, int remaining, int max_value) -> void {
        charge_node();
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(remaining, max_value); v >= 1; --v) {
            for (int mult = 1; mult * v <= remaining; ++mult) {
                for (int over = 1; over >= 0; --over) {
                    // 'over' copies are overlined (0 or 1), the rest plain.
                    const std::size_t base = cur.parts.size();
                    if (over) cur.parts.push_back({v, true});
                    for (int i = over; i < mult; ++i) cur.parts.push_back({v, false});
                    self(self, remaining - mult * v, v - 1);
                    cur.parts.resize(base);
                }
            }
        }
    };
    rec(rec, n, n);
    return out;
}

int GordonMarking::max_mark() const {
    int m = 0;
    for (const auto& p : parts) m = std::max(m, p.mark);
    return m;
}

int GordonMarking::N(int r) const {
    int c = 0;
    for (const auto& p : parts)
        if (p.mark == r) ++c;
    return c;
}

GordonMarking gordon_mark(const Overpartition& lambda) {
    // ascending order 1̄ < 1 < 2̄ < 2 < ...
    std::vector<Part> asc = lambda.parts;
    std::sort(asc.begin(), asc.end(), [](const Part& a, const Part& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.overlined && !b.overlined;
    });

    GordonMarking gm;
    for (const Part& p : asc) {
        std::set<int> forbidden;
        int prev_min = 0;  // smallest mark among parts of value p.value - 1
        for (const auto& mp : gm.parts) {
            if (mp.part.value == p.value) forbidden.insert(mp.mark);
            if (mp.part.value == p.value - 1) {
                forbidden.insert(mp.mark);
                if (prev_min == 0 || mp.mark < prev_min) prev_min = mp.mark;
            }
        }
        // Relaxation: when the overlined copy of this value is in lambda, the
        // smallest mark used at value-1 may be reused at this value.
        if (prev_min != 0 && lambda.contains_overlined(p.value)) {
            bool reused_at_same_value = false;
            for (const auto& mp : gm.parts)
                if (mp.part.value == p.value && mp.mark == prev_min) reused_at_same_value = true;
            if (!reused_at_same_value) forbidden.erase(prev_min);
        }
        int mark = 1;
        while (forbidden.count(mark)) ++mark;
        gm.parts.push_back({p, mark});
    }
    return gm;
}

bool Cluster::has_overlined() const {
    for (const auto& mp : members)
        if (mp.part.overlined) return true;
    return false;
}

int Cluster::even_count() const {
    int c = 0;
    for (const auto& mp : members)
        if (mp.part.value % 2 == 0) ++c;
    return c;
}

int Cluster::odd_count() const { return r() - even_count(); }

namespace {

// Longest chain extension starting after 'cur' at mark 'mark', choosing among
// unused parts of value cur or cur+1 ("making the clusters as long as
// possible"). Returns the chosen indices (into marking.parts).
std::vector<std::size_t> longest_chain(const GordonMarking& gm, const std::vector<bool>& used,
                                       int cur, int mark) {
    std::vector<std::size_t> best;
    for (int dv = 0; dv <= 1; ++dv) {
        for (std::size_t i = 0; i < gm.parts.size(); ++i) {
            if (used[i]) continue;
            const auto& mp = gm.parts[i];
            if (mp.mark != mark || mp.part.value != cur + dv) continue;
            std::vector<bool> used2 = used;
            used2[i] = true;
            std::vector<std::size_t> rest = longest_chain(gm, used2, cur + dv, mark + 1);
            rest.insert(rest.begin(), i);
            if (rest.size() > best.size()) best = rest;
            break;  // at most one candidate per (value, mark)
        }
    }
    return best;
}

}  // namespace

std::vector<Cluster> left_clusters(const GordonMarking& gm) {
    std::vector<bool> used(gm.parts.size(), false);
    std::vector<Cluster> clusters;
    for (;;) {
        // smallest unused 1-marked part (parts are stored ascending)
        std::size_t start = gm.parts.size();
        for (std::size_t i = 0; i < gm.parts.size(); ++i)
            if (!used[i] && gm.parts[i].mark == 1) {
                start = i;
                break;
            }
        if (start == gm.parts.size()) break;
        used[start] = true;
        std::vector<std::size_t> chain =
            longest_chain(gm, used, gm.parts[start].part.value, 2);
        Cluster c;
        c.members.push_back(gm.parts[start]);
        for (std::size_t idx : chain) {
            used[idx] = true;
            c.members.push_back(gm.parts[idx]);
        }
        clusters.push_back(std::move(c));
    }
    // Sanity: everything 1-marked consumed; non-1-marked parts must be, too.
    for (std::size_t i = 0; i < gm.parts.size(); ++i)
        if (!used[i])
            throw std::logic_error("left_clusters: part not covered by any cluster");
    return clusters;
}

Parity cluster_parity(const Cluster& c, int V_at_l) {
    const int d = c.even_count() - V_at_l;
    // parity is *opposite* to the parity of (#even - V(l))
    return (((d % 2) + 2) % 2 == 0) ? Parity::Odd : Parity::Even;
}

OverpartitionFamily overpartition_family_from_string(const std::string& s) {
    if (s == "B") return OverpartitionFamily::B;
    if (s == "A") return OverpartitionFamily::A;
    if (s == "C") return OverpartitionFamily::C;
    if (s == "D") return OverpartitionFamily::D;
    if (s == "O") return OverpartitionFamily::O;
    if (s == "OverO") return OverpartitionFamily::OverO;
    throw std::invalid_argument("unknown overpartition family: " + s);
}

namespace {

bool in_B(const Overpartition& lam, int k, int a) {
    int plain_ones = 0;
    for (const auto& p : lam.parts)
        if (!p.overlined && p.value == 1) ++plain_ones;
    if (plain_ones > a - 1) return false;
    const auto& ps = lam.parts;  // canonical descending
    for (std::size_t j = 0; j + static_cast<std::size_t>(k) - 1 < ps.size(); ++j) {
        const int need = ps[j].overlined ? 1 : 2;
        if (ps[j].value - ps[j + static_cast<std::size_t>(k) - 1].value < need) return false;
    }
    return true;
}

bool in_A(const Overpartition& lam, int k, int a) {
    if (a == k) {
        for (const auto& p : lam.parts)
            if (p.value % k == 0) return false;
        return true;
    }
    const int mod = 2 * k;
    for (const auto& p : lam.parts) {
        if (p.overlined) continue;
        const int r = p.value % mod;
        if (r == 0 || r == a % mod || r == (mod - a) % mod) return false;
    }
    return true;
}

bool in_C(const Overpartition& lam, int k, int a) {
    const int mod = 2 * k - 1;
    for (const auto& p : lam.parts) {
        if (p.overlined) continue;
        const int r = p.value % mod;
        if (r == 0 || r == a % mod || r == (mod - a) % mod) return false;
    }
    return true;
}

bool in_D(const Overpartition& lam, int k, int a) {
    int maxv = 0;
    std::map<int, int> plain, over;
    for (const auto& p : lam.parts) {
        maxv = std::max(maxv, p.value);
        (p.overlined ? over : plain)[p.value] += 1;
    }
    if (plain[1] > a - 1) return false;
    for (int l = 1; l <= maxv; ++l) {
        const int fl = plain.count(l) ? plain[l] : 0;
        const int flo = over.count(l) ? over[l] : 0;
        const int fl1 = plain.count(l + 1) ? plain[l + 1] : 0;
        const int total = fl + flo + fl1;
        if (total > k - 1) return false;
        if (total == k - 1) {
            const int lhs = l * fl + l * flo + (l + 1) * fl1;
            const int rhs = lam.V(l) + a - 1;
            if (((lhs - rhs) % 2 + 2) % 2 != 0) return false;
        }
    }
    return true;
}

// O: every cluster has odd parity; OverO: every cluster has (#odd - V(l)) even
// (equivalently: odd-length clusters even-parity, even-length odd-parity).
bool cluster_predicate(const Overpartition& lam, int k, int a, bool want_all_odd) {
    if (!in_B(lam, k, a)) return false;
    const auto clusters = left_clusters(gordon_mark(lam));
    for (const auto& c : clusters) {
        const Parity par = cluster_parity(c, lam.V(c.l()));
        if (want_all_odd) {
            if (par != Parity::Odd) return false;
        } else {
            const bool formulation1 = ((c.odd_count() - lam.V(c.l())) % 2 + 2) % 2 == 0;
            const bool formulation2 =
                (c.r() % 2 == 1) ? (par == Parity::Even) : (par == Parity::Odd);
            if (formulation1 != formulation2)
                throw std::logic_error("OverO: the two predicate formulations disagree");
            if (!formulation1) return false;
        }
    }
    return true;
}

}  // namespace

bool in_family(const Overpartition& lam, OverpartitionFamily f, int k, int a) {
    switch (f) {
        case OverpartitionFamily::B: return in_B(lam, k, a);
        case OverpartitionFamily::A: return in_A(lam, k, a);
        case OverpartitionFamily::C: return in_C(lam, k, a);
        case OverpartitionFamily::D: return in_D(lam, k, a);
        case OverpartitionFamily::O: return cluster_predicate(lam, k, a, true);
        case OverpartitionFamily::OverO: return cluster_predicate(lam, k, a, false);
    }
    return false;
}

long long count_overpartitions(OverpartitionFamily f, int k, int a, int n) {
    if (k < 2) throw std::invalid_argument("count_overpartitions: k must be >= 2");
    const int a_hi = (f == OverpartitionFamily::B || f == OverpartitionFamily::A) ? k : k - 1;
    if (a < 1 || a > a_hi) throw std::invalid_argument("count_overpartitions: a out of range");
    long long c = 0;
    for (const auto& lam : enumerate_overpartitions(n))
        if (in_family(lam, f, k, a)) ++c;
    return c;
}

ParityIndexBreakdown full_lower_even_cluster_parity_index(const Overpartition& lam, int k) {
    ParityIndexBreakdown out;
    out.per_r.assign(static_cast<std::size_t>(std::max(k - 1, 0)), 0);
    const auto clusters = left_clusters(gordon_mark(lam));
    if (clusters.empty()) return out;
    const Parity start =
        clusters.front().has_overlined() ? Parity::Even : Parity::Odd;
    for (int r = 1; r <= k - 1; ++r) {
        Parity prev = start;
        int idx = 0;
        for (const auto& c : clusters) {
            if (c.r() != r) continue;
            const Parity cur = cluster_parity(c, lam.V(c.l()));
            if (cur != prev) ++idx;
            prev = cur;
        }
        out.per_r[static_cast<std::size_t>(r - 1)] = idx;
        out.full += idx;
    }
    return out;
}

long long count_T(int k, int l, int m, int n) {
    long long c = 0;
    for (const auto& lam : enumerate_overpartitions(n)) {
        if (!in_B(lam, k, k)) continue;
        if (static_cast<int>(lam.parts.size()) != m) continue;
        if (full_lower_even_cluster_parity_index(lam, k).full == l) ++c;
    }
    return c;
}

}  // namespace overpath
