#include "overpath/lattice_path.hpp"

#include "overpath/budget.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace overpath {

char step_letter(StepKind s) {
    switch (s) {
        case StepKind::NE: return 'u';
        case StepKind::SE: return 'd';
        case StepKind::N: return 'n';
        case StepKind::E: return 'e';
    }
    return '?';
}

StepKind step_from_letter(char c) {
    switch (c) {
        case 'u': return StepKind::NE;
        case 'd': return StepKind::SE;
        case 'n': return StepKind::N;
        case 'e': return StepKind::E;
    }
    throw std::invalid_argument(std::string("unknown step letter: ") + c);
}

std::vector<std::pair<int, int>> LatticePath::vertices() const {
    std::vector<std::pair<int, int>> v;
    v.reserve(steps.size() + 1);
    int x = 0, y = start_height();
    v.emplace_back(x, y);
    for (StepKind s : steps) {
        switch (s) {
            case StepKind::NE: ++x, ++y; break;
            case StepKind::SE: ++x, --y; break;
            case StepKind::N: ++y; break;
            case StepKind::E: ++x; break;
        }
        v.emplace_back(x, y);
    }
    return v;
}

std::string LatticePath::to_text() const {
    std::ostringstream os;
    os << "k=" << k << ",a=" << a << ":";
    for (StepKind s : steps) os << step_letter(s);
    return os.str();
}

LatticePath LatticePath::from_text(const std::string& s) {
    LatticePath p;
    int consumed = 0;
    if (std::sscanf(s.c_str(), "k=%d,a=%d:%n", &p.k, &p.a, &consumed) != 2 || consumed == 0)
        throw std::invalid_argument("path text must start with 'k=K,a=A:'");
    for (std::size_t i = static_cast<std::size_t>(consumed); i < s.size(); ++i)
        p.steps.push_back(step_from_letter(s[i]));
    return p;
}

bool validate(const LatticePath& p, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (p.k < 2) return fail("k must be >= 2");
    if (p.a < 1 || p.a > p.k) return fail("a must lie in 1..k");
    int x = 0, y = p.start_height();
    StepKind last = StepKind::E;  // placeholder; guarded by 'first' below
    bool first = true;
    bool seen_non_ne = false;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const StepKind s = p.steps[i];
        if (!first && last == StepKind::N && s != StepKind::SE)
            return fail("N step not followed by SE at step " + std::to_string(i));
        switch (s) {
            case StepKind::NE: ++x, ++y; break;
            case StepKind::SE: ++x, --y; break;
            case StepKind::N:
                if (first) return fail("path starts with N (peak of weight 0)");
                if (last == StepKind::N) return fail("two consecutive N steps at " + std::to_string(i));
                if (!seen_non_ne)
                    return fail("N step preceded only by NE steps at step " + std::to_string(i));
                ++y;
                break;
            case StepKind::E:
                if (y != 0) return fail("E step off the x-axis at step " + std::to_string(i));
                ++x;
                break;
        }
        if (y < 0 || y > p.k - 1)
            return fail("height " + std::to_string(y) + " out of [0," + std::to_string(p.k - 1) +
                        "] at step " + std::to_string(i));
        if (s != StepKind::NE) seen_non_ne = true;
        last = s;
        first = false;
    }
    if (first) {
        if (p.start_height() != 0) return fail("empty path must start at height 0 (a=k)");
        return true;
    }
    if (last == StepKind::N) return fail("path ends with N");
    if (last != StepKind::SE) return fail("nonempty path must end with SE");
    if (y != 0) return fail("path does not end on the x-axis");
    return true;
}

std::vector<Peak> peaks(const LatticePath& p) {
    std::vector<Peak> out;
    int x = 0, y = p.start_height();
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const StepKind s = p.steps[i];
        const int px = x, py = y;  // vertex before this step
        switch (s) {
            case StepKind::NE: ++x, ++y; break;
            case StepKind::SE: ++x, --y; break;
            case StepKind::N: ++y; break;
            case StepKind::E: ++x; break;
        }
        if (s == StepKind::SE && i > 0) {
            const StepKind prev = p.steps[i - 1];
            if (prev == StepKind::N || prev == StepKind::NE)
                out.push_back(Peak{px, py, prev == StepKind::NE, 0});
        }
    }
    return out;
}

std::vector<int> relative_heights(const LatticePath& p) {
    const auto pk = peaks(p);
    const auto verts = p.vertices();

    std::vector<int> out;
    out.reserve(pk.size());
    for (const Peak& peak : pk) {
        int best = 0;
        for (int h = 1; h <= peak.y; ++h) {
            const int level = peak.y - h;
            // h is admissible when *some* pair of level vertices flanking the
            // peak spans a corridor free of higher peaks in which every
            // equal-height peak lies at or right of this one.
            bool ok_any = false;
            std::vector<int> lefts, rights;
            for (const auto& [vx, vy] : verts) {
                if (vy != level) continue;
                if (vx <= peak.x) lefts.push_back(vx);
                else rights.push_back(vx);
            }
            for (int lv : lefts) {
                for (int rv : rights) {
                    bool ok = true;
                    for (const Peak& q : pk) {
                        if (q.x <= lv || q.x >= rv) continue;
                        if (q.y > peak.y) { ok = false; break; }
                        if (q.y == peak.y && q.x < peak.x) { ok = false; break; }
                    }
                    if (ok) { ok_any = true; break; }
                }
                if (ok_any) break;
            }
            if (ok_any) best = h;
        }
        out.push_back(best);
    }
    return out;
}

std::vector<Peak> annotated_peaks(const LatticePath& p) {
    auto pk = peaks(p);
    const auto rh = relative_heights(p);
    for (std::size_t i = 0; i < pk.size(); ++i) pk[i].rel_height = rh[i];
    return pk;
}

int W(const LatticePath& p, int x) {
    int c = 0;
    for (const Peak& q : peaks(p))
        if (!q.nese && q.x <= x) ++c;
    return c;
}

int major_index(const LatticePath& p) {
    int m = 0;
    for (const Peak& q : peaks(p)) m += q.x;
    return m;
}

Parity peak_parity(const LatticePath& p, const Peak& peak) {
    const int t = peak.x - peak.rel_height - W(p, peak.x);
    return (((t % 2) + 2) % 2 == 0) ? Parity::Odd : Parity::Even;
}

PathParityIndexBreakdown parity_indices(const LatticePath& p) {
    PathParityIndexBreakdown out;
    out.per_r.assign(static_cast<std::size_t>(std::max(p.k - 1, 0)), 0);
    const auto pk = annotated_peaks(p);
    if (pk.empty()) return out;
    const Parity start = pk.front().nese ? Parity::Odd : Parity::Even;
    for (int r = 1; r <= p.k - 1; ++r) {
        Parity prev = start;
        int idx = 0;
        for (const Peak& q : pk) {
            if (q.rel_height != r) continue;
            const Parity cur = peak_parity(p, q);
            if (cur != prev) ++idx;
            prev = cur;
        }
        out.per_r[static_cast<std::size_t>(r - 1)] = idx;
        out.full += idx;
    }
    return out;
}

std::vector<LatticePath> enumerate_paths(int k, int a, int n) {
    if (k < 2 || a < 1 || a > k) throw std::invalid_argument("enumerate_paths: bad (k,a)");
    std::vector<LatticePath> out;
    LatticePath cur;
    cur.k = k;
    cur.a = a;

    std::function<void(int, int, int, bool)> rec = [&](int x, int y, int partial, bool seen_non_ne) {
        charge_node();
        const bool empty = cur.steps.empty();
        const StepKind last = empty ? StepKind::E : cur.steps.back();
        // record a completed path
        if (y == 0 && partial == n && (empty ? a == k : last == StepKind::SE))
            out.push_back(cur);
        const bool after_n = !empty && last == StepKind::N;
        // fixed generation order NE < SE < N < E for determinism
        if (!after_n && y + 1 <= k - 1 && partial + x + 1 <= n) {
            cur.steps.push_back(StepKind::NE);
            rec(x + 1, y + 1, partial, seen_non_ne);
            cur.steps.pop_back();
        }
        if (y - 1 >= 0) {
            const bool makes_peak = !empty && (last == StepKind::N || last == StepKind::NE);
            const int partial2 = partial + (makes_peak ? x : 0);
            if (partial2 <= n) {
                cur.steps.push_back(StepKind::SE);
                rec(x + 1, y - 1, partial2, true);
                cur.steps.pop_back();
            }
        }
        if (!empty && !after_n && seen_non_ne && y + 1 <= k - 1 && partial + x <= n) {
            cur.steps.push_back(StepKind::N);
            rec(x, y + 1, partial, true);
            cur.steps.pop_back();
        }
        if (!after_n && y == 0 && partial + x + 1 <= n) {
            cur.steps.push_back(StepKind::E);
            rec(x + 1, y, partial, true);
            cur.steps.pop_back();
        }
    };
    rec(0, k - a, 0, false);
    return out;
}

PathFamily path_family_from_string(const std::string& s) {
    if (s == "E") return PathFamily::E;
    if (s == "F") return PathFamily::F;
    if (s == "H") return PathFamily::H;
    if (s == "J") return PathFamily::J;
    if (s == "S") return PathFamily::S;
    throw std::invalid_argument("unknown path family: " + s);
}

bool in_path_family(const LatticePath& p, PathFamily f) {
    if (f == PathFamily::E) return true;
    const auto pk = annotated_peaks(p);
    switch (f) {
        case PathFamily::F:
            for (const Peak& q : pk)
                if (q.rel_height == p.k - 1 &&
                    (((q.x - W(p, q.x) - (p.a - 1)) % 2) + 2) % 2 != 0)
                    return false;
            return true;
        case PathFamily::H:
            for (const Peak& q : pk)
                if (peak_parity(p, q) != Parity::Even) return false;
            return true;
        case PathFamily::J:
            for (const Peak& q : pk)
                if (peak_parity(p, q) != Parity::Odd) return false;
            return true;
        case PathFamily::S:
            for (const Peak& q : pk) {
                const Parity want = (q.rel_height % 2 == 1) ? Parity::Even : Parity::Odd;
                if (peak_parity(p, q) != want) return false;
            }
            return true;
        default: return true;
    }
}

long long count_paths(PathFamily f, int k, int a, int n) {
    long long c = 0;
    for (const auto& p : enumerate_paths(k, a, n))
        if (in_path_family(p, f)) ++c;
    return c;
}

long long count_G(int k, int l, int m, int n) {
    long long c = 0;
    for (const auto& p : enumerate_paths(k, k, n)) {
        int relsum = 0;
        for (int rh : relative_heights(p)) relsum += rh;
        if (relsum != m) continue;
        if (parity_indices(p).full == l) ++c;
    }
    return c;
}

}  // namespace overpath
