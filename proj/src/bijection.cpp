#include "overpath/bijection.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace overpath {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string round_ctx(int r) {
    std::ostringstream os;
    os << "round " << r << ": ";
    return os.str();
}

// A peak located inside a raw step vector: index of the apex step (the N or
// NE immediately followed by SE), plus apex coordinates.
struct Loc {
    int apex = 0;
    int x = 0;
    int y = 0;
    bool nese = false;
};

std::vector<Loc> locate_peaks(const std::vector<StepKind>& st, int start_height) {
    std::vector<Loc> out;
    int x = 0;
    int y = start_height;
    for (int i = 0; i < static_cast<int>(st.size()); ++i) {
        switch (st[i]) {
            case StepKind::NE: ++x; ++y; break;
            case StepKind::SE: ++x; --y; break;
            case StepKind::N: ++y; break;
            case StepKind::E: ++x; break;
        }
        if ((st[i] == StepKind::N || st[i] == StepKind::NE) &&
            i + 1 < static_cast<int>(st.size()) && st[i + 1] == StepKind::SE) {
            out.push_back({i, x, y, st[i] == StepKind::NE});
        }
    }
    return out;
}

LatticePath make_path(int k, int a, std::vector<StepKind> steps, const std::string& ctx) {
    LatticePath p;
    p.k = k;
    p.a = a;
    p.steps = std::move(steps);
    std::string why;
    if (!validate(p, &why)) fail(ctx + "resulting path invalid: " + why);
    return p;
}

// One unit of rightward movement for the peak at index t; equal-height
// adjacency (the step after the descent is the next peak's N ascent) hands
// the movement to that next peak. Returns the index of the peak that moved.
int unit_move_right(std::vector<StepKind>& st, int start_height, int t) {
    auto locs = locate_peaks(st, start_height);
    if (t < 0 || t >= static_cast<int>(locs.size()))
        fail("move: peak index out of range");
    int ai = locs[t].apex;
    int f = ai + 2;
    if (f == static_cast<int>(st.size())) {
        // End of the path: lay down a new E step in front of the peak.
        st.insert(st.begin() + ai, StepKind::E);
        return t;
    }
    StepKind nxt = st[f];
    if (nxt == StepKind::N) {
        // Adjacent peak of equal height: the rightmost one moves instead.
        return unit_move_right(st, start_height, t + 1);
    }
    st.erase(st.begin() + f);
    st.insert(st.begin() + ai, nxt);
    return t;
}

// One unit of leftward movement (the inverse of unit_move_right) for the
// peak at index t. Returns the index of the peak that actually moved.
int unit_move_left(std::vector<StepKind>& st, int start_height, int t) {
    auto locs = locate_peaks(st, start_height);
    if (t < 0 || t >= static_cast<int>(locs.size()))
        fail("reverse move: peak index out of range");
    if (t >= 1 && locs[t - 1].apex + 2 == locs[t].apex) {
        // Adjacent peak of equal height directly to the left: the movement
        // is handed back to it.
        return unit_move_left(st, start_height, t - 1);
    }
    int ai = locs[t].apex;
    if (ai == 0) fail("reverse move: peak " + std::to_string(t) + " cannot move past the start");
    int pre = ai - 1;
    StepKind s = st[pre];
    if (s == StepKind::N) fail("reverse move: malformed context before peak " + std::to_string(t));
    if (s == StepKind::E && ai + 1 == static_cast<int>(st.size()) - 1) {
        // A trailing peak resting on an E step: the E was created when the
        // peak was pushed past the end, so it is removed again.
        st.erase(st.begin() + pre);
        return t;
    }
    st.erase(st.begin() + pre);
    // The block now occupies [ai-1, ai]; the displaced step goes after it.
    st.insert(st.begin() + ai + 1, s);
    return t;
}

std::vector<int> rel_one_weights_order(const LatticePath& p, std::vector<int>* indices) {
    auto pk = annotated_peaks(p);
    std::vector<int> ws;
    for (int i = 0; i < static_cast<int>(pk.size()); ++i) {
        if (pk[i].rel_height == 1) {
            ws.push_back(pk[i].x);
            if (indices) indices->push_back(i);
        }
    }
    return ws;
}

// Required parity (0 even, 1 odd, nullopt unconstrained) of every part of
// mu^(r) for the given family and build variant.
std::optional<int> required_mu_parity(PathFamily f, PeakKind leftmost, int k, int a, int r) {
    if (f == PathFamily::E) return std::nullopt;
    if (f == PathFamily::F) {
        // The rel-(k-1) peaks collect k-2 uplifts plus one SE insertion per
        // round in [a_eff+1, k-1]; their weight condition then pins the
        // parity of mu^(k-1).
        if (r == k - 1) {
            int a_eff = (leftmost == PeakKind::NESE && a >= 2) ? a - 1 : a;
            if (leftmost == PeakKind::NESE && a == 1) return 0;
            return a_eff == k ? 1 : 0;
        }
        return std::nullopt;
    }
    bool nese = (leftmost == PeakKind::NESE);
    if (nese && a == 1) {
        switch (f) {
            case PathFamily::H: return (r + 1) % 2;
            case PathFamily::J: return r % 2;
            case PathFamily::S: return 0;
            default: break;
        }
    }
    int a_eff = nese ? a - 1 : a;
    int plus = (r > a_eff) ? (r - a_eff) % 2 : 0;
    int flip = nese ? 1 : 0;
    switch (f) {
        case PathFamily::H: return (plus + flip) % 2;
        case PathFamily::J: return (plus + flip + 1) % 2;
        case PathFamily::S: return (plus + flip + (r % 2 == 1 ? 0 : 1)) % 2;
        default: break;
    }
    return std::nullopt;
}

}  // namespace

PeakKind peak_kind_from_string(const std::string& s) {
    if (s == "NSE" || s == "nse") return PeakKind::NSE;
    if (s == "NESE" || s == "nese") return PeakKind::NESE;
    fail("unknown peak kind '" + s + "' (expected NSE or NESE)");
}

std::string to_string(PeakKind k) { return k == PeakKind::NSE ? "NSE" : "NESE"; }

int BuildSpec::N(int r) const {
    int s = 0;
    for (int i = r; i <= k - 1; ++i) s += n[i - 1];
    return s;
}

void BuildSpec::check() const {
    if (k < 2) fail("spec: k must be at least 2");
    if (a < 1 || a > k) fail("spec: a must lie in [1, k]");
    if (static_cast<int>(n.size()) != k - 1) fail("spec: n must have exactly k-1 entries");
    for (int r = 1; r <= k - 1; ++r)
        if (n[r - 1] < 0) fail("spec: n_" + std::to_string(r) + " is negative");
    if (static_cast<int>(mu.size()) != k - 1) fail("spec: mu must have exactly k-1 rows");
    for (int r = 1; r <= k - 1; ++r) {
        const auto& row = mu[r - 1];
        if (static_cast<int>(row.size()) != n[r - 1])
            fail("spec: mu^(" + std::to_string(r) + ") must have exactly n_" +
                 std::to_string(r) + " parts");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 0) fail("spec: mu^(" + std::to_string(r) + ") has a negative part");
            if (i > 0 && row[i] > row[i - 1])
                fail("spec: mu^(" + std::to_string(r) + ") is not weakly decreasing");
        }
        auto parity = required_mu_parity(family, leftmost, k, a, r);
        if (parity) {
            for (int part : row)
                if (part % 2 != *parity)
                    fail("spec: every part of mu^(" + std::to_string(r) + ") must be " +
                         (*parity == 0 ? std::string("even") : std::string("odd")) +
                         " for this family");
        }
    }
    int n1 = N(1);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < 1 || beta[i] > n1 - 1)
            fail("spec: beta parts must lie in [1, N_1 - 1]");
        if (i > 0 && beta[i] >= beta[i - 1]) fail("spec: beta must be strictly decreasing");
    }
    if (leftmost == PeakKind::NESE && n1 == 0)
        fail("spec: an NESE leftmost peak requires at least one peak");
}

LatticePath insert_nse_peaks(const LatticePath& p, int count, int start_height) {
    if (count < 0) fail("insert: negative peak count");
    if (count == 0) return p;
    if (p.start_height() != start_height)
        fail("insert: path starts at height " + std::to_string(p.start_height()) +
             ", not " + std::to_string(start_height));
    int h = start_height;
    if (h > p.k - 1) fail("insert: start height exceeds k-1");
    std::vector<StepKind> st;
    if (p.steps.empty()) {
        if (h == 0) {
            st.push_back(StepKind::E);
            for (int i = 0; i < count; ++i) {
                st.push_back(StepKind::N);
                st.push_back(StepKind::SE);
            }
        } else if (h == 1) {
            for (int i = 0; i < count; ++i) {
                st.push_back(StepKind::SE);
                st.push_back(StepKind::N);
            }
            st.push_back(StepKind::SE);
        } else {
            fail("insert: empty path must start at height 0 or 1");
        }
    } else if (h >= 1) {
        if (p.steps.front() != StepKind::SE) fail("insert: path must begin with an SE step");
        for (int i = 0; i < count; ++i) {
            st.push_back(StepKind::SE);
            st.push_back(StepKind::N);
        }
        st.insert(st.end(), p.steps.begin(), p.steps.end());
    } else {
        if (p.steps.front() != StepKind::E) fail("insert: height-0 path must begin with an E step");
        st.push_back(StepKind::E);
        for (int i = 0; i < count; ++i) {
            st.push_back(StepKind::N);
            st.push_back(StepKind::SE);
        }
        st.insert(st.end(), p.steps.begin() + 1, p.steps.end());
    }
    return make_path(p.k, p.a, std::move(st), "insert: ");
}

LatticePath insert_se_step(const LatticePath& p) {
    if (p.steps.empty()) fail("insert SE: path is empty");
    if (p.start_height() + 1 > p.k - 1) fail("insert SE: start height would exceed k-1");
    std::vector<StepKind> st;
    st.reserve(p.steps.size() + 1);
    st.push_back(StepKind::SE);
    st.insert(st.end(), p.steps.begin(), p.steps.end());
    return make_path(p.k, p.a - 1, std::move(st), "insert SE: ");
}

LatticePath move_peak_right(const LatticePath& p, int target, int amount) {
    if (amount < 0) fail("move: negative amount");
    if (amount == 0) return p;
    auto rels = relative_heights(p);
    if (target < 0 || target >= static_cast<int>(rels.size()))
        fail("move: peak index " + std::to_string(target) + " out of range");
    if (rels[target] != 1)
        fail("move: peak " + std::to_string(target) + " does not have relative height 1");
    std::vector<StepKind> st = p.steps;
    int t = target;
    for (int u = 0; u < amount; ++u) t = unit_move_right(st, p.start_height(), t);
    return make_path(p.k, p.a, std::move(st), "move: ");
}

LatticePath volcanic_uplift(const LatticePath& p) {
    std::vector<StepKind> st = p.steps;
    for (int i = 0; i + 1 < static_cast<int>(st.size());) {
        if ((st[i] == StepKind::N || st[i] == StepKind::NE) && st[i + 1] == StepKind::SE) {
            st.insert(st.begin() + i, StepKind::NE);
            st.insert(st.begin() + i + 3, StepKind::SE);
            i += 4;
        } else {
            ++i;
        }
    }
    return make_path(p.k, p.a, std::move(st), "uplift: ");
}

LatticePath dilation_A(const LatticePath& p) {
    auto locs = locate_peaks(p.steps, p.start_height());
    if (locs.empty()) fail("dilation A: path has no peaks");
    if (locs.back().nese) fail("dilation A: rightmost peak is already NESE");
    std::vector<StepKind> st = p.steps;
    st[locs.back().apex] = StepKind::NE;
    return make_path(p.k, p.a, std::move(st), "dilation A: ");
}

LatticePath reduction_A(const LatticePath& p) {
    auto locs = locate_peaks(p.steps, p.start_height());
    if (locs.empty()) fail("reduction A: path has no peaks");
    if (!locs.back().nese) fail("reduction A: rightmost peak is not NESE");
    std::vector<StepKind> st = p.steps;
    st[locs.back().apex] = StepKind::N;
    return make_path(p.k, p.a, std::move(st), "reduction A: ");
}

LatticePath dilation_B(const LatticePath& p) {
    auto locs = locate_peaks(p.steps, p.start_height());
    int q = -1;
    for (int i = static_cast<int>(locs.size()) - 1; i >= 0; --i)
        if (locs[i].nese) { q = i; break; }
    if (q < 0) fail("dilation B: no NESE peak");
    if (q == 0) fail("dilation B: no peak to the left of the rightmost NESE peak");
    if (locs[q - 1].nese) fail("dilation B: peak left of the rightmost NESE peak is not NSE");
    std::vector<StepKind> st = p.steps;
    st[locs[q - 1].apex] = StepKind::NE;
    st[locs[q].apex] = StepKind::N;
    return make_path(p.k, p.a, std::move(st), "dilation B: ");
}

LatticePath reduction_B(const LatticePath& p) {
    auto locs = locate_peaks(p.steps, p.start_height());
    int q = -1;
    for (int i = static_cast<int>(locs.size()) - 1; i >= 0; --i)
        if (locs[i].nese) { q = i; break; }
    if (q < 0) fail("reduction B: no NESE peak");
    if (q + 1 >= static_cast<int>(locs.size()))
        fail("reduction B: no peak to the right of the rightmost NESE peak");
    if (locs[q + 1].nese) fail("reduction B: peak right of the rightmost NESE peak is not NSE");
    std::vector<StepKind> st = p.steps;
    st[locs[q].apex] = StepKind::N;
    st[locs[q + 1].apex] = StepKind::NE;
    return make_path(p.k, p.a, std::move(st), "reduction B: ");
}

LatticePath build_path(const BuildSpec& spec, std::vector<TraceEntry>* trace) {
    spec.check();
    const int k = spec.k;
    const int a = spec.a;
    const bool var_a1 = (spec.leftmost == PeakKind::NESE && a == 1);
    const bool var_nese = (spec.leftmost == PeakKind::NESE && a >= 2);
    const int a_eff = var_nese ? a - 1 : (var_a1 ? k - 1 : a);

    int r0 = 0;  // smallest r with n_r > 0 (used by the NESE a = 1 variant)
    if (var_a1)
        for (int r = 1; r <= k - 1; ++r)
            if (spec.n[r - 1] > 0) { r0 = r; break; }

    LatticePath cur;
    cur.k = k;
    if (a_eff == k) {
        cur.a = k;
    } else {
        cur.a = k - 1;
        cur.steps = {StepKind::SE};
    }
    auto emit = [&](const std::string& label) {
        if (trace) trace->push_back({label, cur});
    };
    emit("start");

    for (int r = k - 1; r >= 1; --r) {
        int c = spec.n[r - 1];
        if (var_a1 && r == r0) {
            // The round that creates the NESE leftmost peak: the new column
            // goes in right after the leading SE step and no SE step is
            // inserted this round.
            if (cur.steps.empty() || cur.steps.front() != StepKind::SE)
                fail(round_ctx(r) + "path must begin with an SE step");
            std::vector<StepKind> st;
            st.push_back(StepKind::SE);
            st.push_back(StepKind::NE);
            st.push_back(StepKind::SE);
            for (int i = 0; i < c - 1; ++i) {
                st.push_back(StepKind::N);
                st.push_back(StepKind::SE);
            }
            st.insert(st.end(), cur.steps.begin() + 1, cur.steps.end());
            cur = make_path(k, cur.a, std::move(st), round_ctx(r));
            emit(round_ctx(r) + "insert NESE column");
        } else if (c > 0) {
            cur = insert_nse_peaks(cur, c, cur.start_height());
            emit(round_ctx(r) + "insert peaks");
        }
        bool want_se = var_a1 ? (r != r0) : (a_eff + 1 <= r && r <= k - 1);
        if (want_se) {
            cur = insert_se_step(cur);
            emit(round_ctx(r) + "insert SE");
        }
        for (int i = 1; i <= c; ++i) {
            int amount = spec.mu[r - 1][i - 1];
            if (amount > 0) {
                cur = move_peak_right(cur, c - i, amount);
                emit(round_ctx(r) + "move peak " + std::to_string(c - i) + " by " +
                     std::to_string(amount));
            }
        }
        if (r != 1) {
            cur = volcanic_uplift(cur);
            emit(round_ctx(r) + "uplift");
        }
    }

    if (var_nese) {
        // Convert the build at a-1 into a path whose leftmost peak is NESE:
        // drop the leading SE step and replace the first peak's N by NE.
        auto locs = locate_peaks(cur.steps, cur.start_height());
        if (locs.empty()) fail("transform: path has no peaks");
        if (cur.steps.front() != StepKind::SE) fail("transform: path must begin with SE");
        std::vector<StepKind> st = cur.steps;
        if (st[locs.front().apex] != StepKind::N) fail("transform: leftmost peak is not NSE");
        st[locs.front().apex] = StepKind::NE;
        st.erase(st.begin());
        cur = make_path(k, a, std::move(st), "transform: ");
        emit("transform leftmost peak");
    }

    for (std::size_t t = 0; t < spec.beta.size(); ++t) {
        int b = spec.beta[t];
        cur = dilation_A(cur);
        for (int j = 0; j < b - 1; ++j) cur = dilation_B(cur);
        emit("dilate to position " + std::to_string(b));
    }

    if (!in_path_family(cur, spec.family))
        throw std::logic_error("build: result leaves the requested family");
    return cur;
}

BuildSpec decompose_path(const LatticePath& p) {
    std::string why;
    if (!validate(p, &why)) fail("decompose: invalid path: " + why);
    const int k = p.k;
    const int a = p.a;

    BuildSpec out;
    out.k = k;
    out.a = a;
    out.n.assign(k - 1, 0);
    out.mu.assign(k - 1, {});
    out.family = PathFamily::E;

    auto pk = annotated_peaks(p);
    if (pk.empty()) {
        out.leftmost = PeakKind::NSE;
        return out;
    }
    out.leftmost = pk.front().nese ? PeakKind::NESE : PeakKind::NSE;
    for (const auto& q : pk) {
        if (q.rel_height < 1 || q.rel_height > k - 1)
            fail("decompose: peak of relative height " + std::to_string(q.rel_height));
        out.n[q.rel_height - 1] += 1;
    }
    const int n1 = static_cast<int>(pk.size());

    // Dilation partition: positions from the right of every NESE peak other
    // than a NESE leftmost peak.
    for (int i = pk.front().nese ? 1 : 0; i < n1; ++i)
        if (pk[i].nese) out.beta.push_back(n1 - i);
    std::sort(out.beta.begin(), out.beta.end(), std::greater<int>());

    const bool var_a1 = (out.leftmost == PeakKind::NESE && a == 1);
    const bool var_nese = (out.leftmost == PeakKind::NESE && a >= 2);
    const int a_eff = var_nese ? a - 1 : (var_a1 ? k - 1 : a);
    int r0 = 0;
    if (var_a1)
        for (int r = 1; r <= k - 1; ++r)
            if (out.n[r - 1] > 0) { r0 = r; break; }

    LatticePath cur = p;
    // Undo the dilations, smallest position first.
    for (auto it = out.beta.rbegin(); it != out.beta.rend(); ++it) {
        for (int j = 0; j < *it - 1; ++j) cur = reduction_B(cur);
        cur = reduction_A(cur);
    }

    if (var_nese) {
        auto locs = locate_peaks(cur.steps, cur.start_height());
        if (locs.empty() || !locs.front().nese)
            fail("decompose: leftmost peak is not NESE after undoing dilations");
        std::vector<StepKind> st = cur.steps;
        st[locs.front().apex] = StepKind::N;
        st.insert(st.begin(), StepKind::SE);
        cur = make_path(k, a - 1, std::move(st), "untransform: ");
    }

    for (int r = 1; r <= k - 1; ++r) {
        const std::string ctx = round_ctx(r);
        int c = out.n[r - 1];
        // Undo the uplift of this round.
        if (r != 1) {
            std::vector<StepKind>& st = cur.steps;
            auto locs = locate_peaks(st, cur.start_height());
            for (int i = static_cast<int>(locs.size()) - 1; i >= 0; --i) {
                int ai = locs[i].apex;
                if (ai < 1 || st[ai - 1] != StepKind::NE ||
                    ai + 2 >= static_cast<int>(st.size()) || st[ai + 2] != StepKind::SE)
                    fail(ctx + "peak " + std::to_string(i) + " is not in uplifted form");
                st.erase(st.begin() + ai + 2);
                st.erase(st.begin() + ai - 1);
            }
            std::string w;
            if (!validate(cur, &w)) fail(ctx + "path invalid after undoing uplift: " + w);
        }
        bool had_se = var_a1 ? (r != r0) : (a_eff + 1 <= r && r <= k - 1);
        // Undo the moves: walk each relative-height-1 peak back to its slot.
        if (c > 0) {
            out.mu[r - 1].assign(c, 0);
            int delta = (had_se || (var_a1 && r == r0)) ? 1 : 0;
            for (int j = 1; j <= c; ++j) {
                int target = j + delta;
                int guard = major_index(cur) + 1;
                while (true) {
                    std::vector<int> idx;
                    auto ws = rel_one_weights_order(cur, &idx);
                    if (static_cast<int>(ws.size()) < c)
                        fail(ctx + "expected " + std::to_string(c) +
                             " peaks of relative height 1");
                    int w = ws[j - 1];
                    if (w == target) break;
                    if (w < target || --guard < 0)
                        fail(ctx + "peak " + std::to_string(j - 1) +
                             " cannot be returned to its slot");
                    unit_move_left(cur.steps, cur.start_height(), idx[j - 1]);
                    out.mu[r - 1][c - j] += 1;
                }
            }
            for (int i = 1; i < c; ++i)
                if (out.mu[r - 1][i] > out.mu[r - 1][i - 1])
                    fail(ctx + "recovered move partition is not weakly decreasing");
        }
        if (had_se) {
            if (cur.steps.empty() || cur.steps.front() != StepKind::SE)
                fail(ctx + "expected a leading SE step to remove");
            cur.steps.erase(cur.steps.begin());
            cur.a += 1;
            std::string w;
            if (!validate(cur, &w)) fail(ctx + "path invalid after removing SE: " + w);
        }
        // Undo the insertion of this round.
        if (c > 0) {
            std::vector<StepKind>& st = cur.steps;
            if (var_a1 && r == r0) {
                if (static_cast<int>(st.size()) < 2 * c + 1 || st[0] != StepKind::SE ||
                    st[1] != StepKind::NE || st[2] != StepKind::SE)
                    fail(ctx + "expected the NESE column at the start of the path");
                for (int i = 0; i < c - 1; ++i)
                    if (st[3 + 2 * i] != StepKind::N || st[4 + 2 * i] != StepKind::SE)
                        fail(ctx + "expected the NESE column at the start of the path");
                std::vector<StepKind> rest(st.begin() + 2 * c + 1, st.end());
                st.assign(1, StepKind::SE);
                st.insert(st.end(), rest.begin(), rest.end());
            } else if (cur.start_height() == 0) {
                if (static_cast<int>(st.size()) < 2 * c + 1 || st[0] != StepKind::E)
                    fail(ctx + "expected an E step and " + std::to_string(c) + " new peaks");
                for (int i = 0; i < c; ++i)
                    if (st[1 + 2 * i] != StepKind::N || st[2 + 2 * i] != StepKind::SE)
                        fail(ctx + "expected " + std::to_string(c) + " new peaks after the E step");
                std::vector<StepKind> rest(st.begin() + 2 * c + 1, st.end());
                if (rest.empty()) {
                    st.clear();
                } else {
                    st.assign(1, StepKind::E);
                    st.insert(st.end(), rest.begin(), rest.end());
                }
            } else {
                if (static_cast<int>(st.size()) < 2 * c)
                    fail(ctx + "expected " + std::to_string(c) + " new peaks at the start");
                for (int i = 0; i < c; ++i)
                    if (st[2 * i] != StepKind::SE || st[2 * i + 1] != StepKind::N)
                        fail(ctx + "expected " + std::to_string(c) + " new peaks at the start");
                st.erase(st.begin(), st.begin() + 2 * c);
            }
            if (!st.empty()) {
                std::string w;
                if (!validate(cur, &w)) fail(ctx + "path invalid after removing peaks: " + w);
            }
        }
    }

    if (a_eff == k) {
        if (!cur.steps.empty()) fail("decompose: leftover steps after all rounds");
    } else {
        if (cur.steps != std::vector<StepKind>{StepKind::SE})
            fail("decompose: leftover steps after all rounds");
    }
    out.check();
    return out;
}

}  // namespace overpath
