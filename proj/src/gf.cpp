#include "overpath/gf.hpp"

#include <functional>

namespace overpath {

namespace {

// 1/(q^step; q^step)_n, memoized per evaluation via caller-held cache.
class InvPochCache {
public:
    InvPochCache(int step, int trunc) : step_(step), trunc_(trunc) {}

    const Series& get(int n) {
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        Series p = Series::one(trunc_);
        for (int i = 1; i <= n; ++i) {
            const int e = i * step_;
            if (e > trunc_) break;
            p.mul_binomial(Int(-1), e);
        }
        return cache_.emplace(n, p.inverse()).first->second;
    }

private:
    int step_;
    int trunc_;
    std::map<int, Series> cache_;
};

void check_range(Identity id, int k, int a) {
    if (k < 2) throw std::invalid_argument("gf: k must be >= 2");
    const int hi = (id == Identity::AB) ? k : k - 1;
    if (a < 1 || a > hi)
        throw std::invalid_argument("gf: a out of range for identity " + to_string(id));
}

// Enumerate N_1 >= ... >= N_{k-1} >= 0 pruned by the quadratic exponent term,
// calling f(N) for each admissible vector. N is 0-indexed: N[i] = N_{i+1}.
void for_each_n_vector(int k, int trunc,
                       const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> N(static_cast<std::size_t>(k - 1), 0);
    std::function<void(int, long long)> rec = [&](int i, long long minexp) {
        if (i == k - 1) {
            f(N);
            return;
        }
        const int cap = (i == 0) ? trunc + 1 : N[static_cast<std::size_t>(i - 1)];
        for (int v = 0; v <= cap; ++v) {
            const long long add =
                (i == 0) ? static_cast<long long>(v) * (v + 1) / 2
                         : static_cast<long long>(v) * v;
            if (minexp + add > trunc) break;
            N[static_cast<std::size_t>(i)] = v;
            rec(i + 1, minexp + add);
        }
        N[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0);
}

}  // namespace

Identity identity_from_string(const std::string& s) {
    if (s == "AB") return Identity::AB;
    if (s == "D") return Identity::D;
    if (s == "H") return Identity::H;
    if (s == "J") return Identity::J;
    if (s == "O") return Identity::O;
    if (s == "OverO") return Identity::OverO;
    throw std::invalid_argument("unknown identity: " + s);
}

std::string to_string(Identity id) {
    switch (id) {
        case Identity::AB: return "AB";
        case Identity::D: return "D";
        case Identity::H: return "H";
        case Identity::J: return "J";
        case Identity::O: return "O";
        case Identity::OverO: return "OverO";
    }
    return "?";
}

Series gf_sum(Identity id, int k, int a, int trunc) {
    check_range(id, k, a);
    Series total(trunc);

    InvPochCache inv_q(1, trunc);
    InvPochCache inv_q2(2, trunc);

    for_each_n_vector(k, trunc, [&](const std::vector<int>& N) {
        auto Nat = [&](int i) { return (i >= 1 && i <= k - 1) ? N[static_cast<std::size_t>(i - 1)] : 0; };
        const int N1 = Nat(1);

        // quadratic base exponent
        long long e = static_cast<long long>(N1) * (N1 + 1) / 2;
        for (int i = 2; i <= k - 1; ++i) e += static_cast<long long>(Nat(i)) * Nat(i);

        // The summand with the vanished factor (-q)_{N_1-1}(...) is the empty
        // configuration and contributes exactly 1.
        const bool has_nm1_factor = (id != Identity::H);
        if (has_nm1_factor && N1 == 0) {
            total += Series::one(trunc);
            return;
        }

        // identity-specific linear exponent terms
        switch (id) {
            case Identity::AB:
            case Identity::D:
                for (int i = a + 1; i <= k - 1; ++i) e += Nat(i);
                break;
            case Identity::H:
                for (int i = a + 1; i <= k - 1; i += 2) e += 2 * Nat(i);
                break;
            case Identity::J:
            case Identity::O:
                for (int i = a + 2; i <= k - 1; i += 2) e += 2 * Nat(i);
                break;
            case Identity::OverO:
                for (int i = (a % 2 == 1 ? a + 1 : a); i <= k - 1; ++i) e += Nat(i);
                break;
        }
        if (e > trunc) return;

        Series s = Series::monomial(1, static_cast<int>(e), trunc);

        // numerator Pochhammer
        s *= poch_finite(-1, 1, (id == Identity::H) ? N1 : N1 - 1, trunc);

        // two-term (or 1+q^{N_a}) numerator factor
        auto add_two_term = [&](long long e1, long long e2) {
            // multiply s by (q^{e1} + q^{e2})
            Series f(trunc);
            if (e1 <= trunc) f.at(static_cast<int>(e1)) += 1;
            if (e2 <= trunc) f.at(static_cast<int>(e2)) += 1;
            s *= f;
        };
        auto n_at = [&](int i) { return Nat(i) - Nat(i + 1); };
        switch (id) {
            case Identity::AB:
            case Identity::D:
                add_two_term(0, Nat(a));
                break;
            case Identity::H:
                break;
            case Identity::J:
            case Identity::O:
                add_two_term(N1, 2LL * Nat(a));
                break;
            case Identity::OverO: {
                long long e1 = 0, e2 = 0;
                if (a % 2 == 1) {
                    e1 = Nat(a);
                    for (int i = 1; i <= a - 2; i += 2) e1 += n_at(i);
                    for (int i = 2; i <= a - 1; i += 2) e2 += n_at(i);
                } else {
                    // First term: the leftmost-NESE piece, whose forced odd
                    // move parts contribute n_1 + n_3 + ... + n_{a-1} + N_a.
                    e1 = Nat(a);
                    for (int i = 1; i <= a - 1; i += 2) e1 += n_at(i);
                    for (int i = 2; i <= a - 2; i += 2) e2 += n_at(i);
                }
                add_two_term(e1, e2);
                break;
            }
        }

        // denominator
        if (id == Identity::AB || id == Identity::D) {
            for (int i = 1; i <= k - 2; ++i) s *= inv_q.get(n_at(i));
            s *= (id == Identity::AB) ? inv_q.get(Nat(k - 1)) : inv_q2.get(Nat(k - 1));
        } else {
            for (int i = 1; i <= k - 1; ++i) s *= inv_q2.get(n_at(i));
        }

        total += s;
    });
    return total;
}

Series gf_prod(Identity id, int k, int a, int trunc) {
    check_range(id, k, a);
    if (id != Identity::AB && id != Identity::D)
        throw std::invalid_argument("gf_prod: only AB and D have product sides");
    const int mod = (id == Identity::AB) ? 2 * k : 2 * k - 1;
    Series r = poch_inf(-1, 1, 1, trunc);          // (-q;q)_inf
    r *= poch_inf(1, a, mod, trunc);               // (q^a; q^mod)_inf
    r *= poch_inf(1, mod - a, mod, trunc);         // (q^{mod-a}; q^mod)_inf
    r *= poch_inf(1, mod, mod, trunc);             // (q^mod; q^mod)_inf
    r *= poch_inf(1, 1, 1, trunc).inverse();       // 1/(q;q)_inf
    return r;
}

void TriSeries::add(int l, int m, int n, const Int& c) {
    if (c == 0) return;
    auto key = Key{l, m, n};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int TriSeries::coeff(int l, int m, int n) const {
    auto it = terms_.find(Key{l, m, n});
    return it == terms_.end() ? Int(0) : it->second;
}

Series TriSeries::specialize(int trunc) const {
    Series s(trunc);
    for (const auto& [key, c] : terms_) {
        const int n = std::get<2>(key);
        if (n <= trunc) s.at(n) += c;
    }
    return s;
}

TriSeries gf_gt(int k, int trunc) {
    if (k < 2) throw std::invalid_argument("gf_gt: k must be >= 2");
    TriSeries out;
    InvPochCache inv_q2(2, trunc);

    for_each_n_vector(k, trunc, [&](const std::vector<int>& N) {
        auto Nat = [&](int i) { return (i >= 1 && i <= k - 1) ? N[static_cast<std::size_t>(i - 1)] : 0; };
        const int N1 = Nat(1);
        if (N1 == 0) {
            out.add(0, 0, 0, 1);
            return;
        }
        long long e = static_cast<long long>(N1) * (N1 + 1) / 2;
        int m = N1;
        for (int i = 2; i <= k - 1; ++i) {
            e += static_cast<long long>(Nat(i)) * Nat(i);
            m += Nat(i);
        }
        if (e > trunc) return;

        // y-free part: 2 * q^e * (-q)_{N_1-1} / prod (q^2;q^2)_{n_i}
        Series A = Series::monomial(2, static_cast<int>(e), trunc);
        A *= poch_finite(-1, 1, N1 - 1, trunc);
        for (int i = 1; i <= k - 1; ++i) A *= inv_q2.get(Nat(i) - Nat(i + 1));

        // expand prod_r (-yq)_{n_r} = prod_r prod_{j=1}^{n_r} (1 + y q^j)
        // by y-degree: ylev[l] is the coefficient series of y^l.
        std::vector<Series> ylev;
        ylev.push_back(Series::one(trunc));
        for (int r = 1; r <= k - 1; ++r) {
            const int nr = Nat(r) - Nat(r + 1);
            for (int j = 1; j <= nr; ++j) {
                ylev.push_back(Series(trunc));
                for (int l = static_cast<int>(ylev.size()) - 1; l >= 1; --l) {
                    Series shifted = ylev[static_cast<std::size_t>(l - 1)] *
                                     Series::monomial(1, j, trunc);
                    ylev[static_cast<std::size_t>(l)] += shifted;
                }
            }
        }

        for (int l = 0; l < static_cast<int>(ylev.size()); ++l) {
            Series C = A * ylev[static_cast<std::size_t>(l)];
            for (int n = 0; n <= trunc; ++n)
                if (C[n] != 0) out.add(l, m, n, C[n]);
        }
    });
    return out;
}

}  // namespace overpath
