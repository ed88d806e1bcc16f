#pragma once

// Generating-function evaluators: the multi-sum and product sides of the
// overpartition identities, and the trivariate series of the Gordon-marking
// theorem. All sums run over N_1 >= ... >= N_{k-1} >= 0 with N_k = 0 and
// n_i = N_i - N_{i+1}; summands whose guaranteed-minimal exponent
// N_1(N_1+1)/2 + N_2^2 + ... already exceeds the truncation order are pruned.

#include "overpath/qseries.hpp"

#include <map>
#include <tuple>

namespace overpath {

enum class Identity { AB, D, H, J, O, OverO };

Identity identity_from_string(const std::string& s);
std::string to_string(Identity id);

// Multi-sum side. Ranges: AB: 1<=a<=k; D/H/J/O: 1<=a<=k-1; OverO: 1<=a<=k-1.
Series gf_sum(Identity id, int k, int a, int trunc);

// Product side (AB: modulus 2k; D: modulus 2k-1).
Series gf_prod(Identity id, int k, int a, int trunc);

// Trivariate series graded by y^l x^m q^n.
class TriSeries {
public:
    using Key = std::tuple<int, int, int>;  // (l, m, n)

    void add(int l, int m, int n, const Int& c);
    Int coeff(int l, int m, int n) const;
    const std::map<Key, Int>& terms() const { return terms_; }

    // Sum over l, m per n: the y=x=1 specialization as a TruncatedSeries.
    Series specialize(int trunc) const;

private:
    std::map<Key, Int> terms_;
};

// Expansion of the two-variable refinement (y tracks the full lower even
// parity index, x the number of parts / total relative height).
TriSeries gf_gt(int k, int trunc);

}  // namespace overpath
