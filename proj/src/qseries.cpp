#include "overpath/qseries.hpp"

#include <sstream>

namespace overpath {

namespace {

void check_same_trunc(const Series& a, const Series& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("Series: mixed truncation orders");
}

}  // namespace

Series& Series::operator+=(const Series& o) {
    check_same_trunc(*this, o);
    for (int n = 0; n <= trunc(); ++n) coeff_[static_cast<std::size_t>(n)] += o[n];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_same_trunc(*this, o);
    for (int n = 0; n <= trunc(); ++n) coeff_[static_cast<std::size_t>(n)] -= o[n];
    return *this;
}

Series Series::operator*(const Series& o) const {
    check_same_trunc(*this, o);
    const int t = trunc();
    Series r(t);
    for (int i = 0; i <= t; ++i) {
        if (coeff_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= t; ++j) {
            if (o[j] == 0) continue;
            r.coeff_[static_cast<std::size_t>(i + j)] +=
                coeff_[static_cast<std::size_t>(i)] * o[j];
        }
    }
    return r;
}

void Series::mul_binomial(const Int& c, int e) {
    if (e <= 0) throw std::invalid_argument("mul_binomial: exponent must be positive");
    const int t = trunc();
    // (1 + c*q^e): process downward so each coefficient is read before written.
    for (int n = t; n >= e; --n)
        coeff_[static_cast<std::size_t>(n)] += c * coeff_[static_cast<std::size_t>(n - e)];
}

Series Series::inverse() const {
    const int t = trunc();
    const Int& c0 = coeff_[0];
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("Series::inverse: constant term must be a unit (+1/-1)");
    // b_0 = 1/a_0; b_n = -(1/a_0) * sum_{k=1}^{n} a_k b_{n-k}.
    Series b(t);
    b.coeff_[0] = c0;  // 1/(+-1) = +-1
    for (int n = 1; n <= t; ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += coeff_[static_cast<std::size_t>(k)] * b.coeff_[static_cast<std::size_t>(n - k)];
        b.coeff_[static_cast<std::size_t>(n)] = -c0 * acc;
    }
    return b;
}

Series Series::truncated(int t) const {
    Series r(t);
    for (int n = 0; n <= t && n <= trunc(); ++n) r.coeff_[static_cast<std::size_t>(n)] = coeff_[static_cast<std::size_t>(n)];
    return r;
}

std::string Series::to_string() const {
    std::ostringstream os;
    os << coeff_[0];
    for (int n = 1; n <= trunc(); ++n) {
        const Int& c = coeff_[static_cast<std::size_t>(n)];
        if (c == 0) continue;
        if (c > 0)
            os << " + " << c;
        else
            os << " - " << -c;
        os << "*q";
        if (n > 1) os << "^" << n;
    }
    return os.str();
}

Series poch_finite(int sign, int e, int n, int trunc) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("poch_finite: sign must be +1/-1");
    if (n < 0) throw std::invalid_argument("poch_finite: n must be >= 0");
    Series r = Series::one(trunc);
    for (int i = 0; i < n; ++i) {
        const int exp = e + i;
        if (exp > trunc) break;  // all later factors contribute only above trunc
        if (exp == 0) {
            // (1 - sign*q^0) degenerates to a constant; only meaningful finite case.
            Series f = Series::one(trunc);
            f.at(0) -= sign;
            r *= f;
            continue;
        }
        r.mul_binomial(Int(-sign), exp);
    }
    return r;
}

Series poch_inf(int sign, int e, int step, int trunc) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("poch_inf: sign must be +1/-1");
    if (e < 1) throw std::invalid_argument("poch_inf: e must be >= 1 (unit constant factor)");
    if (step < 1) throw std::invalid_argument("poch_inf: step must be >= 1");
    Series r = Series::one(trunc);
    for (int exp = e; exp <= trunc; exp += step) r.mul_binomial(Int(-sign), exp);
    return r;
}

}  // namespace overpath
