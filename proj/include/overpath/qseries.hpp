#pragma once

// Truncated formal power series in q with exact arbitrary-precision integer
// coefficients, plus the Pochhammer-symbol builders used by every generating
// function in the project.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace overpath {

using Int = boost::multiprecision::cpp_int;

// A power series in q truncated at q^trunc (inclusive): coefficients 0..trunc
// are stored exactly; everything above is discarded by construction.
class Series {
public:
    explicit Series(int trunc) : coeff_(static_cast<std::size_t>(trunc) + 1) {
        if (trunc < 0) throw std::invalid_argument("Series: trunc must be >= 0");
    }

    static Series one(int trunc) {
        Series s(trunc);
        s.coeff_[0] = 1;
        return s;
    }

    // c * q^e, truncated (the zero series when e > trunc).
    static Series monomial(const Int& c, int e, int trunc) {
        Series s(trunc);
        if (e >= 0 && e <= trunc) s.coeff_[static_cast<std::size_t>(e)] = c;
        return s;
    }

    int trunc() const { return static_cast<int>(coeff_.size()) - 1; }

    const Int& operator[](int n) const { return coeff_.at(static_cast<std::size_t>(n)); }
    Int& at(int n) { return coeff_.at(static_cast<std::size_t>(n)); }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series operator*(const Series& o) const;
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    bool operator==(const Series& o) const { return coeff_ == o.coeff_; }

    // Multiply by (1 + c*q^e) in place (a single Pochhammer factor).
    void mul_binomial(const Int& c, int e);

    // Multiplicative inverse; requires constant term +1 or -1.
    Series inverse() const;

    // Copy truncated (or zero-padded) to a different order.
    Series truncated(int t) const;

    // "c0 + c1*q + c2*q^2 + ..." (zero terms skipped, constant always shown).
    std::string to_string() const;

private:
    std::vector<Int> coeff_;
};

// (sign*q^e; q)_n = prod_{i=0}^{n-1} (1 - sign*q^{e+i}), truncated.
Series poch_finite(int sign, int e, int n, int trunc);

// (sign*q^e; q^step)_infty truncated; factors with exponent > trunc drop out.
// Rejects e = 0 (the factor 1-sign would not be a unit formal series).
Series poch_inf(int sign, int e, int step, int trunc);

}  // namespace overpath
