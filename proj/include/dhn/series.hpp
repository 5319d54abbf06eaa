#pragma once

#include <vector>

#include "dhn/partition.hpp"
#include "dhn/rational.hpp"

namespace dhn {

/// Truncated univariate power series with exact rational coefficients.
/// All arithmetic is exact through the truncation order; binary operations
/// truncate to the smaller order of the two operands.
class UnivariateSeries {
  public:
    UnivariateSeries() : c_(1) {}
    explicit UnivariateSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
    explicit UnivariateSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.resize(1);
    }

    static UnivariateSeries constant(const Rational& v, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    void set_coeff(int i, const Rational& v) { c_[static_cast<size_t>(i)] = v; }

    UnivariateSeries truncated(int order) const;

    UnivariateSeries operator+(const UnivariateSeries& o) const;
    UnivariateSeries operator-(const UnivariateSeries& o) const;
    UnivariateSeries operator*(const UnivariateSeries& o) const;
    /// Requires o to be a unit (nonzero constant term).
    UnivariateSeries operator/(const UnivariateSeries& o) const;
    UnivariateSeries operator*(const Rational& s) const;

    /// Integer power; negative exponents go through division (unit required).
    UnivariateSeries pow(int e) const;
    /// Requires constant term 0.
    UnivariateSeries exp() const;
    /// Requires constant term 1.
    UnivariateSeries log() const;

    friend bool operator==(const UnivariateSeries&, const UnivariateSeries&) = default;

  private:
    std::vector<Rational> c_;  // c_[i] is the coefficient of x^i
};

/// Bernoulli number B_{2j} (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...), by the
/// defining recurrence over exact rationals.  Memoized.
Rational bernoulli(int two_j);

/// xi_{2j} = [x^{2j}] log(sinh(x)/x).  Memoized.
Rational xi_coeff(int two_j);

/// v_{2j} = 1/(2^{2j} (2j+1)!), the coefficients of (2/x) sinh(x/2).
Rational v_coeff(int two_j);

/// f_{2j} = (1 - 2^{2j-1})/(2^{2j-1} (2j)!) B_{2j}, the coefficients of
/// (x/2) cosech(x/2).  Sign is (-1)^j.
Rational f_coeff(int two_j);

/// sinh(x)/x truncated (even series, constant term 1).
UnivariateSeries sinh_x_over_x(int order);

/// sinh(k x/2)/(k x/2) truncated: sum_j v_{2j} k^{2j} x^{2j}.
UnivariateSeries sinh_ratio(int k, int order);

/// (2/x) sinh(x/2) truncated.
UnivariateSeries v_series(int order);

/// (x/2) cosech(x/2) truncated.
UnivariateSeries f_series(int order);

}  // namespace dhn
