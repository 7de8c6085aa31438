#pragma once

#include <cstddef>
#include <vector>

#include "apcycles/rational.hpp"

namespace apc {

// Truncated formal power series with exact rational coefficients.
// A series of order m carries the coefficients of x^0 .. x^(m-1); all
// arithmetic is exact up to that truncation order.
class PowerSeries {
  public:
    explicit PowerSeries(std::size_t order);
    PowerSeries(std::vector<BigRational> coefficients);

    std::size_t order() const { return coeff_.size(); }
    const BigRational& coeff(std::size_t k) const;
    void set_coeff(std::size_t k, BigRational value);

    static PowerSeries zero(std::size_t order) { return PowerSeries(order); }
    static PowerSeries one(std::size_t order);
    // 1/(1-x) = sum_k x^k.
    static PowerSeries geometric(std::size_t order);
    // log(1-x) = -sum_{k>=1} x^k/k.
    static PowerSeries log_one_minus_x(std::size_t order);

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

    PowerSeries scaled(const BigRational& c) const;

    // exp(f); requires f(0) = 0.
    PowerSeries exp() const;
    // log(f); requires f(0) = 1.
    PowerSeries log() const;
    // 1/f; requires f(0) != 0.
    PowerSeries inverse() const;
    // f/g; requires g(0) != 0.
    PowerSeries divide(const PowerSeries& g) const;

  private:
    std::vector<BigRational> coeff_;
};

}  // namespace apc
