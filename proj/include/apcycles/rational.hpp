#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "apcycles/bigint.hpp"

namespace apc {

// Exact rational number, always kept in lowest terms with a positive denominator.
class BigRational {
  public:
    BigRational() { mpq_init(v_); }

    BigRational(long x) {  // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_si(v_, x, 1);
    }

    BigRational(long num, long den) {
        if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }

    explicit BigRational(const BigInt& num) {
        mpq_init(v_);
        mpq_set_z(v_, num.raw());
    }

    BigRational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::invalid_argument("BigRational: zero denominator");
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }

    BigRational(const BigRational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRational(BigRational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRational& operator=(BigRational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRational() { mpq_clear(v_); }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }

    BigInt numerator() const {
        BigInt r;
        mpz_set(r.raw(), mpq_numref(v_));
        return r;
    }
    BigInt denominator() const {
        BigInt r;
        mpz_set(r.raw(), mpq_denref(v_));
        return r;
    }

    BigRational& operator+=(const BigRational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(BigRational a) {
        mpq_neg(a.v_, a.v_);
        return a;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return b <= a; }

    BigRational abs() const {
        BigRational r(*this);
        mpq_abs(r.v_, r.v_);
        return r;
    }

    double to_double() const { return mpq_get_d(v_); }

    // "a/b", or just "a" for integers.
    std::string to_string() const {
        std::string n = numerator().to_string();
        BigInt d = denominator();
        if (d == BigInt(1)) return n;
        return n + "/" + d.to_string();
    }

  private:
    mpq_t v_;
};

}  // namespace apc
