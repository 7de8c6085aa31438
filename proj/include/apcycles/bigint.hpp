#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace apc {

// Arbitrary-precision signed integer. Thin value-semantic wrapper over GMP.
class BigInt {
  public:
    BigInt() { mpz_init(v_); }

    BigInt(long x) { mpz_init_set_si(v_, x); }  // NOLINT: implicit by design

    explicit BigInt(const std::string& decimal) {
        if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw std::invalid_argument("BigInt: not a decimal integer: " + decimal);
        }
    }

    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sign() const { return mpz_sgn(v_); }

    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(long x) {
        mpz_mul_si(v_, v_, x);
        return *this;
    }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator*(BigInt a, long b) { return a *= b; }
    friend BigInt operator*(long a, BigInt b) { return b *= a; }
    friend BigInt operator-(BigInt a) {
        mpz_neg(a.v_, a.v_);
        return a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    double to_double() const { return mpz_get_d(v_); }

    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("BigInt: value does not fit in long");
        return mpz_get_si(v_);
    }

    static BigInt factorial(unsigned long n) {
        BigInt r;
        mpz_fac_ui(r.v_, n);
        return r;
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }

    // Internal handle, used by BigRational.
    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

  private:
    mpz_t v_;
};

}  // namespace apc
