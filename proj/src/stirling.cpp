#include "apcycles/stirling.hpp"

#include <sstream>
#include <stdexcept>

#include "apcycles/series.hpp"

namespace apc {

const BigInt& StirlingTable::at(int n, int k) const {
    if (n < 0 || n > n_max || k < 0 || k > n)
        throw std::out_of_range("StirlingTable::at: index outside table");
    return values[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt StirlingTable::row_sum(int n) const {
    if (n < 0 || n > n_max) throw std::out_of_range("StirlingTable::row_sum: n outside table");
    BigInt s;
    for (const BigInt& v : values[static_cast<std::size_t>(n)]) s += v;
    return s;
}

static void check_table_args(int r, int n_max) {
    if (r < 1 || r > 3) throw std::invalid_argument("stirling_table: r must be 1, 2 or 3");
    if (n_max < r) throw std::invalid_argument("stirling_table: n_max must be >= r");
    if (n_max > kMaxExactN)
        throw std::invalid_argument("stirling_table: n_max exceeds exact-arithmetic cap");
}

StirlingTable stirling_table(int r, int n_max) {
    check_table_args(r, n_max);
    StirlingTable t;
    t.r = r;
    t.n_max = n_max;
    t.values.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        t.values[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);

    auto& v = t.values;
    v[0][0] = BigInt(1);
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k * r <= n; ++k) {
            // n inserted into an existing cycle...
            BigInt acc;
            if (k <= n - 1) acc = v[n - 1][k] * (n - 1);
            // ...or opening a fresh shortest cycle.
            switch (r) {
                case 1:
                    acc += v[n - 1][k - 1];
                    break;
                case 2:
                    if (n >= 2 && k - 1 <= n - 2) acc += v[n - 2][k - 1] * (n - 1);
                    break;
                case 3:
                    if (n >= 3 && k - 1 <= n - 3)
                        acc += v[n - 3][k - 1] * (n - 1) * (n - 2);
                    break;
                default:
                    break;
            }
            v[n][k] = acc;
        }
    }
    return t;
}

StirlingTable stirling_table_egf(int r, int n_max) {
    check_table_args(r, n_max);
    const std::size_t order = static_cast<std::size_t>(n_max) + 1;

    // L(x) = -log(1-x) - p_r(x), the per-cycle EGF for cycles of length >= r.
    PowerSeries cycle_egf = PowerSeries::log_one_minus_x(order).scaled(BigRational(-1));
    if (r >= 2) cycle_egf.set_coeff(1, BigRational(0));
    if (r >= 3) cycle_egf.set_coeff(2, BigRational(0));

    StirlingTable t;
    t.r = r;
    t.n_max = n_max;
    t.values.resize(order);
    for (int n = 0; n <= n_max; ++n)
        t.values[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    t.values[0][0] = BigInt(1);

    std::vector<BigInt> factorial(order);
    factorial[0] = BigInt(1);
    for (std::size_t n = 1; n < order; ++n) factorial[n] = factorial[n - 1] * static_cast<long>(n);

    // power_k = L^k / k!, so d_r(n,k) = n! [x^n] power_k.
    PowerSeries power_k = PowerSeries::one(order);
    for (int k = 1; k * r <= n_max; ++k) {
        power_k = (power_k * cycle_egf).scaled(BigRational(1, k));
        for (int n = k * r; n <= n_max; ++n) {
            BigRational d = power_k.coeff(static_cast<std::size_t>(n)) *
                            BigRational(factorial[static_cast<std::size_t>(n)]);
            if (d.denominator() != BigInt(1))
                throw std::logic_error("stirling_table_egf: non-integer count");
            t.values[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = d.numerator();
        }
    }
    return t;
}

BigInt derangement_number(int n) {
    if (n < 0) throw std::invalid_argument("derangement_number: n must be >= 0");
    if (n == 0) return BigInt(1);
    if (n == 1) return BigInt(0);
    BigInt prev2(1), prev1(0);
    for (int m = 2; m <= n; ++m) {
        BigInt cur = (prev1 + prev2) * (m - 1);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

std::string stirling_csv(const StirlingTable& table) {
    std::ostringstream out;
    out << "r,n,k,d\n";
    for (int n = 0; n <= table.n_max; ++n)
        for (int k = 0; k <= n; ++k)
            out << table.r << ',' << n << ',' << k << ',' << table.at(n, k).to_string() << '\n';
    return out.str();
}

}  // namespace apc
