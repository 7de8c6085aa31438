#include "apcycles/analytic.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <deque>
#include <stdexcept>

#include "apcycles/series.hpp"
#include "apcycles/stirling.hpp"

namespace apc {

namespace {

void check_rn(int r, int n) {
    if (r < 1 || r > 3) throw std::invalid_argument("expected_cycles: r must be 1, 2 or 3");
    if (n < r) throw std::invalid_argument("expected_cycles: n must be >= r");
    if (n > kMaxExactN)
        throw std::invalid_argument("expected_cycles: n exceeds exact-arithmetic cap");
}

// exp(-p_r(x)) / (1 - x), the EGF of permutations with all cycles >= r.
PowerSeries restricted_perm_egf(int r, std::size_t order) {
    PowerSeries p(order);
    if (r >= 2) p.set_coeff(1, BigRational(-1));
    if (r >= 3 && order > 2) p.set_coeff(2, BigRational(-1, 2));
    return p.exp() * PowerSeries::geometric(order);
}

// (log(1-x) + p_r(x)) * exp(-p_r(x)) / (1 - x); its n-th coefficient, sign
// flipped, carries sum_k k d_r(n,k) / n!.
PowerSeries cycle_count_egf(int r, std::size_t order) {
    PowerSeries lead = PowerSeries::log_one_minus_x(order);
    if (r >= 2) {
        BigRational c = lead.coeff(1) + BigRational(1);
        lead.set_coeff(1, c);
    }
    if (r >= 3 && order > 2) {
        BigRational c = lead.coeff(2) + BigRational(1, 2);
        lead.set_coeff(2, c);
    }
    return lead * restricted_perm_egf(r, order);
}

// Expansion coefficients printed after the two closed forms, i = 1..11.
const std::array<BigRational, 11>& expansion_coefficients(Regime regime) {
    static const std::array<BigRational, 11> lambda_zero = {
        BigRational(1),         BigRational(-1, 2),   BigRational(-1, 6),
        BigRational(1, 4),      BigRational(8, 15),   BigRational(1, 12),
        BigRational(-85, 42),   BigRational(-125, 24), BigRational(13, 90),
        BigRational(479, 10),   BigRational(5800, 33)};
    static const std::array<BigRational, 11> lambda_minus_one = {
        BigRational(2),          BigRational(-3, 2),     BigRational(-5, 6),
        BigRational(7, 4),       BigRational(106, 15),   BigRational(67, 12),
        BigRational(-2627, 42),  BigRational(-8633, 24), BigRational(47929, 90),
        BigRational(31758, 5),   BigRational(1989059, 33)};
    return regime == Regime::LambdaZero ? lambda_zero : lambda_minus_one;
}

}  // namespace

BigRational harmonic(int n) {
    if (n < 1) throw std::invalid_argument("harmonic: n must be >= 1");
    BigRational h;
    for (int m = 1; m <= n; ++m) h += BigRational(1, m);
    return h;
}

std::vector<BigRational> expected_cycles_exact_all(int r, int n_max) {
    check_rn(r, n_max);
    // Rolling recurrence rows; only rows n-1 .. n-3 are ever needed.
    std::deque<std::vector<BigInt>> rows;
    rows.push_front({BigInt(1)});  // n = 0
    std::vector<BigRational> out;
    out.reserve(static_cast<std::size_t>(n_max - r) + 1);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
        const auto& prev1 = rows[0];
        for (int k = 1; k * r <= n; ++k) {
            BigInt acc;
            if (k <= n - 1) acc = prev1[static_cast<std::size_t>(k)] * (n - 1);
            switch (r) {
                case 1:
                    acc += prev1[static_cast<std::size_t>(k - 1)];
                    break;
                case 2:
                    if (n >= 2 && k - 1 <= n - 2)
                        acc += rows[1][static_cast<std::size_t>(k - 1)] * (n - 1);
                    break;
                case 3:
                    if (n >= 3 && k - 1 <= n - 3)
                        acc += rows[2][static_cast<std::size_t>(k - 1)] * (n - 1) * (n - 2);
                    break;
                default:
                    break;
            }
            row[static_cast<std::size_t>(k)] = std::move(acc);
        }
        rows.push_front(std::move(row));
        if (rows.size() > 3) rows.pop_back();

        if (n >= r) {
            BigInt total, weighted;
            const auto& cur = rows[0];
            for (int k = 1; k <= n; ++k) {
                total += cur[static_cast<std::size_t>(k)];
                weighted += cur[static_cast<std::size_t>(k)] * k;
            }
            out.emplace_back(weighted, total);
        }
    }
    return out;
}

BigRational expected_cycles_exact(int r, int n) {
    check_rn(r, n);
    return expected_cycles_exact_all(r, n).back();
}

std::vector<BigRational> expected_cycles_series_all(int r, int n_max) {
    check_rn(r, n_max);
    const std::size_t order = static_cast<std::size_t>(n_max) + 1;
    PowerSeries den = restricted_perm_egf(r, order);
    PowerSeries num = cycle_count_egf(r, order);
    std::vector<BigRational> out;
    out.reserve(static_cast<std::size_t>(n_max - r) + 1);
    for (int n = r; n <= n_max; ++n) {
        const std::size_t k = static_cast<std::size_t>(n);
        out.push_back(-(num.coeff(k) / den.coeff(k)));
    }
    return out;
}

BigRational expected_cycles_series(int r, int n) {
    check_rn(r, n);
    const std::size_t order = static_cast<std::size_t>(n) + 1;
    PowerSeries den = restricted_perm_egf(r, order);
    PowerSeries num = cycle_count_egf(r, order);
    return -(num.coeff(static_cast<std::size_t>(n)) / den.coeff(static_cast<std::size_t>(n)));
}

double expected_cycles_asymptotic(Regime regime, int n) {
    if (n < 12)
        throw std::invalid_argument("expected_cycles_asymptotic: expansion needs n >= 12");
    double h = 0.0;
    for (int m = n; m >= 1; --m) h += 1.0 / m;
    double value = h - (regime == Regime::LambdaZero ? 1.0 : 1.5);
    const auto& c = expansion_coefficients(regime);
    double inv = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        inv /= n;
        value += c[i].to_double() * inv;
    }
    return value;
}

BigRational expected_cycles_asymptotic_exact(Regime regime, int n) {
    if (n < 12)
        throw std::invalid_argument("expected_cycles_asymptotic: expansion needs n >= 12");
    if (n > kMaxExactN)
        throw std::invalid_argument("expected_cycles_asymptotic: n exceeds exact-arithmetic cap");
    BigRational value = harmonic(n) - (regime == Regime::LambdaZero ? BigRational(1)
                                                                    : BigRational(3, 2));
    const auto& c = expansion_coefficients(regime);
    BigRational inv(1);
    const BigRational n_rat(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
        inv /= n_rat;
        value += c[i] * inv;
    }
    return value;
}

double p_n_cycle_theory(PnRegime regime, int n) {
    if (n < 3) throw std::invalid_argument("p_n_cycle_theory: n must be >= 3");
    const double numerator =
        regime == PnRegime::LambdaNegative ? std::exp(1.5) : std::exp(1.0);
    return numerator / n;
}

double parisi_length(int n) {
    if (n < 1) throw std::invalid_argument("parisi_length: n must be >= 1");
    double s = 0.0;
    for (int m = n; m >= 1; --m) s += 1.0 / (static_cast<double>(m) * m);
    return s;
}

LinearFit fit_linear(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("fit_linear: need at least 3 points");
    const double count = static_cast<double>(points.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= count;
    mean_y /= count;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
        syy += (y - mean_y) * (y - mean_y);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_linear: all x values equal");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    if (syy == 0.0) {
        fit.r_squared = 1.0;  // exact horizontal fit
    } else {
        double ss_res = 0.0;
        for (const auto& [x, y] : points) {
            const double e = y - (fit.slope * x + fit.intercept);
            ss_res += e * e;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

}  // namespace apc
