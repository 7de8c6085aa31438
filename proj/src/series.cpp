#include "apcycles/series.hpp"

#include <stdexcept>

namespace apc {

PowerSeries::PowerSeries(std::size_t order) : coeff_(order) {
    if (order == 0) throw std::invalid_argument("PowerSeries: order must be >= 1");
}

PowerSeries::PowerSeries(std::vector<BigRational> coefficients) : coeff_(std::move(coefficients)) {
    if (coeff_.empty()) throw std::invalid_argument("PowerSeries: order must be >= 1");
}

const BigRational& PowerSeries::coeff(std::size_t k) const {
    if (k >= coeff_.size()) throw std::out_of_range("PowerSeries: coefficient index past order");
    return coeff_[k];
}

void PowerSeries::set_coeff(std::size_t k, BigRational value) {
    if (k >= coeff_.size()) throw std::out_of_range("PowerSeries: coefficient index past order");
    coeff_[k] = std::move(value);
}

PowerSeries PowerSeries::one(std::size_t order) {
    PowerSeries s(order);
    s.coeff_[0] = BigRational(1);
    return s;
}

PowerSeries PowerSeries::geometric(std::size_t order) {
    PowerSeries s(order);
    for (std::size_t k = 0; k < order; ++k) s.coeff_[k] = BigRational(1);
    return s;
}

PowerSeries PowerSeries::log_one_minus_x(std::size_t order) {
    PowerSeries s(order);
    for (std::size_t k = 1; k < order; ++k) s.coeff_[k] = BigRational(-1, static_cast<long>(k));
    return s;
}

static void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("PowerSeries: mismatched truncation orders");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    require_same_order(*this, o);
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    require_same_order(*this, o);
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const std::size_t m = a.order();
    PowerSeries out(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeff_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < m; ++j) {
            if (b.coeff_[j].is_zero()) continue;
            out.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order() == b.order() && a.coeff_ == b.coeff_;
}

PowerSeries PowerSeries::scaled(const BigRational& c) const {
    PowerSeries out(*this);
    for (auto& x : out.coeff_) x *= c;
    return out;
}

PowerSeries PowerSeries::exp() const {
    if (!coeff_[0].is_zero())
        throw std::domain_error("PowerSeries::exp: constant term must be 0");
    const std::size_t m = order();
    PowerSeries g(m);
    g.coeff_[0] = BigRational(1);
    // g' = f' g  =>  k g_k = sum_{j=1..k} j f_j g_{k-j}
    for (std::size_t k = 1; k < m; ++k) {
        BigRational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (coeff_[j].is_zero()) continue;
            acc += BigRational(static_cast<long>(j)) * coeff_[j] * g.coeff_[k - j];
        }
        g.coeff_[k] = acc / BigRational(static_cast<long>(k));
    }
    return g;
}

PowerSeries PowerSeries::log() const {
    if (coeff_[0] != BigRational(1))
        throw std::domain_error("PowerSeries::log: constant term must be 1");
    const std::size_t m = order();
    PowerSeries h(m);
    // f = exp(h)  =>  k f_k = sum_{j=1..k} j h_j f_{k-j}, solved for h_k.
    for (std::size_t k = 1; k < m; ++k) {
        BigRational acc = BigRational(static_cast<long>(k)) * coeff_[k];
        for (std::size_t j = 1; j < k; ++j) {
            if (h.coeff_[j].is_zero()) continue;
            acc -= BigRational(static_cast<long>(j)) * h.coeff_[j] * coeff_[k - j];
        }
        h.coeff_[k] = acc / BigRational(static_cast<long>(k));
    }
    return h;
}

PowerSeries PowerSeries::inverse() const {
    return PowerSeries::one(order()).divide(*this);
}

PowerSeries PowerSeries::divide(const PowerSeries& g) const {
    require_same_order(*this, g);
    if (g.coeff_[0].is_zero())
        throw std::domain_error("PowerSeries::divide: divisor has zero constant term");
    const std::size_t m = order();
    PowerSeries q(m);
    for (std::size_t k = 0; k < m; ++k) {
        BigRational acc = coeff_[k];
        for (std::size_t j = 1; j <= k; ++j) {
            if (g.coeff_[j].is_zero()) continue;
            acc -= g.coeff_[j] * q.coeff_[k - j];
        }
        q.coeff_[k] = acc / g.coeff_[0];
    }
    return q;
}

}  // namespace apc
