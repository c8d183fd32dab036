#include "goodgrad/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace goodgrad {

PowerSeries::PowerSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, mpz_class(0));
}

PowerSeries PowerSeries::monomial(int order, int k, long c) {
    PowerSeries s(order);
    if (k >= 0 && k <= order) s[k] = c;
    return s;
}

PowerSeries PowerSeries::geometric(int order, int k) {
    if (k < 1) throw std::invalid_argument("geometric series needs k >= 1");
    PowerSeries s(order);
    for (int e = 0; e <= order; e += k) s[e] = 1;
    return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    *this = truncated(std::min(order_, o.order_));
    for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    *this = truncated(std::min(order_, o.order_));
    for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order_, b.order_);
    PowerSeries p(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j] != 0) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return p;
}

PowerSeries PowerSeries::inverse() const {
    const mpz_class& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1) throw std::domain_error("series inverse needs constant term +-1");
    PowerSeries inv(order_);
    inv[0] = c0;
    for (int k = 1; k <= order_; ++k) {
        mpz_class s = 0;
        for (int j = 1; j <= k; ++j) s += coeffs_[j] * inv.coeffs_[k - j];
        inv[k] = -s * c0;
    }
    return inv;
}

PowerSeries PowerSeries::truncated(int order) const {
    PowerSeries s(std::min(order, order_));
    for (int k = 0; k <= s.order_; ++k) s.coeffs_[k] = coeffs_[k];
    return s;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string PowerSeries::to_string() const {
    std::string s;
    for (int k = 0; k <= order_; ++k) {
        if (k) s += ",";
        s += coeffs_[k].get_str();
    }
    return s;
}

namespace {

// (1 + q^k) / (1 - q^k)^2
PowerSeries pyramid_factor(int order, int k) {
    const PowerSeries g = PowerSeries::geometric(order, k);
    return (PowerSeries::one(order) + PowerSeries::monomial(order, k, 1)) * g * g;
}

}  // namespace

PowerSeries pyramid_closed_form(int order) {
    PowerSeries f(order);
    PowerSeries prefix = PowerSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        f += prefix * PowerSeries::monomial(order, n, 1) * PowerSeries::geometric(order, n);
        prefix = prefix * pyramid_factor(order, n);
    }
    return f;
}

PowerSeries pentagonal_product_form(int order) {
    PowerSeries product = PowerSeries::one(order);
    for (int k = 1; k <= order; ++k) product = product * pyramid_factor(order, k);
    PowerSeries sum(order);
    for (int n = 1; (3 * n * n - n) / 2 <= order; ++n) {
        sum += PowerSeries::monomial(order, (3 * n * n - n) / 2, 1);
        sum -= PowerSeries::monomial(order, (3 * n * n + n) / 2, 1);
    }
    return sum * product;
}

bool andrews_identity_check(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    return pyramid_closed_form(order) == pentagonal_product_form(order);
}

PowerSeries unimodal_generating_function(int order) {
    PowerSeries product = PowerSeries::one(order);
    for (int k = 1; k <= order; ++k) {
        const PowerSeries g = PowerSeries::geometric(order, k);
        product = product * g * g;
    }
    PowerSeries sum(order);
    for (int n = 1; n * (n + 1) / 2 <= order; ++n) {
        sum += PowerSeries::monomial(order, n * (n + 1) / 2, n % 2 == 1 ? 1 : -1);
    }
    return sum * product;
}

}  // namespace goodgrad
