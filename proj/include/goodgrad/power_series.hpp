#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace goodgrad {

/// Integer power series in q truncated after q^order. Every operation
/// truncates eagerly; mixing orders keeps the smaller one.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    static PowerSeries one(int order) { return monomial(order, 0, 1); }
    /// c * q^k (zero if k > order).
    static PowerSeries monomial(int order, int k, long c);
    /// 1 / (1 - q^k), k >= 1.
    static PowerSeries geometric(int order, int k);

    int order() const { return order_; }
    const mpz_class& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    mpz_class& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    /// Multiplicative inverse; requires constant term +-1.
    PowerSeries inverse() const;
    PowerSeries truncated(int order) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b);
    std::string to_string() const;

private:
    int order_;
    std::vector<mpz_class> coeffs_;
};

/// sum_{n>=1} prod_{k<n} (1+q^k)/(1-q^k)^2 * q^n/(1-q^n).
PowerSeries pyramid_closed_form(int order);
/// sum_{n>=1} (q^{(3n^2-n)/2} - q^{(3n^2+n)/2}) * prod_{k>=1} (1+q^k)/(1-q^k)^2.
PowerSeries pentagonal_product_form(int order);
/// True iff the two forms above agree through q^order.
bool andrews_identity_check(int order);
/// sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2} prod_{k>=1} 1/(1-q^k)^2.
PowerSeries unimodal_generating_function(int order);

}  // namespace goodgrad
