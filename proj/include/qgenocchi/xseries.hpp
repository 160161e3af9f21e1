#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpoly.hpp"

namespace qgen {

/// Truncated power series in x with QPoly coefficients.
///
/// A series of order N stores exactly the coefficients of x^0 .. x^{N-1};
/// arithmetic never reads or writes beyond the truncation.  Mixing two
/// series of different orders is an error, so precision can only be changed
/// through the explicit with_order conversion.
class XSeries {
public:
  explicit XSeries(int order) : coeffs_(check_order(order)) {}

  int order() const { return static_cast<int>(coeffs_.size()); }

  const QPoly& coeff(int k) const {
    if (k < 0 || k >= order()) throw std::invalid_argument("XSeries::coeff: index outside truncation");
    return coeffs_[static_cast<size_t>(k)];
  }

  void set_coeff(int k, QPoly p) {
    if (k < 0 || k >= order()) throw std::invalid_argument("XSeries::set_coeff: index outside truncation");
    coeffs_[static_cast<size_t>(k)] = std::move(p);
  }

  XSeries with_order(int new_order) const {
    XSeries r(new_order);
    const int n = std::min(order(), new_order);
    for (int k = 0; k < n; ++k) r.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)];
    return r;
  }

  XSeries& operator+=(const XSeries& o) {
    require_same_order(o);
    for (int k = 0; k < order(); ++k) coeffs_[static_cast<size_t>(k)] += o.coeffs_[static_cast<size_t>(k)];
    return *this;
  }

  XSeries& operator-=(const XSeries& o) {
    require_same_order(o);
    for (int k = 0; k < order(); ++k) coeffs_[static_cast<size_t>(k)] -= o.coeffs_[static_cast<size_t>(k)];
    return *this;
  }

  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }

  friend XSeries operator*(const XSeries& a, const XSeries& b) {
    a.require_same_order(b);
    XSeries r(a.order());
    for (int i = 0; i < a.order(); ++i) {
      if (a.coeffs_[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j < a.order(); ++j) {
        if (b.coeffs_[static_cast<size_t>(j)].is_zero()) continue;
        r.coeffs_[static_cast<size_t>(i + j)] +=
            a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
      }
    }
    return r;
  }

  friend bool operator==(const XSeries& a, const XSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const XSeries& a, const XSeries& b) { return !(a == b); }

private:
  static size_t check_order(int order) {
    if (order < 0) throw std::invalid_argument("XSeries: negative order");
    return static_cast<size_t>(order);
  }

  void require_same_order(const XSeries& o) const {
    if (order() != o.order())
      throw std::invalid_argument("XSeries: order mismatch (" + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()) + ")");
  }

  std::vector<QPoly> coeffs_;
};

/// (x; q)_n as an exact polynomial in x of degree n (series of order n+1),
/// via the expansion whose x^k coefficient is (-1)^k [n,k]_q q^{k(k-1)/2}.
inline XSeries pochhammer_x(int n) {
  if (n < 0) throw std::invalid_argument("pochhammer_x: negative argument");
  XSeries r(n + 1);
  for (int k = 0; k <= n; ++k) {
    QPoly term = qbinom(n, k).shifted_up(k * (k - 1) / 2);
    r.set_coeff(k, (k % 2 == 0) ? term : -term);
  }
  return r;
}

/// (x; q)_n computed as the product (1 - x)(1 - xq)...(1 - xq^{n-1}).
inline XSeries pochhammer_x_by_product(int n) {
  if (n < 0) throw std::invalid_argument("pochhammer_x_by_product: negative argument");
  XSeries r(n + 1);
  r.set_coeff(0, QPoly(1));
  for (int f = 0; f < n; ++f) {
    // multiply in place by (1 - x q^f), highest coefficient first
    for (int k = n; k >= 1; --k) r.set_coeff(k, r.coeff(k) - r.coeff(k - 1).shifted_up(f));
  }
  return r;
}

}  // namespace qgen
