#pragma once

#include <vector>

#include "schroder/bigint.hpp"

namespace schroder {

/// Truncated power series with exact integer coefficients, dense up to a
/// fixed order. Just enough arithmetic for generating-function
/// cross-checks; no symbolic algebra.
class PowerSeries {
 public:
  /// The zero series modulo x^(order+1).
  explicit PowerSeries(int order);

  /// The Catalan generating function truncated at order.
  static PowerSeries catalan(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const { return coeffs_.at(i); }
  BigInt& coeff(int i) { return coeffs_.at(i); }

  PowerSeries operator+(const PowerSeries& rhs) const;
  PowerSeries operator-(const PowerSeries& rhs) const;
  PowerSeries operator*(const PowerSeries& rhs) const;

  /// Multiplies by 1/(1-x)^times, i.e. takes iterated partial sums.
  PowerSeries divided_by_one_minus_x(int times = 1) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

}  // namespace schroder
