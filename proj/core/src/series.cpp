#include "schroder/series.hpp"

#include "schroder/counting.hpp"
#include "schroder/error.hpp"

namespace schroder {
namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::ArgOutOfRange, "series orders differ");
  }
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw Error(Errc::ArgOutOfRange, "order must be >= 0");
  coeffs_.assign(order + 1, BigInt(0));
}

PowerSeries PowerSeries::catalan(int order) {
  PowerSeries s(order);
  for (int i = 0; i <= order; ++i) s.coeffs_[i] = counting::catalan(i);
  return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
  require_same_order(*this, rhs);
  PowerSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
  }
  return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& rhs) const {
  require_same_order(*this, rhs);
  PowerSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
  }
  return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
  require_same_order(*this, rhs);
  PowerSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order(); ++j) {
      out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

PowerSeries PowerSeries::divided_by_one_minus_x(int times) const {
  if (times < 0) throw Error(Errc::ArgOutOfRange, "times must be >= 0");
  PowerSeries out = *this;
  for (int t = 0; t < times; ++t) {
    for (int i = 1; i <= order(); ++i) {
      out.coeffs_[i] += out.coeffs_[i - 1];  // partial sums
    }
  }
  return out;
}

}  // namespace schroder
