#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystals/rational.hpp"

namespace crystals {

// A truncated Laurent series sum_k c_k t^k over Q, known modulo t^precision:
// coefficients with exponent >= precision are unknown and never stored.
//
// Precision follows the usual rules: a sum is known up to the smaller of
// the two precisions, a product a*b up to min(prec(a) + v(b), prec(b) + v(a))
// where v is the valuation (or the precision for a series with no known
// nonzero coefficient).
class TruncSeries {
 public:
  // Valuation decisions require a nonzero coefficient at an exponent below
  // precision() - kGuard.
  static constexpr int kGuard = 8;

  explicit TruncSeries(int precision = 0) : precision_(precision), offset_(precision) {}
  // sum_k coeffs[k] t^(offset + k) mod t^precision.
  TruncSeries(int offset, std::vector<Rational> coeffs, int precision);

  static TruncSeries zero(int precision) { return TruncSeries(precision); }
  static TruncSeries monomial(const Rational& c, int exponent, int precision);
  static TruncSeries one(int precision) { return monomial(1, 0, precision); }

  int precision() const { return precision_; }
  // Exponent of the lowest nonzero known coefficient, if any.
  std::optional<int> valuation() const;
  // Lower bound on the true valuation: valuation() or precision().
  int valuation_bound() const;
  // valuation() if it is below precision() - kGuard; otherwise throws
  // PrecisionExhausted.
  int certified_valuation() const;
  bool is_known_zero() const { return !valuation().has_value(); }

  Rational coefficient(int exponent) const;
  // Smallest exponent with a stored coefficient slot (may be > valuation()).
  int offset() const { return offset_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  // Multiplication by t^k.
  TruncSeries shifted(int k) const;
  // Inverse of a series with certified valuation v; precision becomes
  // precision() - 2v.
  TruncSeries inverse() const;
  // Terms with exponent < bound; the result is exact (a Laurent polynomial
  // whose precision is `bound`). Throws PrecisionExhausted if precision() <
  // bound.
  TruncSeries truncated_below(int bound) const;
  TruncSeries with_precision(int precision) const;

  // Equality of known coefficients up to the smaller precision.
  bool congruent(const TruncSeries& o) const;

  std::string str() const;

 private:
  void normalize();

  int precision_;
  int offset_;
  std::vector<Rational> coeffs_;
};

}  // namespace crystals
