#include "crystals/series.hpp"

#include <algorithm>
#include <climits>

#include "crystals/errors.hpp"

namespace crystals {

TruncSeries::TruncSeries(int offset, std::vector<Rational> coeffs, int precision)
    : precision_(precision), offset_(offset), coeffs_(std::move(coeffs)) {
  normalize();
}

TruncSeries TruncSeries::monomial(const Rational& c, int exponent, int precision) {
  return TruncSeries(exponent, {c}, precision);
}

void TruncSeries::normalize() {
  if (offset_ >= precision_) {
    coeffs_.clear();
  } else if (static_cast<long>(offset_) + static_cast<long>(coeffs_.size()) > precision_) {
    coeffs_.resize(precision_ - offset_);
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = precision_;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  offset_ += static_cast<int>(lead);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> TruncSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return offset_;
}

int TruncSeries::valuation_bound() const { return coeffs_.empty() ? precision_ : offset_; }

int TruncSeries::certified_valuation() const {
  if (coeffs_.empty() || offset_ >= precision_ - kGuard) {
    throw PrecisionExhausted("valuation cannot be certified: no nonzero coefficient below t^" +
                             std::to_string(precision_ - kGuard) + " (precision " +
                             std::to_string(precision_) + ")");
  }
  return offset_;
}

Rational TruncSeries::coefficient(int exponent) const {
  if (exponent >= precision_) {
    throw PrecisionExhausted("coefficient of t^" + std::to_string(exponent) +
                             " is beyond precision " + std::to_string(precision_));
  }
  const long k = static_cast<long>(exponent) - offset_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[k];
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  const int precision = std::min(precision_, o.precision_);
  if (coeffs_.empty()) return o.with_precision(precision);
  if (o.coeffs_.empty()) return with_precision(precision);
  const int lo = std::min(offset_, o.offset_);
  const int hi = std::min(precision,
                          std::max(offset_ + static_cast<int>(coeffs_.size()),
                                   o.offset_ + static_cast<int>(o.coeffs_.size())));
  std::vector<Rational> out(std::max(hi - lo, 0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const int e = offset_ + static_cast<int>(k);
    if (e < hi) out[e - lo] += coeffs_[k];
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    const int e = o.offset_ + static_cast<int>(k);
    if (e < hi) out[e - lo] += o.coeffs_[k];
  }
  return TruncSeries(lo, std::move(out), precision);
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  const long p1 = static_cast<long>(precision_) + o.valuation_bound();
  const long p2 = static_cast<long>(o.precision_) + valuation_bound();
  const int precision = static_cast<int>(std::min(p1, p2));
  if (coeffs_.empty() || o.coeffs_.empty()) return zero(precision);
  const int lo = offset_ + o.offset_;
  const int len = std::min(static_cast<int>(coeffs_.size() + o.coeffs_.size()) - 1,
                           std::max(precision - lo, 0));
  std::vector<Rational> out(len);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < o.coeffs_.size() && static_cast<int>(a + b) < len; ++b) {
      out[a + b] += coeffs_[a] * o.coeffs_[b];
    }
  }
  return TruncSeries(lo, std::move(out), precision);
}

TruncSeries TruncSeries::shifted(int k) const {
  TruncSeries out = *this;
  out.precision_ += k;
  out.offset_ += k;
  return out;
}

TruncSeries TruncSeries::inverse() const {
  const int v = certified_valuation();
  // this = t^v * u with u = c_0 + c_1 t + ..., known mod t^(precision - v).
  const int terms = std::max(precision_ - v, 0);
  std::vector<Rational> inv(terms);
  const Rational lead_inv = 1 / coeffs_[0];
  for (int k = 0; k < terms; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= k && j < static_cast<int>(coeffs_.size()); ++j) {
      acc -= coeffs_[j] * inv[k - j];
    }
    inv[k] = acc * lead_inv;
  }
  return TruncSeries(-v, std::move(inv), precision_ - 2 * v);
}

TruncSeries TruncSeries::truncated_below(int bound) const {
  if (precision_ < bound) {
    throw PrecisionExhausted("need coefficients below t^" + std::to_string(bound) +
                             ", precision is " + std::to_string(precision_));
  }
  std::vector<Rational> kept;
  for (std::size_t k = 0; k < coeffs_.size() && offset_ + static_cast<int>(k) < bound; ++k) {
    kept.push_back(coeffs_[k]);
  }
  return TruncSeries(offset_, std::move(kept), bound);
}

TruncSeries TruncSeries::with_precision(int precision) const {
  TruncSeries out = *this;
  out.precision_ = std::min(precision, precision_);
  out.normalize();
  return out;
}

bool TruncSeries::congruent(const TruncSeries& o) const {
  const int precision = std::min(precision_, o.precision_);
  return (with_precision(precision) - o.with_precision(precision)).is_known_zero();
}

std::string TruncSeries::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].get_str() + ")t^" + std::to_string(offset_ + static_cast<int>(k));
  }
  if (out.empty()) out = "0";
  return out + " + O(t^" + std::to_string(precision_) + ")";
}

}  // namespace crystals
