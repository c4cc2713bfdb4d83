#include "crystals/pgl2.hpp"

#include <algorithm>
#include <initializer_list>

#include "crystals/errors.hpp"

namespace crystals::pgl2 {

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

SeriesMatrix SeriesMatrix::scaled(int k) const {
  return {a.shifted(k), b.shifted(k), c.shifted(k), d.shifted(k)};
}

namespace {

// Minimum valuation over `entries`. The entry attaining it must have a
// certified valuation; entries known to be zero only count through their
// precision.
int certified_min_valuation(std::initializer_list<const TruncSeries*> entries) {
  int best = 0;
  const TruncSeries* arg = nullptr;
  for (const TruncSeries* s : entries) {
    const int v = s->valuation_bound();
    if (!arg || v < best) {
      best = v;
      arg = s;
    }
  }
  bool certified = false;
  for (const TruncSeries* s : entries) {
    if (s->valuation_bound() == best && !s->is_known_zero() &&
        best < s->precision() - TruncSeries::kGuard) {
      certified = true;
    }
  }
  if (!certified) {
    throw PrecisionExhausted("minimal entry valuation cannot be certified at precision " +
                             std::to_string(arg->precision()));
  }
  return best;
}

}  // namespace

GrassmannianPoint::GrassmannianPoint(SeriesMatrix matrix) : matrix_(std::move(matrix)) {}

int GrassmannianPoint::det_valuation() const { return matrix_.det().certified_valuation(); }

int GrassmannianPoint::orbit_label() const {
  const int d1 = certified_min_valuation({&matrix_.a, &matrix_.b, &matrix_.c, &matrix_.d});
  return det_valuation() - 2 * d1;
}

int GrassmannianPoint::iwasawa_label() const {
  return det_valuation() - 2 * certified_min_valuation({&matrix_.c, &matrix_.d});
}

CanonicalCoset GrassmannianPoint::canonical() const {
  // Center: bottom row gets minimal valuation 0.
  SeriesMatrix g = matrix_.scaled(-certified_min_valuation({&matrix_.c, &matrix_.d}));
  // Column swap so that d is a unit.
  if (g.d.valuation_bound() != 0) g = {g.b, g.a, g.d, g.c};
  if (g.d.certified_valuation() != 0) throw Error("bottom row normalization failed");
  const TruncSeries d_inv = g.d.inverse();
  // col1 -= col2 * (c / d); then col2 *= d^{-1}.
  TruncSeries a = g.a - g.b * (g.c * d_inv);
  TruncSeries b = g.b * d_inv;
  // col1 *= unit^{-1} leaves t^m; col2 -= col1 * q clears exponents >= m.
  const int m = a.certified_valuation();
  return CanonicalCoset{m, b.truncated_below(m)};
}

bool admissible(int l, int m) { return l >= 0 && l >= std::abs(m) && (l - m) % 2 == 0; }

GrassmannianPoint coset_from(int m, int l, const TruncSeries& p, int precision) {
  if (!admissible(l, m)) {
    throw Error("S^" + std::to_string(m) + " does not meet Gr^" + std::to_string(l) +
                " (need l - m even, l >= |m|)");
  }
  if (p.valuation_bound() != 0 || p.certified_valuation() != 0) {
    throw Error("p must be a unit of O (nonzero constant term)");
  }
  const int e = (m - l) / 2;
  return GrassmannianPoint(SeriesMatrix{TruncSeries::monomial(1, m, precision),
                                        p.shifted(e).with_precision(precision),
                                        TruncSeries::zero(precision),
                                        TruncSeries::one(precision)});
}

Rational RandomSeries::coefficient(bool nonzero) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  long n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  Rational q(n, static_cast<unsigned long>(den(rng)));
  q.canonicalize();
  return q;
}

TruncSeries RandomSeries::unit(int precision) {
  std::vector<Rational> c;
  c.push_back(coefficient(true));
  for (int k = 1; k < terms; ++k) c.push_back(coefficient(false));
  return TruncSeries(0, std::move(c), precision);
}

TruncSeries RandomSeries::integral(int precision) {
  std::vector<Rational> c;
  for (int k = 0; k < terms; ++k) c.push_back(coefficient(false));
  return TruncSeries(0, std::move(c), precision);
}

SeriesMatrix RandomSeries::parabolic(int precision) {
  TruncSeries u1 = unit(precision);
  TruncSeries q = integral(precision);
  TruncSeries u2 = unit(precision);
  return {std::move(u1), std::move(q), TruncSeries::zero(precision), std::move(u2)};
}

SeriesMatrix RandomSeries::integral_invertible(int precision) {
  SeriesMatrix upper = parabolic(precision);
  SeriesMatrix lower{TruncSeries::one(precision), TruncSeries::zero(precision),
                     integral(precision), TruncSeries::one(precision)};
  return upper * lower;
}

std::vector<TruncSeries> default_pool(int precision, std::uint64_t seed) {
  std::vector<TruncSeries> pool{
      TruncSeries::one(precision),
      TruncSeries(0, {1, 1}, precision),
      TruncSeries(0, {2, -3, 1}, precision),
  };
  RandomSeries rng(seed, 4);
  for (int k = 0; k < 3; ++k) pool.push_back(rng.unit(precision));
  return pool;
}

std::set<std::pair<int, int>> strata_census(int l_max, int precision,
                                            const std::vector<TruncSeries>& pool) {
  if (precision <= 2 * l_max) {
    throw Error("census needs precision > 2 * l_max (got precision " + std::to_string(precision) +
                ", l_max " + std::to_string(l_max) + ")");
  }
  std::set<std::pair<int, int>> attained;
  const int span = l_max + 2;
  // t^m, 0 and 1 are exact; precision 2N keeps them from limiting products
  // with the pool entries, which are known mod t^(N + v).
  const int exact = 2 * precision;
  for (int m = -span; m <= span; ++m) {
    std::vector<TruncSeries> xs{TruncSeries::zero(exact)};
    for (int v = -span; v <= span; ++v) {
      for (const TruncSeries& u : pool) xs.push_back(u.with_precision(precision).shifted(v));
    }
    for (const TruncSeries& x : xs) {
      const GrassmannianPoint g(SeriesMatrix{TruncSeries::monomial(1, m, exact), x,
                                             TruncSeries::zero(exact), TruncSeries::one(exact)});
      const int l = g.orbit_label();
      if (l <= l_max) attained.emplace(l, g.iwasawa_label());
    }
  }
  return attained;
}

GrassmannianPoint convolve(int l1, int m1, int l2, int m2, int precision, RandomSeries& rng) {
  const TruncSeries p1 = rng.unit(precision);
  const TruncSeries p2 = rng.unit(precision);
  const SeriesMatrix k = rng.parabolic(precision);
  const GrassmannianPoint g1 = coset_from(m1, l1, p1, precision) * GrassmannianPoint(k);
  return g1 * coset_from(m2, l2, p2, precision);
}

ConvolutionStats convolution_census(int l1, int m1, int l2, int m2, int precision, int samples,
                                    std::uint64_t seed) {
  ConvolutionStats stats{l1, m1, l2, m2, precision, samples, {}, {}, 0, 0};
  RandomSeries rng(seed);
  for (int s = 0; s < samples; ++s) {
    const GrassmannianPoint g = convolve(l1, m1, l2, m2, precision, rng);
    ++stats.orbit_labels[g.orbit_label()];
    ++stats.iwasawa_labels[g.iwasawa_label()];
  }
  for (const auto& [label, count] : stats.orbit_labels) {
    if (count > stats.generic_count) {
      stats.generic_label = label;
      stats.generic_count = count;
    }
  }
  return stats;
}

int convolution_label_stated(int l1, int m1, int l2, int m2) {
  return std::max(l1 - m2, m1 + l2);
}

int convolution_label_exchanged(int l1, int m1, int l2, int m2) {
  return std::max(l2 - m1, m2 + l1);
}

int stratum_parameter_count(int l, int m, int precision) {
  if (!admissible(l, m)) {
    throw Error("(l, m) = (" + std::to_string(l) + ", " + std::to_string(m) +
                ") is not admissible");
  }
  const int degrees = l + 4;
  RandomSeries rng(11, degrees);
  const TruncSeries p = rng.unit(precision);
  const CanonicalCoset base = coset_from(m, l, p, precision).canonical();
  int count = 0;
  for (int k = 0; k < degrees; ++k) {
    const TruncSeries perturbed = p + TruncSeries::monomial(1, k, precision);
    if (coset_from(m, l, perturbed, precision).canonical() != base) ++count;
  }
  return count;
}

Crystal crystal_from_pgl2(int l, int precision) {
  if (l < 0) throw Error("l must be nonnegative");
  std::vector<Weight> weights;
  for (int m = l + 2; m >= -l - 2; --m) {
    if (!admissible(l, m)) continue;
    const GrassmannianPoint g = coset_from(m, l, TruncSeries::one(precision), precision);
    if (g.orbit_label() != l || g.iwasawa_label() != m) {
      throw Error("stratum representative has labels (" + std::to_string(g.orbit_label()) +
                  ", " + std::to_string(g.iwasawa_label()) + "), expected (" +
                  std::to_string(l) + ", " + std::to_string(m) + ")");
    }
    weights.push_back(Weight{m});
  }
  std::vector<std::vector<ElementId>> f(1, std::vector<ElementId>(weights.size(), kNone));
  for (std::size_t k = 0; k + 1 < weights.size(); ++k) f[0][k] = static_cast<ElementId>(k + 1);
  return Crystal(RootDatum::from_type("A1"), std::move(weights), std::move(f));
}

}  // namespace crystals::pgl2
