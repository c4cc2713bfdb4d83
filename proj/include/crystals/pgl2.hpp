#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crystals/crystal.hpp"
#include "crystals/series.hpp"

namespace crystals::pgl2 {

// 2x2 matrix over truncated Laurent series, [[a, b], [c, d]].
struct SeriesMatrix {
  TruncSeries a, b, c, d;

  SeriesMatrix operator*(const SeriesMatrix& o) const;
  TruncSeries det() const { return a * d - b * c; }
  // Multiplication by the scalar t^k (the center of GL(2)).
  SeriesMatrix scaled(int k) const;
};

// Representative (t^m, b; 0, 1) of a G(O)-coset modulo the center, with b a
// Laurent polynomial whose exponents are all < m. Two points define the
// same lattice iff their canonical forms are equal.
struct CanonicalCoset {
  int m = 0;
  TruncSeries top_right;  // exact: precision m

  // Exponent e with top_right = t^e * (unit), or nullopt when it is zero.
  std::optional<int> exponent() const { return top_right.valuation(); }
  friend bool operator==(const CanonicalCoset& x, const CanonicalCoset& y) {
    return x.m == y.m && x.top_right.coefficients() == y.top_right.coefficients() &&
           x.top_right.offset() == y.top_right.offset();
  }
};

// A point of the PGL(2) affine Grassmannian PGL(2, K)/PGL(2, O), stored as
// a matrix representative over truncated Laurent series with exact rational
// coefficients. Every valuation is certified against the precision guard;
// operations throw PrecisionExhausted instead of guessing.
class GrassmannianPoint {
 public:
  explicit GrassmannianPoint(SeriesMatrix matrix);

  const SeriesMatrix& matrix() const { return matrix_; }

  int det_valuation() const;
  // l such that the point lies in Gr^l: d2 - d1 for the elementary divisors
  // t^d1, t^d2 of the matrix.
  int orbit_label() const;
  // m such that the point lies in S^m: v(det) - 2 min(v(c), v(d)).
  int iwasawa_label() const;

  CanonicalCoset canonical() const;

  GrassmannianPoint operator*(const GrassmannianPoint& o) const {
    return GrassmannianPoint(matrix_ * o.matrix_);
  }

 private:
  SeriesMatrix matrix_;
};

// Whether S^m meets Gr^l: l - m even and nonnegative, l >= |m|.
bool admissible(int l, int m);

// (t^m, t^((m-l)/2) p; 0, 1) at precision N. Throws Error unless
// admissible(l, m) and p is a unit.
GrassmannianPoint coset_from(int m, int l, const TruncSeries& p, int precision);

// Random draws: polynomials of degree < terms with coefficients a/b,
// |a| <= 1000, 1 <= b <= 1000.
struct RandomSeries {
  std::mt19937_64 rng;
  int terms = 6;

  explicit RandomSeries(std::uint64_t seed, int terms = 6) : rng(seed), terms(terms) {}
  Rational coefficient(bool nonzero);
  TruncSeries unit(int precision);
  TruncSeries integral(int precision);  // element of O, possibly non-unit
  // Random element of the parabolic O-points: (u1, q; 0, u2), u units, q in O.
  SeriesMatrix parabolic(int precision);
  // Random element of GL(2, O): upper-triangular unit times lower unipotent.
  SeriesMatrix integral_invertible(int precision);
};

// Pairs (l, m) attained by points (t^m, x; 0, 1) with l <= l_max, where x
// runs over 0 and t^v * u for v in [-l_max - 2, l_max + 2] and u in `pool`,
// and m over [-l_max - 2, l_max + 2]. Pool entries are taken mod t^N.
std::set<std::pair<int, int>> strata_census(int l_max, int precision,
                                            const std::vector<TruncSeries>& pool);
// Default pool: 1, 1 + t, 2 - 3t + t^2 and a few random units.
std::vector<TruncSeries> default_pool(int precision, std::uint64_t seed = 7);

struct ConvolutionStats {
  int l1 = 0, m1 = 0, l2 = 0, m2 = 0;
  int precision = 0;
  int samples = 0;
  std::map<int, int> orbit_labels;    // label -> count
  std::map<int, int> iwasawa_labels;  // label -> count
  int generic_label = 0;              // most frequent orbit label
  int generic_count = 0;
};

// g1 * g2 with g1 = coset_from(m1, l1, p1) * k for a random parabolic k and
// g2 = coset_from(m2, l2, p2); p1, p2, k drawn from `rng`.
GrassmannianPoint convolve(int l1, int m1, int l2, int m2, int precision, RandomSeries& rng);

ConvolutionStats convolution_census(int l1, int m1, int l2, int m2, int precision, int samples,
                                    std::uint64_t seed);

// The two readings of the generic convolution label:
//   (g, x) -> g x with n = max{l1 - m2, m1 + l2}  (as stated), and
//   the factors exchanged,   n = max{l2 - m1, m2 + l1}.
int convolution_label_stated(int l1, int m1, int l2, int m2);
int convolution_label_exchanged(int l1, int m1, int l2, int m2);

// Number of coefficients of p that change the coset of coset_from(m, l, p),
// found by perturbing each coefficient of a generic p in turn.
int stratum_parameter_count(int l, int m, int precision);

// B(l) realized on the strata: one element per m with S^m meeting Gr^l
// (checked on an explicit point), weight m, f lowering m by 2.
Crystal crystal_from_pgl2(int l, int precision = 32);

}  // namespace crystals::pgl2
