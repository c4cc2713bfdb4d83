#pragma once

// Test-only oracles, independent of the library's code paths: root systems
// come from closing the simple roots under reflections (the library uses
// root strings), and weight multiplicities come from Freudenthal's formula
// rather than from any crystal.

#include <gmpxx.h>

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;
using Vec = std::vector<int>;

inline std::vector<std::vector<mpq_class>> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const mpq_class piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
  return t;
}

// Positive roots (simple-root coordinates) for Cartan matrix c, where
// c[i][j] = <alpha_j, alpha_i^vee>, as the positive part of the orbit of
// the simple roots under the simple reflections.
inline std::vector<Vec> positive_roots_by_reflection(const Matrix& c) {
  const std::size_t n = c.size();
  std::set<Vec> all;
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Vec r(n, 0);
    r[i] = 1;
    all.insert(r);
    queue.push_back(r);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Vec beta = queue[k];
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += c[i][j] * beta[j];
      Vec image = beta;
      image[i] -= pairing;
      if (all.insert(image).second) queue.push_back(image);
    }
    if (all.size() > 10000) throw std::runtime_error("not of finite type");
  }
  std::vector<Vec> out;
  for (const Vec& r : all) {
    bool positive = true;
    for (int x : r) positive = positive && x >= 0;
    if (positive) out.push_back(r);
  }
  return out;
}

// dim V(lambda) = prod over positive coroots beta^vee of
// <lambda + rho, beta^vee> / <rho, beta^vee>.
inline long long weyl_dimension(const Matrix& cartan, const Vec& lambda) {
  mpq_class dim = 1;
  for (const Vec& k : positive_roots_by_reflection(transpose(cartan))) {
    long num = 0, den = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      num += k[i] * (lambda[i] + 1);
      den += k[i];
    }
    dim *= mpq_class(num, den);
  }
  dim.canonicalize();
  return dim.get_num().get_si();
}

class Freudenthal {
 public:
  Freudenthal(Matrix cartan) : c_(std::move(cartan)), n_(c_.size()), inv_(inverse(c_)) {
    // Symmetrizer s with c[i][j] s_i = c[j][i] s_j.
    s_.assign(n_, 0);
    for (std::size_t start = 0; start < n_; ++start) {
      if (s_[start] != 0) continue;
      s_[start] = 1;
      std::vector<std::size_t> stack{start};
      while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n_; ++j) {
          if (j == i || c_[i][j] == 0 || s_[j] != 0) continue;
          s_[j] = mpq_class(c_[i][j]) * s_[i] / c_[j][i];
          stack.push_back(j);
        }
      }
    }
    for (const Vec& k : positive_roots_by_reflection(c_)) {
      Vec dynkin(n_, 0);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) dynkin[i] += c_[i][j] * k[j];
      int height = 0;
      for (int x : k) height += x;
      roots_.push_back({dynkin, height});
    }
  }

  mpq_class form(const Vec& a, const Vec& b) const {
    mpq_class out = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      mpq_class ci = 0;
      for (std::size_t j = 0; j < n_; ++j) ci += inv_[i][j] * a[j];
      out += ci * s_[i] * b[i];
    }
    return out;
  }

  // Weight multiplicities of V(lambda), keyed by Dynkin coordinates.
  std::map<Vec, long long> character(const Vec& lambda) const {
    Vec rho(n_, 1);
    const mpq_class top = form(add(lambda, rho), add(lambda, rho));
    std::map<Vec, long long> mult;
    mult[lambda] = 1;
    std::set<Vec> layer{lambda};
    std::map<Vec, int> height{{lambda, 0}};
    for (int h = 1; !layer.empty(); ++h) {
      std::set<Vec> next;
      for (const Vec& w : layer) {
        for (std::size_t j = 0; j < n_; ++j) {
          Vec mu = w;
          for (std::size_t i = 0; i < n_; ++i) mu[i] -= c_[i][j];
          if (!height.contains(mu) && is_weight(lambda, mu)) next.insert(mu);
        }
      }
      for (const Vec& mu : next) {
        height[mu] = h;
        mpq_class sum = 0;
        for (const auto& [alpha, ht] : roots_) {
          Vec shifted = mu;
          for (int k = 1; h - k * ht >= 0; ++k) {
            shifted = add(shifted, alpha);
            auto it = mult.find(shifted);
            if (it != mult.end()) sum += mpq_class(static_cast<long>(it->second)) * form(shifted, alpha);
          }
        }
        const mpq_class denom = top - form(add(mu, rho), add(mu, rho));
        mpq_class m = 2 * sum / denom;
        m.canonicalize();
        if (m.get_den() != 1 || m < 0) throw std::runtime_error("non-integral multiplicity");
        if (m != 0) mult[mu] = m.get_num().get_si();
      }
      layer = std::move(next);
    }
    return mult;
  }

 private:
  static Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  }

  // mu is a weight of V(lambda) iff its dominant conjugate is <= lambda.
  bool is_weight(const Vec& lambda, Vec mu) const {
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i < n_; ++i) {
        if (mu[i] < 0) {
          const int k = mu[i];
          for (std::size_t r = 0; r < n_; ++r) mu[r] -= k * c_[r][i];
          moved = true;
        }
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      mpq_class ci = 0;
      for (std::size_t j = 0; j < n_; ++j) ci += inv_[i][j] * (lambda[j] - mu[j]);
      if (ci < 0 || ci.get_den() != 1) return false;
    }
    return true;
  }

  Matrix c_;
  std::size_t n_;
  std::vector<std::vector<mpq_class>> inv_;
  std::vector<mpq_class> s_;
  std::vector<std::pair<Vec, int>> roots_;
};

// All dominant weights of the given rank with coordinate sum <= max_sum.
inline std::vector<Vec> dominant_weights_up_to(std::size_t rank, int max_sum) {
  std::vector<Vec> out;
  Vec cur(rank, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == rank) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[i] = v;
      self(self, i + 1, remaining - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, max_sum);
  return out;
}

}  // namespace oracle
