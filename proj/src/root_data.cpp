#include "crystals/root_data.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "crystals/errors.hpp"

namespace crystals {

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw StructuralError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw StructuralError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (int& c : a.coords) c *= k;
  return a;
}

std::string Weight::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  return out;
}

Weight parse_weight(const std::string& text) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw SchemaError("malformed weight '" + text + "'");
    }
    coords.push_back(value);
  }
  if (coords.empty()) throw SchemaError("empty weight");
  return Weight(std::move(coords));
}

namespace {

// Exact Gauss-Jordan inversion; returns false if singular.
bool invert(const std::vector<std::vector<int>>& m, std::vector<std::vector<Rational>>& out) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  out.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return true;
}

// Positive roots of the Kac-Moody root system with Cartan matrix c
// (c[i][j] = <alpha_j, alpha_i^vee>), in simple-root coordinates, by the
// root-string algorithm. Finite type is guaranteed by invertibility plus
// the caller's bound on the number of roots.
std::vector<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& c) {
  const std::size_t n = c.size();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  std::vector<std::vector<int>> all = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += c[i][j] * beta[j];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.contains(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      all.push_back(r);
    }
    if (all.size() > 4096) throw InvalidCartan("Cartan matrix is not of finite type");
  }
  return all;
}

}  // namespace

RootDatum::RootDatum(std::vector<std::vector<int>> cartan) : cartan_(std::move(cartan)) {
  const std::size_t n = cartan_.size();
  if (n == 0) throw InvalidCartan("Cartan matrix must have positive rank");
  for (const auto& row : cartan_) {
    if (row.size() != n) throw InvalidCartan("Cartan matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int a = cartan_[i][j];
      if (i == j && a != 2) {
        throw InvalidCartan("diagonal entry a_" + std::to_string(i + 1) + std::to_string(j + 1) +
                            " = " + std::to_string(a) + " (expected 2)");
      }
      if (i != j && a > 0) {
        throw InvalidCartan("positive off-diagonal entry a_" + std::to_string(i + 1) +
                            std::to_string(j + 1));
      }
      if (i != j && (a == 0) != (cartan_[j][i] == 0)) {
        throw InvalidCartan("asymmetric zero pattern at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
      }
    }
  }
  if (!invert(cartan_, inverse_)) throw InvalidCartan("Cartan matrix is singular");

  std::vector<std::vector<int>> transposed(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) transposed[i][j] = cartan_[j][i];
  coroots_ = positive_roots(transposed);
}

RootDatum RootDatum::from_type(const std::string& type) {
  if (type.size() < 2) throw InvalidCartan("unknown Cartan type '" + type + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  int n = 0;
  auto [ptr, ec] = std::from_chars(type.data() + 1, type.data() + type.size(), n);
  if (ec != std::errc() || ptr != type.data() + type.size() || n < 1) {
    throw InvalidCartan("unknown Cartan type '" + type + "'");
  }
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw InvalidCartan("B_n needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':
      if (n < 2) throw InvalidCartan("C_n needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw InvalidCartan("D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw InvalidCartan("E_n needs 6 <= n <= 8");
      // Bourbaki labelling: 1-3-4-5-6(-7-8), 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw InvalidCartan("F_n needs n = 4");
      link(0, 1);
      link(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      if (n != 2) throw InvalidCartan("G_n needs n = 2");
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    default:
      throw InvalidCartan("unknown Cartan type '" + type + "'");
  }
  return RootDatum(std::move(c));
}

void RootDatum::check_rank(const Weight& w) const {
  if (w.rank() != rank()) {
    throw StructuralError("weight " + w.str() + " has rank " + std::to_string(w.rank()) +
                          ", datum has rank " + std::to_string(rank()));
  }
}

Weight RootDatum::simple_root(std::size_t j) const {
  Weight w = zero();
  for (std::size_t i = 0; i < rank(); ++i) w[i] = cartan_[i][j];
  return w;
}

Weight RootDatum::fundamental_weight(std::size_t i) const {
  Weight w = zero();
  w[i] = 1;
  return w;
}

std::vector<Rational> RootDatum::root_coefficients(const Weight& lambda) const {
  check_rank(lambda);
  std::vector<Rational> c(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    for (std::size_t i = 0; i < rank(); ++i) c[j] += inverse_[j][i] * lambda[i];
  }
  return c;
}

bool RootDatum::dominance_leq(const Weight& mu, const Weight& lambda, DominanceMode mode) const {
  check_rank(mu);
  check_rank(lambda);
  for (const Rational& c : root_coefficients(lambda - mu)) {
    if (c < 0) return false;
    if (mode == DominanceMode::kIntegral && c.get_den() != 1) return false;
  }
  return true;
}

bool RootDatum::dominance_less(const Weight& mu, const Weight& lambda, DominanceMode mode) const {
  return mu != lambda && dominance_leq(mu, lambda, mode);
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  check_rank(lambda);
  return std::all_of(lambda.coords.begin(), lambda.coords.end(), [](int c) { return c >= 0; });
}

Rational RootDatum::two_rho_pairing(const Weight& lambda) const {
  Rational sum = 0;
  for (const Rational& c : root_coefficients(lambda)) sum += c;
  return 2 * sum;
}

Rational RootDatum::lusztig_bound(const Weight& l1, const Weight& l2, const Weight& l3) const {
  return two_rho_pairing(l1 + l2 + l3) / 2;
}

long long RootDatum::weyl_dimension(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw Error("Weyl dimension requires a dominant weight");
  Rational dim = 1;
  for (const auto& k : coroots_) {
    long num = 0;
    long den = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      num += static_cast<long>(k[i]) * (lambda[i] + 1);
      den += k[i];
    }
    dim *= Rational(num, den);
  }
  dim.canonicalize();
  return dim.get_num().get_si();
}

RootDatum RootDatum::levi(const std::vector<std::size_t>& levi) const {
  std::vector<std::vector<int>> sub(levi.size(), std::vector<int>(levi.size()));
  for (std::size_t a = 0; a < levi.size(); ++a) {
    for (std::size_t b = 0; b < levi.size(); ++b) {
      if (levi[a] >= rank() || levi[b] >= rank()) throw StructuralError("Levi index out of range");
      sub[a][b] = cartan_[levi[a]][levi[b]];
    }
  }
  return RootDatum(std::move(sub));
}

}  // namespace crystals
