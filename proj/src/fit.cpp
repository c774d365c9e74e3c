#include "cohera/fit.hpp"

#include <algorithm>
#include <sstream>

#include "cohera/errors.hpp"

namespace cohera {

void GridBox::validate() const {
  if (lo.empty() || lo.size() != hi.size()) throw ContractViolation("box corners must have equal, positive length");
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (lo[j] < 0) throw ContractViolation("box corners must be natural numbers");
    if (lo[j] > hi[j]) throw ContractViolation("box has hi < lo in coordinate " + std::to_string(j + 1));
  }
  if (shell < 1) throw ContractViolation("shell width must be at least 1");
}

std::vector<Point> GridBox::points() const {
  std::vector<Point> out;
  Point cur = lo;
  while (true) {
    out.push_back(cur);
    std::size_t j = cur.size();
    while (j > 0 && cur[j - 1] == hi[j - 1]) {
      cur[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0) return out;
    ++cur[j - 1];
  }
}

bool GridBox::contains(const Point& n) const {
  if (n.size() != lo.size()) return false;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] < lo[j] || n[j] > hi[j]) return false;
  }
  return true;
}

std::string point_to_string(const Point& n) {
  std::string s = "(";
  for (std::size_t j = 0; j < n.size(); ++j) s += (j ? "," : "") + std::to_string(n[j]);
  return s + ")";
}

bool point_geq(const Point& a, const Point& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < b[j]) return false;
  }
  return true;
}

std::optional<int> FittedPolynomial::total_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : coefficients) {
    if (c == 0) continue;
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d.value_or(s), s);
  }
  return d;
}

Rational FittedPolynomial::evaluate(const Point& n) const {
  Rational acc = 0;
  for (const auto& [e, c] : coefficients) {
    Rational term = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (int k = 0; k < e[j]; ++k) term *= n[j];
    }
    acc += term;
  }
  return acc;
}

std::string FittedPolynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::vector<std::pair<std::vector<int>, Rational>> terms(coefficients.begin(), coefficients.end());
  // Highest total degree first, then lexicographically larger exponents.
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int v : a.first) da += v;
    for (int v : b.first) db += v;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (constant || mag != 1) {
      out << mag;
      if (!constant) out << "*";
    }
    bool any = false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (any) out << "*";
      out << (r == 1 ? std::string("n") : "n" + std::to_string(j + 1));
      if (e[j] > 1) out << "^" << e[j];
      any = true;
    }
  }
  return out.str();
}

namespace {

// Coefficients (ascending powers of n) of binom(n - a, k).
std::vector<Rational> binomial_poly(int a, int k) {
  std::vector<Rational> p{Rational(1)};
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> q(p.size() + 1, Rational(0));
    for (std::size_t t = 0; t < p.size(); ++t) {
      q[t + 1] += p[t];
      q[t] -= p[t] * (a + i);
    }
    p = std::move(q);
  }
  Rational fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (auto& c : p) c /= fact;
  return p;
}

}  // namespace

FitResult fit_polynomial(const std::map<Point, std::optional<std::int64_t>>& table, const GridBox& box, int degree_cap) {
  box.validate();
  if (degree_cap < 0) throw ContractViolation("degree cap must be non-negative");
  const std::size_t r = box.rank();
  FitResult res;
  Point a(r), b(r);
  for (std::size_t j = 0; j < r; ++j) {
    a[j] = box.hi[j] - degree_cap - 1;
    b[j] = box.hi[j] - 1;
    if (a[j] < box.lo[j]) {
      res.reason = "box too small for degree cap " + std::to_string(degree_cap);
      return res;
    }
  }
  auto value = [&](const Point& n) -> Rational {
    auto it = table.find(n);
    if (it == table.end()) throw ContractViolation("no observation at " + point_to_string(n));
    if (!it->second) throw ContractViolation("infinite length at " + point_to_string(n) + " inside the fitting region");
    return Rational(*it->second);
  };
  // Forward differences on the fitting grid, axis by axis.
  const int side = degree_cap + 1;
  std::size_t total = 1;
  for (std::size_t j = 0; j < r; ++j) total *= static_cast<std::size_t>(side);
  std::vector<Rational> grid(total);
  auto offset_of = [&](const std::vector<int>& t) {
    std::size_t o = 0;
    for (std::size_t j = 0; j < r; ++j) o = o * side + t[j];
    return o;
  };
  GridBox fit_box{a, b, 1};
  for (const auto& n : fit_box.points()) {
    std::vector<int> t(r);
    for (std::size_t j = 0; j < r; ++j) t[j] = n[j] - a[j];
    grid[offset_of(t)] = value(n);
  }
  std::size_t stride = 1;
  for (std::size_t jj = r; jj > 0; --jj) {
    for (int level = 1; level < side; ++level) {
      for (std::size_t o = total; o-- > 0;) {
        std::size_t idx = (o / stride) % side;
        if (static_cast<int>(idx) >= level) grid[o] -= grid[o - stride];
      }
    }
    stride *= side;
  }
  FittedPolynomial poly;
  poly.r = r;
  poly.fit_lo = a;
  poly.fit_hi = b;
  std::vector<std::vector<std::vector<Rational>>> binoms(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (int k = 0; k < side; ++k) binoms[j].push_back(binomial_poly(a[j], k));
  }
  for (const auto& n : fit_box.points()) {
    std::vector<int> k(r);
    for (std::size_t j = 0; j < r; ++j) k[j] = n[j] - a[j];
    const Rational& delta = grid[offset_of(k)];
    if (delta == 0) continue;
    std::map<std::vector<int>, Rational> prod{{std::vector<int>(r, 0), delta}};
    for (std::size_t j = 0; j < r; ++j) {
      std::map<std::vector<int>, Rational> next;
      const auto& bp = binoms[j][k[j]];
      for (const auto& [e, c] : prod) {
        for (std::size_t p = 0; p < bp.size(); ++p) {
          if (bp[p] == 0) continue;
          auto e2 = e;
          e2[j] += static_cast<int>(p);
          next[e2] += c * bp[p];
        }
      }
      prod = std::move(next);
    }
    for (const auto& [e, c] : prod) poly.coefficients[e] += c;
  }
  for (auto it = poly.coefficients.begin(); it != poly.coefficients.end();) {
    it = it->second == 0 ? poly.coefficients.erase(it) : std::next(it);
  }
  auto agrees = [&](const Point& n) {
    auto it = table.find(n);
    return it != table.end() && it->second && Rational(*it->second) == poly.evaluate(n);
  };
  // Held-out shell: points above the fitting region in some coordinate.
  std::vector<Point> all = box.points();
  for (const auto& n : all) {
    if (!point_geq(n, a) || point_geq(b, n)) continue;
    if (!agrees(n)) {
      res.reason = "held-out shell disagrees at " + point_to_string(n);
      return res;
    }
  }
  // Onset: lower the corner diagonally while every point above it still agrees.
  Point onset = a;
  while (true) {
    Point lower = onset;
    bool moved = false;
    for (std::size_t j = 0; j < r; ++j) {
      if (lower[j] > box.lo[j]) {
        --lower[j];
        moved = true;
      }
    }
    if (!moved) break;
    bool ok = true;
    for (const auto& n : all) {
      if (point_geq(n, lower) && !agrees(n)) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    onset = lower;
  }
  poly.onset = onset;
  for (const auto& n : all) {
    if (!point_geq(n, onset)) continue;
    poly.residuals.emplace_back(n, value(n) - poly.evaluate(n));
  }
  res.ok = true;
  res.polynomial = std::move(poly);
  return res;
}

}  // namespace cohera
