#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohera {

using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<int>;

/// Componentwise box lo <= n <= hi with a stabilization shell width.
struct GridBox {
  Point lo;
  Point hi;
  int shell = 1;

  std::size_t rank() const { return lo.size(); }
  /// Throws ContractViolation when malformed.
  void validate() const;
  /// All points, lexicographic.
  std::vector<Point> points() const;
  bool contains(const Point& n) const;
};

std::string point_to_string(const Point& n);
bool point_geq(const Point& a, const Point& b);

/// Exact polynomial in r variables with rational coefficients.
struct FittedPolynomial {
  std::size_t r = 1;
  std::map<std::vector<int>, Rational> coefficients;
  Point onset;
  Point fit_lo;
  Point fit_hi;
  /// Observed minus predicted at every validation point (all zero for a returned fit).
  std::vector<std::pair<Point, Rational>> residuals;

  /// nullopt for the zero polynomial.
  std::optional<int> total_degree() const;
  Rational evaluate(const Point& n) const;
  /// Variables n (r = 1) or n1, n2, ...
  std::string to_string() const;
};

struct FitResult {
  bool ok = false;
  FittedPolynomial polynomial;
  std::string reason;
};

/// Newton interpolation on [hi - cap - 1, hi - 1], validated on the held-out shell and on
/// every lower point down to the reported onset.
FitResult fit_polynomial(const std::map<Point, std::optional<std::int64_t>>& table, const GridBox& box, int degree_cap);

}  // namespace cohera
