#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cohera {

/// Exponent vector, one natural number per ring variable.
class Monomial {
 public:
  static constexpr std::int32_t kMaxExponent = 1 << 30;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::int32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::int32_t>& exponents() const { return exps_; }

  bool is_one() const;
  std::int64_t total_degree() const;

  /// Exponent sums are checked; leaving the cap throws ArithmeticError.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial pow(std::int32_t k) const;

  /// True when `a` divides `b`.
  friend bool divides(const Monomial& a, const Monomial& b);
  /// b / a, assuming divides(a, b).
  friend Monomial quotient(const Monomial& b, const Monomial& a);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::int32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace cohera
