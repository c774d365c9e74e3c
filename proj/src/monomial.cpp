#include "cohera/monomial.hpp"

#include <algorithm>
#include <string>

#include "cohera/errors.hpp"

namespace cohera {

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw ContractViolation("negative exponent in monomial");
    if (e > kMaxExponent) throw ArithmeticError("exponent exceeds " + std::to_string(kMaxExponent));
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::int32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a.exps_[i]) + b.exps_[i];
    if (s > Monomial::kMaxExponent) throw ArithmeticError("exponent overflow in monomial product");
    r.exps_[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

Monomial Monomial::pow(std::int32_t k) const {
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(exps_[i]) * k;
    if (s > kMaxExponent) throw ArithmeticError("exponent overflow in monomial power");
    r.exps_[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] > b.exps_[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r.exps_[i] = b.exps_[i] - a.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cohera
