#include "cohera/field.hpp"

#include <limits>

#include "cohera/errors.hpp"

namespace cohera {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw ConfigurationError("characteristic " + std::to_string(p) + " is not prime");
  }
  if (p > (1u << 31)) {
    throw ConfigurationError("characteristic must be below 2^31");
  }
  return Field(p);
}

Coeff Field::normalize_rational(__int128 num, __int128 den) const {
  if (den == 0) throw ArithmeticError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw ArithmeticError("rational coefficient overflow; use a prime field");
  }
  return Coeff{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

Coeff Field::from_int(std::int64_t v) const {
  if (p_ == 0) return Coeff{v, 1};
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Coeff{r, 1};
}

Coeff Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw ArithmeticError("division by zero in coefficient");
  if (p_ == 0) return normalize_rational(num, den);
  Coeff d = from_int(den);
  if (d.num == 0) {
    throw ArithmeticError("denominator vanishes modulo " + std::to_string(p_));
  }
  return mul(from_int(num), inv(d));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (p_ != 0) {
    std::int64_t s = a.num + b.num;
    if (s >= static_cast<std::int64_t>(p_)) s -= p_;
    return Coeff{s, 1};
  }
  return normalize_rational(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                            static_cast<__int128>(a.den) * b.den);
}

Coeff Field::neg(const Coeff& a) const {
  if (p_ != 0) return Coeff{a.num == 0 ? 0 : p_ - a.num, 1};
  return Coeff{-a.num, a.den};
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (p_ != 0) return Coeff{a.num * b.num % p_, 1};
  return normalize_rational(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Coeff Field::inv(const Coeff& a) const {
  if (a.num == 0) throw ArithmeticError("inverse of zero");
  if (p_ != 0) return Coeff{mod_pow(a.num, p_ - 2, p_), 1};
  return normalize_rational(a.den, a.num);
}

std::string Field::to_string(const Coeff& a) const {
  if (p_ != 0) {
    std::int64_t v = a.num;
    if (v > static_cast<std::int64_t>(p_) / 2) v -= p_;
    return std::to_string(v);
  }
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

std::string Field::canonical(const Coeff& a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace cohera
