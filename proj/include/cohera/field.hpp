#pragma once

#include <cstdint>
#include <string>

namespace cohera {

/// A coefficient. Over F_p `num` is the canonical residue in [0, p) and `den` is 1;
/// over Q the pair is a reduced fraction with positive denominator.
struct Coeff {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Coeff&, const Coeff&) = default;
};

/// Exact coefficient field: Q or F_p. Arithmetic goes through the field object.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  Field() : Field(kDefaultPrime) {}

  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }

  Coeff zero() const { return Coeff{0, 1}; }
  Coeff one() const { return Coeff{1, 1}; }
  Coeff from_int(std::int64_t v) const;
  Coeff from_fraction(std::int64_t num, std::int64_t den) const;

  bool is_zero(const Coeff& a) const { return a.num == 0; }
  bool is_one(const Coeff& a) const { return a.num == 1 && a.den == 1; }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  /// Human-readable form; F_p residues print as the symmetric representative.
  std::string to_string(const Coeff& a) const;
  /// Canonical, parse-stable form used in cache keys.
  std::string canonical(const Coeff& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  Coeff normalize_rational(__int128 num, __int128 den) const;

  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace cohera
