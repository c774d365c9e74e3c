#pragma once

#include <string>
#include <string_view>

#include "cohera/free_module.hpp"

namespace cohera {

/// Ring element with value semantics; a thin wrapper over a rank-one FreeVector.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, FreeVector v) : ring_(std::move(ring)), v_(std::move(v)) {}

  static Polynomial constant(const RingPtr& ring, const Coeff& c);
  static Polynomial variable(const RingPtr& ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  const FreeVector& vec() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_constant() const { return v_.is_zero() || (v_.size() == 1 && v_.lead().mon.is_one()); }
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous polynomial, -1 otherwise.
  std::int64_t degree() const;

  Polynomial pow(unsigned k) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  FreeModule unit() const { return FreeModule::unit(ring_); }

  RingPtr ring_;
  FreeVector v_;
};

/// Parses standard infix ("x^2*y - 3/2*y^3"); '/' is only allowed by nonzero constants.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace cohera
