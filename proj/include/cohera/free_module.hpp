#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohera/ring.hpp"

namespace cohera {

enum class ModuleOrder {
  /// Component first (lower index is larger), then the monomial order.
  PositionOverTerm,
  /// Degree including the twist, then the monomial order, then the component.
  TermOverPosition,
};

/// Graded free module R(-t_0) + ... + R(-t_{k-1}); twist t_i is the degree of e_i.
/// Owns the term order used for its vectors and performs all vector arithmetic.
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> twists, ModuleOrder order = ModuleOrder::PositionOverTerm);
  static FreeModule free(RingPtr ring, int rank) { return FreeModule(ring, std::vector<int>(rank, 0)); }
  static FreeModule unit(RingPtr ring) { return free(std::move(ring), 1); }

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  int rank() const { return static_cast<int>(twists_.size()); }
  const std::vector<int>& twists() const { return twists_; }
  int twist(int i) const { return twists_[i]; }
  ModuleOrder order() const { return order_; }

  /// Same ring, twists and order.
  friend bool operator==(const FreeModule& a, const FreeModule& b);

  std::int64_t degree(const Term& t) const { return ring_->degree(t.mon) + twists_[t.comp]; }
  int compare(const Term& a, const Term& b) const;
  int compare_lead(const Monomial& am, int ac, const Monomial& bm, int bc) const;

  /// Sort, merge duplicates and drop zero coefficients.
  FreeVector normalize(std::vector<Term> terms) const;
  FreeVector basis(int i) const;
  FreeVector monomial_vector(const Monomial& m, int comp, Coeff c) const;

  FreeVector add(const FreeVector& a, const FreeVector& b) const;
  FreeVector sub(const FreeVector& a, const FreeVector& b) const;
  FreeVector scale(const FreeVector& a, const Coeff& c) const;
  FreeVector neg(const FreeVector& a) const;
  /// a - c * m * b
  FreeVector sub_multiple(const FreeVector& a, const Coeff& c, const Monomial& m, const FreeVector& b) const;
  FreeVector mul_term(const FreeVector& a, const Coeff& c, const Monomial& m) const;
  /// Multiply by a polynomial, given as a rank-one vector (component 0) over the same ring.
  FreeVector mul_poly(const FreeVector& poly, const FreeVector& v) const;
  FreeVector make_monic(const FreeVector& a) const;

  /// Degree of a nonzero homogeneous vector; nullopt when zero or inhomogeneous.
  std::optional<std::int64_t> homogeneous_degree(const FreeVector& v) const;
  bool is_homogeneous(const FreeVector& v) const { return v.is_zero() || homogeneous_degree(v).has_value(); }

  /// Re-express a vector of `from` (same variables, other order / ring) in this module.
  FreeVector convert(const FreeVector& v) const;
  /// Copy of the vector with every component shifted by `offset` (into a larger sum).
  FreeVector shift_components(const FreeVector& v, int offset) const;
  /// Components [offset, offset + width) of `v`, renumbered from 0.
  FreeVector restrict_components(const FreeVector& v, int offset, int width) const;

  FreeModule direct_sum(const FreeModule& other) const;
  FreeModule with_twists(std::vector<int> twists) const { return FreeModule(ring_, std::move(twists), order_); }
  FreeModule with_order(ModuleOrder order) const { return FreeModule(ring_, twists_, order); }
  FreeModule over_ring(RingPtr ring) const { return FreeModule(std::move(ring), twists_, order_); }
  FreeModule shifted(int s) const;
  /// k copies of this module; copy j twisted by shifts[j].
  FreeModule power(const std::vector<int>& shifts) const;

  std::string to_string(const FreeVector& v) const;
  std::string canonical(const FreeVector& v) const;
  std::string tag() const;

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  ModuleOrder order_ = ModuleOrder::PositionOverTerm;
};

}  // namespace cohera
