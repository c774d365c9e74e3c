#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cohera/field.hpp"
#include "cohera/monomial.hpp"

namespace cohera {

/// One term of a vector in a free module: coeff * mon * e_comp.
struct Term {
  Monomial mon;
  int comp = 0;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse element of a free module: terms sorted strictly descending under the
/// ambient module order, no zero coefficients. Has no ring pointer; all arithmetic
/// goes through the owning FreeModule. Polynomials are rank-one vectors.
struct FreeVector {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  std::size_t size() const { return terms.size(); }

  friend bool operator==(const FreeVector&, const FreeVector&) = default;
};

enum class OrderKind {
  GRevLex,
  Lex,
  /// Weighted degree over the masked variables first, then graded reverse lex.
  Eliminate,
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Coefficient field, ordered variables, positive weights, monomial order, and the
/// homogeneous base ideal I0 (R = k[x]/I0). Immutable once built.
class Ring {
 public:
  static RingPtr make(Field field, std::vector<std::string> vars, std::vector<int> weights = {},
                      OrderKind order = OrderKind::GRevLex, std::vector<bool> eliminate = {});

  /// Copy of this ring with base relations (rank-one vectors in this ring's order).
  RingPtr with_base_relations(std::vector<FreeVector> relations) const;
  RingPtr with_order(OrderKind order, std::vector<bool> eliminate = {}) const;
  RingPtr ambient_polynomial_ring() const;

  const Field& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  OrderKind order() const { return order_; }
  const std::vector<bool>& eliminate_mask() const { return eliminate_; }
  const std::vector<FreeVector>& base_relations() const { return base_relations_; }
  bool is_quotient() const { return !base_relations_.empty(); }
  int variable_index(const std::string& name) const;

  std::int64_t degree(const Monomial& m) const;
  std::int64_t eliminated_degree(const Monomial& m) const;
  /// >0 when a > b, <0 when a < b, 0 when equal.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string monomial_string(const Monomial& m) const;
  std::string order_tag() const;
  /// Canonical text identifying the ring up to equality (used for compatibility and cache keys).
  const std::string& tag() const { return tag_; }

  friend bool same_ring(const Ring& a, const Ring& b) { return a.tag_ == b.tag_; }

 private:
  Ring() = default;
  void finish();

  Field field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  OrderKind order_ = OrderKind::GRevLex;
  std::vector<bool> eliminate_;
  std::vector<FreeVector> base_relations_;
  std::string tag_;
};

}  // namespace cohera
