#pragma once

#include <vector>

#include "cohera/groebner.hpp"

namespace cohera {

/// sum over terms of c: coeff * mon * columns[comp], a vector of `target`.
FreeVector apply_combination(const FreeModule& target, const std::vector<FreeVector>& columns, const FreeVector& c);

/// A maximal linearly independent subset of homogeneous vectors (in input order).
std::vector<std::size_t> independent_subset(const FreeModule& F, const std::vector<FreeVector>& vectors);

/// Minimal homogeneous generating set (modulo I0); inhomogeneous input is returned unchanged.
SubmoduleBasis minimal_generators(const SubmoduleBasis& u);
/// Subset of u's generators minimally generating (u + w) / w.
SubmoduleBasis minimal_generators_modulo(const SubmoduleBasis& u, const SubmoduleBasis& w);

SubmoduleBasis sum(const SubmoduleBasis& a, const SubmoduleBasis& b);
SubmoduleBasis intersect(const SubmoduleBasis& a, const SubmoduleBasis& b);
/// (u :_R v) as an ideal of R.
SubmoduleBasis colon(const SubmoduleBasis& u, const SubmoduleBasis& v);
/// ideal * target.
SubmoduleBasis product(const SubmoduleBasis& ideal, const SubmoduleBasis& target);
SubmoduleBasis ideal_power(const SubmoduleBasis& ideal, int n);

/// Ideals I_1, ..., I_r of one ring.
class IdealFamily {
 public:
  IdealFamily() = default;
  explicit IdealFamily(std::vector<SubmoduleBasis> ideals);

  std::size_t size() const { return ideals_.size(); }
  const SubmoduleBasis& operator[](std::size_t j) const { return ideals_[j]; }
  const std::vector<SubmoduleBasis>& ideals() const { return ideals_; }
  const RingPtr& ring() const { return ideals_.front().ambient().ring_ptr(); }
  /// I_j == R, recorded at construction.
  bool is_unit(std::size_t j) const { return unit_[j]; }

 private:
  std::vector<SubmoduleBasis> ideals_;
  std::vector<bool> unit_;
};

/// I_1^{n_1} ... I_r^{n_r} * target.
SubmoduleBasis multi_power(const IdealFamily& family, const std::vector<int>& n, const SubmoduleBasis& target);

/// Submodule image of a list of vectors, i.e. the span.
inline SubmoduleBasis span(const FreeModule& F, std::vector<FreeVector> gens) { return SubmoduleBasis(F, std::move(gens)); }

}  // namespace cohera
