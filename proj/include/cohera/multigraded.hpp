#pragma once

#include <memory>
#include <vector>

#include "cohera/module.hpp"

namespace cohera {

/// Standard N^r-graded algebra S = P / Q with P = k[x, y]; x-variables have multidegree 0,
/// the y-variables of group j have multidegree e_j and an internal degree of their own.
/// P is graded by x-weights and (internal degree + 1) on y, so it stays positive.
struct MultigradedAlgebraPresentation {
  RingPtr base;
  RingPtr ring;
  std::size_t nx = 0;
  std::size_t r = 0;
  std::vector<int> y_group;
  std::vector<int> y_internal;
  std::vector<FreeVector> q;

  std::vector<int> multidegree(const Monomial& m) const;
  int internal_degree(const Monomial& m) const;
};
using AlgebraPtr = std::shared_ptr<const MultigradedAlgebraPresentation>;

/// Z^r-graded S-module given by generators with multidegrees and multihomogeneous relations
/// in P^m (Q-multiples are implied).
struct MultigradedModule {
  AlgebraPtr algebra;
  FreeModule ambient;
  std::vector<int> internal_twists;
  std::vector<std::vector<int>> gen_degrees;
  std::vector<FreeVector> relations;
};

/// Multi-Rees algebra R[I_1 t_1, ..., I_r t_r].
AlgebraPtr rees_algebra(const IdealFamily& family);

/// Rees module sum_n I^n M, presented on the minimal generators of M.
MultigradedModule rees_module(const FPModule& m, const IdealFamily& family);
/// The algebra itself as a module over itself.
MultigradedModule algebra_as_module(const AlgebraPtr& algebra);
/// S / (y-variables) S, which vanishes in every positive degree.
MultigradedModule truncation_module(const AlgebraPtr& algebra);

/// The degree-n strand as a finitely presented R-module.
FPModule graded_component(const MultigradedModule& m, const std::vector<int>& n);

/// Krull dimension of the fiber module sum_n I^n M / m I^n M.
KrullDim analytic_spread(const FPModule& m, const IdealFamily& family);

/// Artin–Rees data for N ⊆ M (N given inside M's ambient, contained in U' + W').
struct ArtinReesCertificate {
  std::vector<int> d;
  /// Multidegrees of the minimal generators of sum_n (I^n M ∩ N).
  std::vector<std::vector<int>> generator_degrees;
};
ArtinReesCertificate certified_artin_rees(const FPModule& m, const SubmoduleBasis& n, const IdealFamily& family);

}  // namespace cohera
