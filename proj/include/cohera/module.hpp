#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohera/hilbert.hpp"
#include "cohera/submodule.hpp"

namespace cohera {

/// Homogeneous degree-zero map of graded free modules, given by the images of the source basis.
struct FreeMap {
  FreeModule source;
  FreeModule target;
  std::vector<FreeVector> columns;

  FreeMap() = default;
  FreeMap(FreeModule s, FreeModule t, std::vector<FreeVector> cols);
  static FreeMap zero(const FreeModule& s, const FreeModule& t) {
    return FreeMap(s, t, std::vector<FreeVector>(static_cast<std::size_t>(s.rank())));
  }
  static FreeMap identity(const FreeModule& f);

  FreeVector apply(const FreeVector& v) const { return apply_combination(target, columns, v); }
  /// Entry (row i, column j) as a polynomial.
  FreeVector entry(int i, int j) const;
  /// Dual map between the duals (twists negated).
  FreeMap transpose() const;
  /// this after other.
  FreeMap after(const FreeMap& other) const;
  bool is_zero() const;
};

struct GradedComplex;
struct Presentation;

/// Graded subquotient (U' + W') / W' of an ambient free module, over the ambient's ring.
class FPModule {
 public:
  FPModule() = default;
  FPModule(FreeModule ambient, std::vector<FreeVector> gens, std::vector<FreeVector> rels);

  static FPModule cokernel(FreeModule ambient, std::vector<FreeVector> rels);
  static FPModule free(FreeModule ambient) { return cokernel(std::move(ambient), {}); }
  static FPModule zero(const RingPtr& ring) { return cokernel(FreeModule(ring, {}), {}); }
  /// R / J for an ideal J.
  static FPModule quotient_ring(const SubmoduleBasis& ideal);
  /// A submodule U of a free module, as a module.
  static FPModule submodule(const SubmoduleBasis& u);
  static FPModule subquotient(const SubmoduleBasis& u, const SubmoduleBasis& w);

  const FreeModule& ambient() const { return ambient_; }
  const RingPtr& ring() const { return ambient_.ring_ptr(); }
  const SubmoduleBasis& gens() const { return gens_; }
  const SubmoduleBasis& rels() const { return rels_; }
  /// U' + W'.
  const SubmoduleBasis& top() const { return top_; }
  bool is_cokernel() const;

  const HilbertSeries& hilbert_series() const;
  std::vector<std::int64_t> hilbert_function(int lo, int hi) const { return hilbert_series().values(lo, hi); }
  std::optional<std::int64_t> length() const { return hilbert_series().length(); }
  KrullDim krull_dim() const { return hilbert_series().krull_dim(); }
  bool is_zero() const { return hilbert_series().is_zero(); }

  /// Same module over the ring without base relations (relations gain I0 * ambient).
  FPModule over_ambient_polynomial_ring() const;
  FPModule shifted(int s) const;

  /// Cached resolution through F_cap (see free_resolution).
  GradedComplex resolution(int length_cap) const;
  /// Cached minimal presentation.
  const Presentation& presentation() const;

  std::string describe() const;

 private:
  struct Lazy;

  FreeModule ambient_;
  SubmoduleBasis gens_;
  SubmoduleBasis rels_;
  SubmoduleBasis top_;
  std::shared_ptr<Lazy> lazy_;
};

/// Homogeneous map of subquotients: images (in the target ambient) of the source generators.
struct ModuleMap {
  FPModule source;
  FPModule target;
  std::vector<FreeVector> images;
  int degree = 0;

  /// Relations of the source generators land in the target relations.
  bool is_well_defined() const;
  FPModule kernel() const;
  FPModule image() const;
  FPModule cokernel() const;
};

/// Minimal cokernel presentation R^m / K of a module plus the generator representatives.
struct Presentation {
  FPModule module;
  std::vector<FreeVector> generators;
  FreeMap relations;
};

Presentation presentation(const FPModule& m);
/// The minimal cokernel presentation module.
FPModule prune(const FPModule& m);
/// Evidence-level isomorphism: equal Hilbert series (callers add Betti / Ass comparisons).
bool hilbert_equal(const FPModule& a, const FPModule& b);

/// Chain complex of graded free modules: maps[i] is d_{i+1}: modules[i+1] -> modules[i].
struct GradedComplex {
  std::vector<FreeModule> modules;
  std::vector<FreeMap> maps;
  /// True when the last module is followed by zero (the resolution ended).
  bool complete = false;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  std::vector<int> ranks() const;
  bool composites_vanish() const;
};

/// Resolution through F_cap (fewer when it ends sooner), from minimal generators at each stage.
GradedComplex free_resolution(const FPModule& m, int length_cap);
/// Cancels unit entries between neighbouring differentials.
GradedComplex minimalize(GradedComplex c);

/// A ⊗ X on tuples: the free map A: R^a -> R^b acting on G^a -> G^b (G = ambient of X), with
/// e_(j,k) -> sum_i A_ij e_(i,k). Copy j of G is twisted by the j-th source (target) twist.
struct TupleOperator {
  FreeModule source;
  FreeModule target;
  int g = 0;
  std::vector<FreeVector> columns;

  FreeVector apply(const FreeVector& v) const;
};
TupleOperator tensor_operator(const FreeMap& a, const FreeModule& g);
/// Copies of vectors of G placed in every block of the power module gp.
std::vector<FreeVector> tuple_vectors(const FreeModule& gp, const std::vector<FreeVector>& vs, int g);
/// Elements of span(domain) mapped into span(target_sub); the result generates that submodule.
std::vector<FreeVector> preimage(const TupleOperator& op, const std::vector<FreeVector>& domain,
                                 const std::vector<FreeVector>& target_sub);

/// ker(B * X) / im(A * X) for A: R^a -> R^b, B: R^b -> R^c acting componentwise on X^a, X^b, X^c.
FPModule homology(const FreeMap& a, const FreeMap& b, const FPModule& x);

enum class Functor { Hom, Ext, Tor };
FPModule hom_ext_tor(const FPModule& m, const FPModule& x, int i, Functor which);
inline FPModule hom(const FPModule& m, const FPModule& x) { return hom_ext_tor(m, x, 0, Functor::Ext); }
inline FPModule tensor(const FPModule& m, const FPModule& x) { return hom_ext_tor(m, x, 0, Functor::Tor); }

/// ann_R(M) as an ideal.
SubmoduleBasis annihilator(const FPModule& m);
/// J * M as a subquotient of M's ambient (inside M).
SubmoduleBasis ideal_times(const SubmoduleBasis& j, const FPModule& m);

/// Prime generated by a set of variables ((0) for the empty set).
struct PrimeIdeal {
  std::vector<int> variables;
  friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
  friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) { return a.variables < b.variables; }
  SubmoduleBasis ideal(const RingPtr& ring) const;
  std::string to_string(const Ring& ring) const;
};

struct AssResult {
  std::vector<PrimeIdeal> primes;
  std::string strategy;
};

/// Exact associated primes via monomial combinatorics or the Ext-annihilator criterion;
/// throws StrategyExhausted when neither decides.
AssResult associated_primes(const FPModule& m);
std::string primes_to_string(const std::vector<PrimeIdeal>& p, const Ring& ring);

/// Natural number, infinity, or a lower bound.
struct ExtNat {
  enum class Kind { Finite, Infinite, AtLeast } kind = Kind::Finite;
  int value = 0;
  static ExtNat finite(int v) { return {Kind::Finite, v}; }
  static ExtNat infinite() { return {Kind::Infinite, 0}; }
  static ExtNat at_least(int v) { return {Kind::AtLeast, v}; }
  friend bool operator==(const ExtNat&, const ExtNat&) = default;
  std::string to_string() const;
};

/// Default bound on resolution length for Ext/Tor requests.
constexpr int kResolutionCap = 24;

ExtNat grade(const SubmoduleBasis& j, const FPModule& m);
/// Greedy search for a maximal M-regular sequence among generators of J and random
/// combinations in its degree 1 and 2 strands.
ExtNat regular_sequence_grade(const SubmoduleBasis& j, const FPModule& m, std::uint32_t seed = 1);
/// M / J M.
FPModule quotient_by(const FPModule& m, const SubmoduleBasis& j);
/// True when f is a nonzerodivisor on m.
bool is_nonzerodivisor(const FreeVector& f, const FPModule& m);

FPModule residue_field(const RingPtr& ring);
std::int64_t betti_number(const FPModule& m, int i);
/// Through Tor_i(k, M), for cross-checking the resolution ranks.
std::int64_t betti_number_via_tor(const FPModule& m, int i);
std::int64_t bass_number(const FPModule& m, int i);
/// min{i : mu^i != 0}, searched up to `cap`.
ExtNat depth(const FPModule& m, int cap);

}  // namespace cohera
