#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cohera/module.hpp"

namespace cohera {

/// Free presentations R^{k1} -beta-> R^{k0} -> K and R^{l1} -gamma-> R^{l0} -> L with lifts
/// alpha: R^{k0} -> R^{l0} of f and delta: R^{k1} -> R^{l1}, alpha∘beta = gamma∘delta.
struct LiftedDiagram {
  FreeMap beta;
  FreeMap gamma;
  FreeMap alpha;
  FreeMap delta;

  bool commutes() const;
};

enum class FunctorKind { Hom, Tensor, Ext, Tor, General };

/// F(X) = coker(Hom(L, X) -> Hom(K, X)), the arrow being precomposition with f: K -> L.
class CoherentFunctor {
 public:
  CoherentFunctor(FPModule k, FPModule l, ModuleMap f, std::string label);

  const FPModule& K() const { return k_; }
  const FPModule& L() const { return l_; }
  const ModuleMap& f() const { return f_; }
  const std::string& label() const { return label_; }
  /// Same functor under another display label.
  CoherentFunctor relabeled(std::string label) const;
  FunctorKind kind() const { return kind_; }
  /// Module argument of a built-in (unset for General).
  const FPModule& argument() const { return arg_; }
  int index() const { return index_; }
  const RingPtr& ring() const { return k_.ring(); }

  /// Computed once per functor value (copies share it).
  const LiftedDiagram& diagram() const;

 private:
  friend CoherentFunctor functor_from_hom(const FPModule& m);
  friend CoherentFunctor functor_from_tensor(const FPModule& m);
  friend CoherentFunctor functor_from_ext(const FPModule& m, int i);
  friend CoherentFunctor functor_from_tor(const FPModule& m, int i);
  struct Lazy;

  FPModule k_;
  FPModule l_;
  ModuleMap f_;
  std::string label_;
  FunctorKind kind_ = FunctorKind::General;
  FPModule arg_;
  int index_ = 0;
  std::shared_ptr<Lazy> lazy_;
};

CoherentFunctor functor_from_hom(const FPModule& m);
CoherentFunctor identity_functor(const RingPtr& ring);
CoherentFunctor functor_from_tensor(const FPModule& m);
/// i >= 0; index 0 gives Hom(M, -) and M ⊗ - respectively.
CoherentFunctor functor_from_ext(const FPModule& m, int i);
CoherentFunctor functor_from_tor(const FPModule& m, int i);

/// Direct route: Hom/tensor/Ext/Tor through resolutions, General through Hom(K, X) and Hom(L, X).
FPModule evaluate(const CoherentFunctor& f, const FPModule& x);
/// ker(beta*) / alpha*(ker gamma*) after applying Hom(-, X) to the lifted diagram.
FPModule evaluate_via_diagram(const CoherentFunctor& f, const FPModule& x);

enum class Route { Direct, Diagram };

/// Composition tree of functors, evaluated right to left.
class FunctorExpression {
 public:
  static FunctorExpression leaf(CoherentFunctor f);
  static FunctorExpression compose(FunctorExpression outer, FunctorExpression inner);

  bool is_leaf() const { return leaf_ != nullptr; }
  const CoherentFunctor& functor() const { return *leaf_; }
  const FunctorExpression& outer() const { return children_->first; }
  const FunctorExpression& inner() const { return children_->second; }
  std::string label() const;

 private:
  std::shared_ptr<const CoherentFunctor> leaf_;
  std::shared_ptr<const std::pair<FunctorExpression, FunctorExpression>> children_;
};

FPModule evaluate_expression(const FunctorExpression& e, const FPModule& x, Route route = Route::Direct);

struct BuiltinSignature {
  std::string name;
  std::vector<std::string> arguments;
  std::string summary;
};
const std::vector<BuiltinSignature>& functor_builtins();

}  // namespace cohera
