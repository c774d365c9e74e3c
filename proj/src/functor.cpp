#include "cohera/functor.hpp"

#include <mutex>

#include "cohera/errors.hpp"
#include "cohera/groebner.hpp"
#include "cohera/submodule.hpp"

namespace cohera {

struct CoherentFunctor::Lazy {
  std::once_flag once;
  std::unique_ptr<LiftedDiagram> diagram;
};

namespace {

std::vector<FreeVector> concat(std::vector<FreeVector> a, const std::vector<FreeVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Coefficients of v in the generators of m (modulo its relations), as polynomials.
std::vector<FreeVector> coordinates(const FPModule& m, const FreeVector& v) {
  const auto& gens = m.gens().gens();
  Lifter lifter(m.ambient(), gens, m.rels().gens(), generator_degrees(m.gens()));
  auto c = lifter.lift(v);
  if (!c) throw ContractViolation("vector does not lie in the module");
  return *c;
}

LiftedDiagram build_diagram(const FPModule& k, const FPModule& l, const ModuleMap& f) {
  const Presentation& pk = k.presentation();
  const Presentation& pl = l.presentation();
  LiftedDiagram d;
  d.beta = pk.relations;
  d.gamma = pl.relations;
  const FreeModule& k0 = d.beta.target;
  const FreeModule& l0 = d.gamma.target;
  std::vector<int> l0_twists = l0.twists();
  Lifter into_l(l.ambient(), pl.generators, l.rels().gens(), l0_twists);
  const FreeModule& lam = l.ambient();
  std::vector<FreeVector> alpha_cols;
  for (const auto& g : pk.generators) {
    std::vector<FreeVector> c = coordinates(k, g);
    FreeVector image;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      image = lam.add(image, lam.mul_poly(c[i], f.images[i]));
    }
    auto col = into_l.lift_vector(image);
    if (!col) throw ContractViolation("map image leaves the target module");
    alpha_cols.push_back(l0.normalize(col->terms));
  }
  d.alpha = FreeMap(k0, l0, std::move(alpha_cols));
  Lifter through_gamma(l0, d.gamma.columns, {}, d.gamma.source.twists());
  std::vector<FreeVector> delta_cols;
  for (const auto& col : d.beta.columns) {
    auto lifted = through_gamma.lift_vector(d.alpha.apply(col));
    if (!lifted) throw ContractViolation("map does not respect relations");
    delta_cols.push_back(d.gamma.source.normalize(lifted->terms));
  }
  d.delta = FreeMap(d.beta.source, d.gamma.source, std::move(delta_cols));
  return d;
}

FreeModule module_at(const GradedComplex& res, const RingPtr& ring, int j) {
  if (j < 0 || j > res.length()) return FreeModule(ring, {});
  return res.modules[static_cast<std::size_t>(j)];
}

FreeMap differential(const GradedComplex& res, const RingPtr& ring, int j) {
  if (j >= 1 && j <= static_cast<int>(res.maps.size())) return res.maps[static_cast<std::size_t>(j - 1)];
  return FreeMap::zero(module_at(res, ring, j), module_at(res, ring, j - 1));
}

FPModule hom_quotient(const FPModule& hk, const FPModule& hl, const TupleOperator& a) {
  std::vector<FreeVector> rels = hk.rels().gens();
  for (const auto& u : hl.gens().gens()) {
    FreeVector v = a.apply(u);
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  SubmoduleBasis gens = minimal_generators_modulo(hk.gens(), SubmoduleBasis(hk.ambient(), rels));
  return FPModule(hk.ambient(), gens.gens(), std::move(rels));
}

}  // namespace

bool LiftedDiagram::commutes() const {
  for (std::size_t b = 0; b < beta.columns.size(); ++b) {
    FreeVector lhs = alpha.apply(beta.columns[b]);
    FreeVector rhs = gamma.apply(delta.columns[b]);
    if (!contains(SubmoduleBasis::zero(alpha.target), alpha.target.sub(lhs, rhs))) return false;
  }
  return true;
}

CoherentFunctor::CoherentFunctor(FPModule k, FPModule l, ModuleMap f, std::string label)
    : k_(std::move(k)), l_(std::move(l)), f_(std::move(f)), label_(std::move(label)), lazy_(std::make_shared<Lazy>()) {
  if (!same_ring(*k_.ring(), *l_.ring())) throw ContractViolation("functor modules over different rings");
  if (f_.degree != 0) throw ContractViolation("functor presentation maps must have degree 0");
  if (f_.images.size() != k_.gens().size()) throw ContractViolation("one image per generator of K required");
}

const LiftedDiagram& CoherentFunctor::diagram() const {
  std::call_once(lazy_->once, [&] { lazy_->diagram = std::make_unique<LiftedDiagram>(build_diagram(k_, l_, f_)); });
  return *lazy_->diagram;
}

CoherentFunctor functor_from_hom(const FPModule& m) {
  FPModule zero = FPModule::zero(m.ring());
  ModuleMap f{m, zero, std::vector<FreeVector>(m.gens().size()), 0};
  CoherentFunctor out(m, zero, std::move(f), "hom");
  out.kind_ = FunctorKind::Hom;
  out.arg_ = m;
  return out;
}

CoherentFunctor CoherentFunctor::relabeled(std::string label) const {
  CoherentFunctor out = *this;
  out.label_ = std::move(label);
  return out;
}

CoherentFunctor identity_functor(const RingPtr& ring) {
  return functor_from_hom(FPModule::free(FreeModule::unit(ring))).relabeled("identity");
}

CoherentFunctor functor_from_ext(const FPModule& m, int i) {
  if (i < 0) throw ContractViolation("negative homological index");
  if (i + 1 > kResolutionCap) throw CapExceeded("index " + std::to_string(i) + " exceeds the resolution cap; increase cap");
  const RingPtr& ring = m.ring();
  GradedComplex res = m.resolution(i + 1);
  FreeModule fi = module_at(res, ring, i);
  FPModule k = FPModule::cokernel(fi, differential(res, ring, i + 1).columns);
  FPModule l = FPModule::free(module_at(res, ring, i - 1));
  std::vector<FreeVector> images = differential(res, ring, i).columns;
  images.resize(k.gens().size());
  CoherentFunctor out(k, l, ModuleMap{k, l, std::move(images), 0}, "ext");
  out.kind_ = i == 0 ? FunctorKind::Hom : FunctorKind::Ext;
  out.arg_ = m;
  out.index_ = i;
  return out;
}

CoherentFunctor functor_from_tor(const FPModule& m, int i) {
  if (i < 0) throw ContractViolation("negative homological index");
  if (i + 1 > kResolutionCap) throw CapExceeded("index " + std::to_string(i) + " exceeds the resolution cap; increase cap");
  const RingPtr& ring = m.ring();
  GradedComplex res = m.resolution(i + 1);
  FreeMap di = differential(res, ring, i).transpose();
  FreeMap dnext = differential(res, ring, i + 1).transpose();
  FPModule k = FPModule::cokernel(di.target, di.columns);
  FPModule l = FPModule::free(dnext.target);
  std::vector<FreeVector> images = dnext.columns;
  CoherentFunctor out(k, l, ModuleMap{k, l, std::move(images), 0}, "tor");
  out.kind_ = i == 0 ? FunctorKind::Tensor : FunctorKind::Tor;
  out.arg_ = m;
  out.index_ = i;
  return out;
}

CoherentFunctor functor_from_tensor(const FPModule& m) {
  CoherentFunctor out = functor_from_tor(m, 0);
  out.label_ = "tensor";
  return out;
}

FPModule evaluate(const CoherentFunctor& f, const FPModule& x) {
  if (!same_ring(*f.ring(), *x.ring())) throw ContractViolation("functor and argument over different rings");
  switch (f.kind()) {
    case FunctorKind::Hom:
      return hom(f.argument(), x);
    case FunctorKind::Tensor:
      return tensor(f.argument(), x);
    case FunctorKind::Ext:
      return hom_ext_tor(f.argument(), x, f.index(), Functor::Ext);
    case FunctorKind::Tor:
      return hom_ext_tor(f.argument(), x, f.index(), Functor::Tor);
    case FunctorKind::General:
      break;
  }
  const LiftedDiagram& d = f.diagram();
  FPModule hk = hom(f.K(), x);
  FPModule hl = hom(f.L(), x);
  return hom_quotient(hk, hl, tensor_operator(d.alpha.transpose(), x.ambient()));
}

FPModule evaluate_via_diagram(const CoherentFunctor& f, const FPModule& x) {
  if (!same_ring(*f.ring(), *x.ring())) throw ContractViolation("functor and argument over different rings");
  const LiftedDiagram& d = f.diagram();
  const FreeModule& g = x.ambient();
  const int gr = g.rank();
  TupleOperator bs = tensor_operator(d.beta.transpose(), g);
  TupleOperator gs = tensor_operator(d.gamma.transpose(), g);
  TupleOperator as = tensor_operator(d.alpha.transpose(), g);
  const auto all = concat(x.gens().gens(), x.rels().gens());
  std::vector<FreeVector> ker_beta =
      preimage(bs, tuple_vectors(bs.source, all, gr), tuple_vectors(bs.target, x.rels().gens(), gr));
  std::vector<FreeVector> ker_gamma =
      preimage(gs, tuple_vectors(gs.source, all, gr), tuple_vectors(gs.target, x.rels().gens(), gr));
  std::vector<FreeVector> rels = tuple_vectors(bs.source, x.rels().gens(), gr);
  for (const auto& u : ker_gamma) {
    FreeVector v = as.apply(u);
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  SubmoduleBasis gens =
      minimal_generators_modulo(SubmoduleBasis(bs.source, std::move(ker_beta)), SubmoduleBasis(bs.source, rels));
  return FPModule(bs.source, gens.gens(), std::move(rels));
}

FunctorExpression FunctorExpression::leaf(CoherentFunctor f) {
  FunctorExpression e;
  e.leaf_ = std::make_shared<const CoherentFunctor>(std::move(f));
  return e;
}

FunctorExpression FunctorExpression::compose(FunctorExpression outer, FunctorExpression inner) {
  FunctorExpression e;
  e.children_ = std::make_shared<const std::pair<FunctorExpression, FunctorExpression>>(std::move(outer), std::move(inner));
  return e;
}

std::string FunctorExpression::label() const {
  if (is_leaf()) return functor().label();
  return "compose(" + outer().label() + ", " + inner().label() + ")";
}

FPModule evaluate_expression(const FunctorExpression& e, const FPModule& x, Route route) {
  if (e.is_leaf()) return route == Route::Direct ? evaluate(e.functor(), x) : evaluate_via_diagram(e.functor(), x);
  return evaluate_expression(e.outer(), evaluate_expression(e.inner(), x, route), route);
}

const std::vector<BuiltinSignature>& functor_builtins() {
  static const std::vector<BuiltinSignature> list = {
      {"hom", {"module"}, "Hom(M, -)"},
      {"tensor", {"module"}, "M (x) -"},
      {"ext", {"module", "i"}, "Ext^i(M, -)"},
      {"tor", {"module", "i"}, "Tor_i(M, -)"},
      {"compose", {"functor", "functor"}, "G(F(-)), evaluated right to left"},
  };
  return list;
}

}  // namespace cohera
