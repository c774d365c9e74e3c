#include "cohera/module.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "cohera/errors.hpp"

namespace cohera {

FreeMap::FreeMap(FreeModule s, FreeModule t, std::vector<FreeVector> cols)
    : source(std::move(s)), target(std::move(t)), columns(std::move(cols)) {
  if (static_cast<int>(columns.size()) != source.rank()) throw ContractViolation("one column per source basis vector");
  if (!same_ring(source.ring(), target.ring())) throw ContractViolation("free map between different rings");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].is_zero()) continue;
    auto d = target.homogeneous_degree(columns[j]);
    if (!d || *d != source.twist(static_cast<int>(j))) {
      throw ContractViolation("free map column " + std::to_string(j) + " is not homogeneous of degree zero");
    }
  }
}

FreeMap FreeMap::identity(const FreeModule& f) {
  std::vector<FreeVector> cols;
  for (int i = 0; i < f.rank(); ++i) cols.push_back(f.basis(i));
  return FreeMap(f, f, std::move(cols));
}

FreeVector FreeMap::entry(int i, int j) const {
  FreeModule unit = FreeModule::unit(target.ring_ptr());
  std::vector<Term> terms;
  for (const auto& t : columns[static_cast<std::size_t>(j)].terms) {
    if (t.comp == i) terms.push_back(Term{t.mon, 0, t.coeff});
  }
  return unit.normalize(std::move(terms));
}

namespace {

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(-x);
  return out;
}

}  // namespace

FreeMap FreeMap::transpose() const {
  FreeModule new_source(target.ring_ptr(), negated(target.twists()), target.order());
  FreeModule new_target(source.ring_ptr(), negated(source.twists()), source.order());
  std::vector<std::vector<Term>> cols(static_cast<std::size_t>(target.rank()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& t : columns[j].terms) cols[static_cast<std::size_t>(t.comp)].push_back(Term{t.mon, static_cast<int>(j), t.coeff});
  }
  std::vector<FreeVector> out;
  for (auto& c : cols) out.push_back(new_target.normalize(std::move(c)));
  return FreeMap(new_source, new_target, std::move(out));
}

FreeMap FreeMap::after(const FreeMap& other) const {
  if (other.target.twists() != source.twists()) throw ContractViolation("composing incompatible free maps");
  std::vector<FreeVector> cols;
  for (const auto& c : other.columns) cols.push_back(apply(c));
  return FreeMap(other.source, target, std::move(cols));
}

bool FreeMap::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const FreeVector& c) { return c.is_zero(); });
}

struct FPModule::Lazy {
  std::once_flag hilbert_once;
  HilbertSeries hilbert;
  std::once_flag presentation_once;
  std::unique_ptr<Presentation> presentation;
  std::mutex resolution_mu;
  std::unique_ptr<GradedComplex> resolution;
};

namespace {

void require_homogeneous(const SubmoduleBasis& s, const char* what) {
  if (!s.homogeneous()) throw ContractViolation(std::string("inhomogeneous ") + what + " in a graded module");
}

}  // namespace

FPModule::FPModule(FreeModule ambient, std::vector<FreeVector> gens, std::vector<FreeVector> rels)
    : ambient_(std::move(ambient)),
      gens_(ambient_, std::move(gens)),
      rels_(ambient_, std::move(rels)),
      lazy_(std::make_shared<Lazy>()) {
  require_homogeneous(gens_, "generator");
  require_homogeneous(rels_, "relation");
  top_ = sum(gens_, rels_);
}

FPModule FPModule::cokernel(FreeModule ambient, std::vector<FreeVector> rels) {
  std::vector<FreeVector> gens;
  for (int i = 0; i < ambient.rank(); ++i) gens.push_back(ambient.basis(i));
  return FPModule(std::move(ambient), std::move(gens), std::move(rels));
}

FPModule FPModule::quotient_ring(const SubmoduleBasis& ideal) {
  if (ideal.ambient().rank() != 1) throw ContractViolation("quotient ring needs an ideal");
  return cokernel(FreeModule::unit(ideal.ambient().ring_ptr()), ideal.gens());
}

FPModule FPModule::submodule(const SubmoduleBasis& u) { return FPModule(u.ambient(), u.gens(), {}); }

FPModule FPModule::subquotient(const SubmoduleBasis& u, const SubmoduleBasis& w) {
  if (!(u.ambient() == w.ambient())) throw ContractViolation("subquotient parts in different ambients");
  return FPModule(u.ambient(), u.gens(), w.gens());
}

bool FPModule::is_cokernel() const { return is_subset(SubmoduleBasis::whole(ambient_), top_); }

const HilbertSeries& FPModule::hilbert_series() const {
  std::call_once(lazy_->hilbert_once, [&] { lazy_->hilbert = quotient_series(rels_) - quotient_series(top_); });
  return lazy_->hilbert;
}

FPModule FPModule::over_ambient_polynomial_ring() const {
  RingPtr s = ring()->ambient_polynomial_ring();
  FreeModule f = ambient_.over_ring(s);
  std::vector<FreeVector> rels = rels_.gens();
  for (int i = 0; i < f.rank(); ++i) {
    for (const auto& r : ring()->base_relations()) rels.push_back(f.mul_poly(r, f.basis(i)));
  }
  return FPModule(f, gens_.gens(), std::move(rels));
}

FPModule FPModule::shifted(int s) const {
  FreeModule f = ambient_.shifted(s);
  return FPModule(f, gens_.gens(), rels_.gens());
}

std::string FPModule::describe() const {
  std::string s = "subquotient in rank " + std::to_string(ambient_.rank()) + " (" + std::to_string(gens_.size()) +
                  " generators, " + std::to_string(rels_.size()) + " relations)";
  return s;
}

std::vector<int> GradedComplex::ranks() const {
  std::vector<int> r;
  for (const auto& m : modules) r.push_back(m.rank());
  return r;
}

bool GradedComplex::composites_vanish() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!maps[i].after(maps[i + 1]).is_zero()) {
      // Over a quotient ring the composite only has to vanish modulo I0.
      const FreeModule& t = maps[i].target;
      SubmoduleBasis zero = groebner_basis(SubmoduleBasis::zero(t));
      for (const auto& c : maps[i].after(maps[i + 1]).columns) {
        if (!normal_form(c, zero).is_zero()) return false;
      }
    }
  }
  return true;
}

const Presentation& FPModule::presentation() const {
  std::call_once(lazy_->presentation_once, [&] {
    SubmoduleBasis mg = minimal_generators_modulo(gens_, rels_);
    std::vector<int> degs = generator_degrees(mg);
    FreeModule p(ring(), degs);
    SubmoduleBasis k = syzygies_modulo(ambient_, mg.gens(), rels_.gens(), degs);
    // Re-express kernel vectors in p (same components and twists).
    std::vector<FreeVector> kv;
    for (const auto& v : k.gens()) kv.push_back(p.normalize(v.terms));
    SubmoduleBasis kmin = minimal_generators(SubmoduleBasis(p, std::move(kv)));
    FreeModule rel_source(ring(), generator_degrees(kmin));
    auto pres = std::make_unique<Presentation>();
    pres->module = FPModule::cokernel(p, kmin.gens());
    pres->generators = mg.gens();
    pres->relations = FreeMap(rel_source, p, kmin.gens());
    lazy_->presentation = std::move(pres);
  });
  return *lazy_->presentation;
}

Presentation presentation(const FPModule& m) { return m.presentation(); }

FPModule prune(const FPModule& m) { return m.presentation().module; }

bool hilbert_equal(const FPModule& a, const FPModule& b) { return a.hilbert_series() == b.hilbert_series(); }

GradedComplex FPModule::resolution(int length_cap) const {
  if (length_cap < 0) throw ContractViolation("negative resolution cap");
  std::lock_guard<std::mutex> lock(lazy_->resolution_mu);
  auto& res = lazy_->resolution;
  if (!res) {
    res = std::make_unique<GradedComplex>();
    const Presentation& p = presentation();
    res->modules.push_back(p.module.ambient());
    if (p.relations.source.rank() == 0) {
      res->complete = true;
    } else {
      res->modules.push_back(p.relations.source);
      res->maps.push_back(p.relations);
    }
  }
  while (!res->complete && res->length() < length_cap) {
    const FreeMap& last = res->maps.back();
    SubmoduleBasis syz = syzygies_modulo(last.target, last.columns, {}, last.source.twists());
    std::vector<FreeVector> kv;
    for (const auto& v : syz.gens()) kv.push_back(last.source.normalize(v.terms));
    SubmoduleBasis mg = minimal_generators(SubmoduleBasis(last.source, std::move(kv)));
    if (mg.size() == 0) {
      res->complete = true;
      break;
    }
    FreeModule next(ring(), generator_degrees(mg));
    FreeMap d(next, last.source, mg.gens());
    res->modules.push_back(next);
    res->maps.push_back(std::move(d));
  }
  GradedComplex out = *res;
  if (out.length() > length_cap) {
    out.modules.resize(static_cast<std::size_t>(length_cap) + 1);
    out.maps.resize(static_cast<std::size_t>(length_cap));
    out.complete = false;
  }
  return out;
}

GradedComplex free_resolution(const FPModule& m, int length_cap) { return m.resolution(length_cap); }

namespace {

FreeModule drop_basis(const FreeModule& f, int idx) {
  std::vector<int> tw = f.twists();
  tw.erase(tw.begin() + idx);
  return FreeModule(f.ring_ptr(), std::move(tw), f.order());
}

FreeVector drop_component(const FreeModule& to, const FreeVector& v, int idx) {
  std::vector<Term> terms;
  for (const auto& t : v.terms) {
    if (t.comp == idx) continue;
    terms.push_back(Term{t.mon, t.comp > idx ? t.comp - 1 : t.comp, t.coeff});
  }
  return to.normalize(std::move(terms));
}

bool cancel_one_unit(GradedComplex& c) {
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    FreeMap& d = c.maps[k];
    for (int q = 0; q < d.source.rank(); ++q) {
      for (const auto& t : d.columns[static_cast<std::size_t>(q)].terms) {
        if (!t.mon.is_one()) continue;
        const int p = t.comp;
        const Field& field = d.target.field();
        const Coeff u = t.coeff;
        FreeModule new_target = drop_basis(d.target, p);
        FreeModule new_source = drop_basis(d.source, q);
        std::vector<FreeVector> cols;
        const FreeVector colq = d.columns[static_cast<std::size_t>(q)];
        for (int j = 0; j < d.source.rank(); ++j) {
          if (j == q) continue;
          FreeVector a = d.entry(p, j);
          FreeVector col = d.columns[static_cast<std::size_t>(j)];
          if (!a.is_zero()) {
            FreeVector scaled = FreeModule::unit(d.target.ring_ptr()).scale(a, field.inv(u));
            col = d.target.sub(col, d.target.mul_poly(scaled, colq));
          }
          cols.push_back(drop_component(new_target, col, p));
        }
        if (k + 1 < c.maps.size()) {
          FreeMap& up = c.maps[k + 1];
          std::vector<FreeVector> ucols;
          for (const auto& col : up.columns) ucols.push_back(drop_component(new_source, col, q));
          up = FreeMap(up.source, new_source, std::move(ucols));
        }
        if (k > 0) {
          FreeMap& down = c.maps[k - 1];
          std::vector<FreeVector> dcols = down.columns;
          dcols.erase(dcols.begin() + p);
          down = FreeMap(new_target, down.target, std::move(dcols));
        }
        d = FreeMap(new_source, new_target, std::move(cols));
        c.modules[k] = new_target;
        c.modules[k + 1] = new_source;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

GradedComplex minimalize(GradedComplex c) {
  while (cancel_one_unit(c)) {
  }
  // Trailing zero modules carry no information.
  while (!c.maps.empty() && c.modules.back().rank() == 0) {
    c.modules.pop_back();
    c.maps.pop_back();
  }
  return c;
}

TupleOperator tensor_operator(const FreeMap& a, const FreeModule& g) {
  TupleOperator op;
  op.g = g.rank();
  op.source = g.power(a.source.twists());
  op.target = g.power(a.target.twists());
  for (int j = 0; j < a.source.rank(); ++j) {
    for (int k = 0; k < op.g; ++k) {
      std::vector<Term> terms;
      for (const auto& t : a.columns[static_cast<std::size_t>(j)].terms) {
        terms.push_back(Term{t.mon, t.comp * op.g + k, t.coeff});
      }
      op.columns.push_back(op.target.normalize(std::move(terms)));
    }
  }
  return op;
}

FreeVector TupleOperator::apply(const FreeVector& v) const { return apply_combination(target, columns, v); }

std::vector<FreeVector> tuple_vectors(const FreeModule& gp, const std::vector<FreeVector>& vs, int g) {
  std::vector<FreeVector> out;
  const int copies = g == 0 ? 0 : gp.rank() / g;
  for (int j = 0; j < copies; ++j) {
    for (const auto& v : vs) {
      std::vector<Term> terms = v.terms;
      for (auto& t : terms) t.comp += j * g;
      out.push_back(gp.normalize(std::move(terms)));
    }
  }
  return out;
}

std::vector<FreeVector> preimage(const TupleOperator& op, const std::vector<FreeVector>& domain,
                                 const std::vector<FreeVector>& target_sub) {
  if (op.target.rank() == 0) return domain;
  std::vector<FreeVector> images, gens;
  std::vector<int> degs;
  for (const auto& u : domain) {
    if (u.is_zero()) continue;
    auto d = op.source.homogeneous_degree(u);
    if (!d) throw ContractViolation("preimage of an inhomogeneous vector");
    gens.push_back(u);
    images.push_back(op.apply(u));
    degs.push_back(static_cast<int>(*d));
  }
  std::vector<FreeVector> out;
  SubmoduleBasis k = syzygies_modulo(op.target, images, target_sub, degs);
  for (const auto& c : k.gens()) {
    FreeVector v = apply_combination(op.source, gens, c);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

FPModule homology(const FreeMap& a, const FreeMap& b, const FPModule& x) {
  if (a.target.twists() != b.source.twists()) throw ContractViolation("homology of non-composable maps");
  const FreeModule& g = x.ambient();
  const int gr = g.rank();
  TupleOperator ao = tensor_operator(a, g);
  TupleOperator bo = tensor_operator(b, g);
  std::vector<FreeVector> ub = tuple_vectors(bo.source, x.gens().gens(), gr);
  std::vector<FreeVector> wb = tuple_vectors(bo.source, x.rels().gens(), gr);
  std::vector<FreeVector> wc = tuple_vectors(bo.target, x.rels().gens(), gr);
  std::vector<FreeVector> ua = tuple_vectors(ao.source, x.gens().gens(), gr);
  std::vector<FreeVector> z = preimage(bo, ub, wc);
  std::vector<FreeVector> rels = wb;
  for (const auto& u : ua) {
    FreeVector v = ao.apply(u);
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  SubmoduleBasis zs = minimal_generators_modulo(SubmoduleBasis(bo.source, std::move(z)), SubmoduleBasis(bo.source, rels));
  return FPModule(bo.source, zs.gens(), std::move(rels));
}

FPModule hom_ext_tor(const FPModule& m, const FPModule& x, int i, Functor which) {
  if (i < 0) throw ContractViolation("negative homological index");
  if (!same_ring(*m.ring(), *x.ring())) throw ContractViolation("Hom/Ext/Tor arguments over different rings");
  if (which == Functor::Hom && i != 0) throw ContractViolation("Hom has index 0");
  if (i + 1 > kResolutionCap) throw CapExceeded("index " + std::to_string(i) + " exceeds the resolution cap; increase cap");
  GradedComplex res = m.resolution(i + 1);
  const RingPtr& ring = m.ring();
  auto module_at = [&](int j) {
    if (j < 0 || j > res.length()) return FreeModule(ring, {});
    return res.modules[static_cast<std::size_t>(j)];
  };
  auto diff = [&](int j) {  // d_j: F_j -> F_{j-1}
    if (j >= 1 && j <= static_cast<int>(res.maps.size())) return res.maps[static_cast<std::size_t>(j - 1)];
    return FreeMap::zero(module_at(j), module_at(j - 1));
  };
  if (which == Functor::Tor) return homology(diff(i + 1), diff(i), x);
  return homology(diff(i).transpose(), diff(i + 1).transpose(), x);
}

bool ModuleMap::is_well_defined() const {
  const SubmoduleBasis& sg = source.gens();
  if (images.size() != sg.size()) return false;
  std::vector<int> degs = generator_degrees(sg);
  SubmoduleBasis syz = syzygies_modulo(source.ambient(), sg.gens(), source.rels().gens(), degs);
  const SubmoduleBasis& tw = target.rels().groebner();
  for (const auto& c : syz.gens()) {
    if (!normal_form(apply_combination(target.ambient(), images, c), tw).is_zero()) return false;
  }
  return true;
}

FPModule ModuleMap::image() const { return FPModule(target.ambient(), images, target.rels().gens()); }

FPModule ModuleMap::cokernel() const {
  std::vector<FreeVector> rels = target.rels().gens();
  rels.insert(rels.end(), images.begin(), images.end());
  return FPModule(target.ambient(), target.gens().gens(), std::move(rels));
}

FPModule ModuleMap::kernel() const {
  std::vector<int> degs = generator_degrees(source.gens());
  for (auto& d : degs) d += degree;
  SubmoduleBasis k = syzygies_modulo(target.ambient(), images, target.rels().gens(), degs);
  std::vector<FreeVector> z;
  for (const auto& c : k.gens()) {
    FreeVector v = apply_combination(source.ambient(), source.gens().gens(), c);
    if (!v.is_zero()) z.push_back(std::move(v));
  }
  return FPModule(source.ambient(), std::move(z), source.rels().gens());
}

SubmoduleBasis annihilator(const FPModule& m) { return colon(m.rels(), m.gens()); }

SubmoduleBasis ideal_times(const SubmoduleBasis& j, const FPModule& m) {
  std::vector<FreeVector> g = m.rels().gens();
  const FreeModule& f = m.ambient();
  for (const auto& a : j.gens()) {
    for (const auto& u : m.gens().gens()) {
      FreeVector p = f.mul_poly(a, u);
      if (!p.is_zero()) g.push_back(std::move(p));
    }
  }
  return SubmoduleBasis(f, std::move(g));
}

FPModule quotient_by(const FPModule& m, const SubmoduleBasis& j) {
  return FPModule(m.ambient(), m.gens().gens(), ideal_times(j, m).gens());
}

SubmoduleBasis PrimeIdeal::ideal(const RingPtr& ring) const {
  FreeModule unit = FreeModule::unit(ring);
  std::vector<FreeVector> g;
  for (int v : variables) {
    g.push_back(unit.monomial_vector(Monomial::variable(ring->nvars(), static_cast<std::size_t>(v)), 0, ring->field().one()));
  }
  return SubmoduleBasis(unit, std::move(g));
}

std::string PrimeIdeal::to_string(const Ring& ring) const {
  if (variables.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i) s += ",";
    s += ring.variables()[static_cast<std::size_t>(variables[i])];
  }
  return s + ")";
}

std::string primes_to_string(const std::vector<PrimeIdeal>& p, const Ring& ring) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].to_string(ring);
  }
  return s + "}";
}

AssResult associated_primes(const FPModule& m) {
  AssResult out;
  if (m.is_zero()) {
    out.strategy = "zero module";
    return out;
  }
  FPModule ms = prune(m).over_ambient_polynomial_ring();
  const SubmoduleBasis& w = ms.rels().groebner();
  const std::size_t n = ms.ring()->nvars();
  std::set<PrimeIdeal> primes;
  if (is_monomial_submodule(w)) {
    std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(ms.ambient().rank()));
    for (const auto& g : w.gens()) leads[static_cast<std::size_t>(g.lead().comp)].push_back(g.lead().mon);
    for (auto& l : leads) {
      for (auto& p : monomial_associated_primes(n, l)) primes.insert(PrimeIdeal{p});
    }
    out.primes.assign(primes.begin(), primes.end());
    out.strategy = "monomial";
    return out;
  }
  FPModule s = FPModule::free(FreeModule::unit(ms.ring()));
  for (std::size_t c = 0; c <= n; ++c) {
    FPModule e = hom_ext_tor(ms, s, static_cast<int>(c), Functor::Ext);
    if (e.is_zero()) continue;
    SubmoduleBasis ann = annihilator(e);
    KrullDim d = quotient_series(ann).krull_dim();
    int codim = static_cast<int>(n) - (d ? *d : -1);
    if (codim != static_cast<int>(c)) continue;
    if (c == 0) {
      primes.insert(PrimeIdeal{});
    } else if (c == n) {
      std::vector<int> all;
      for (std::size_t v = 0; v < n; ++v) all.push_back(static_cast<int>(v));
      primes.insert(PrimeIdeal{all});
    } else if (is_monomial_submodule(ann.groebner())) {
      std::vector<Monomial> gens;
      for (const auto& g : ann.groebner().gens()) gens.push_back(g.lead().mon);
      for (auto& p : monomial_minimal_primes(n, gens)) {
        if (p.size() == c) primes.insert(PrimeIdeal{p});
      }
    } else {
      throw StrategyExhausted("associated primes: annihilator of Ext^" + std::to_string(c) +
                              " is not monomial; no supported strategy decides its minimal primes");
    }
  }
  out.primes.assign(primes.begin(), primes.end());
  out.strategy = "ext-annihilator";
  return out;
}

std::string ExtNat::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::Infinite:
      return "inf";
    case Kind::AtLeast:
      return ">=" + std::to_string(value);
  }
  return "?";
}

namespace {

bool absorbs(const SubmoduleBasis& j, const FPModule& m) { return is_subset(m.top(), ideal_times(j, m)); }

}  // namespace

ExtNat grade(const SubmoduleBasis& j, const FPModule& m) {
  if (m.is_zero() || absorbs(j, m)) return ExtNat::infinite();
  FPModule rj = FPModule::quotient_ring(j);
  const int n = static_cast<int>(m.ring()->nvars());
  const int cap = m.ring()->is_quotient() ? n + 4 : n;
  for (int i = 0; i <= cap; ++i) {
    if (!hom_ext_tor(rj, m, i, Functor::Ext).is_zero()) return ExtNat::finite(i);
  }
  return ExtNat::at_least(cap);
}

bool is_nonzerodivisor(const FreeVector& f, const FPModule& m) {
  const FreeModule& a = m.ambient();
  std::vector<FreeVector> images;
  std::vector<int> degs;
  auto df = FreeModule::unit(m.ring()).homogeneous_degree(f);
  if (!df) throw ContractViolation("nonzerodivisor test needs a homogeneous element");
  for (const auto& u : m.gens().gens()) {
    images.push_back(a.mul_poly(f, u));
    degs.push_back(static_cast<int>(*a.homogeneous_degree(u) + *df));
  }
  SubmoduleBasis k = syzygies_modulo(a, images, m.rels().gens(), degs);
  const SubmoduleBasis& w = m.rels().groebner();
  for (const auto& c : k.gens()) {
    if (!normal_form(apply_combination(a, m.gens().gens(), c), w).is_zero()) return false;
  }
  return true;
}

ExtNat regular_sequence_grade(const SubmoduleBasis& j, const FPModule& m, std::uint32_t seed) {
  if (m.is_zero() || absorbs(j, m)) return ExtNat::infinite();
  const RingPtr& ring = m.ring();
  FreeModule unit = FreeModule::unit(ring);
  const Field& k = ring->field();
  std::vector<FreeVector> candidates = j.gens();
  std::mt19937 rng(seed);
  for (int d = 1; d <= 2; ++d) {
    std::vector<FreeVector> strand;
    for (const auto& g : j.gens()) {
      int dg = static_cast<int>(*unit.homogeneous_degree(g));
      if (dg > d) continue;
      // all monomials of degree d - dg (weighted)
      std::vector<Monomial> mons{Monomial(ring->nvars())};
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        std::vector<Monomial> next;
        for (const auto& mm : mons) {
          for (int e = 0; ring->degree(mm) + ring->weights()[v] * e <= d - dg; ++e) {
            next.push_back(mm * Monomial::variable(ring->nvars(), v, e));
          }
        }
        mons = std::move(next);
      }
      for (const auto& mm : mons) {
        if (ring->degree(mm) == d - dg) strand.push_back(unit.mul_term(g, k.one(), mm));
      }
    }
    if (strand.empty()) continue;
    std::uniform_int_distribution<std::int64_t> coef(1, 1000);
    for (int t = 0; t < 4; ++t) {
      FreeVector acc;
      for (const auto& s : strand) acc = unit.add(acc, unit.scale(s, k.from_int(coef(rng))));
      if (!acc.is_zero()) candidates.push_back(acc);
    }
  }
  FPModule cur = m;
  int length = 0;
  for (;;) {
    if (cur.is_zero() || absorbs(j, cur)) break;
    bool extended = false;
    for (const auto& f : candidates) {
      if (f.is_zero()) continue;
      if (is_nonzerodivisor(f, cur)) {
        cur = quotient_by(cur, SubmoduleBasis(unit, {f}));
        ++length;
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  return ExtNat::finite(length);
}

FPModule residue_field(const RingPtr& ring) {
  std::vector<int> all;
  for (std::size_t v = 0; v < ring->nvars(); ++v) all.push_back(static_cast<int>(v));
  return FPModule::quotient_ring(PrimeIdeal{all}.ideal(ring));
}

std::int64_t betti_number(const FPModule& m, int i) {
  GradedComplex r = m.resolution(i);
  if (i > r.length()) return 0;
  return r.modules[static_cast<std::size_t>(i)].rank();
}

std::int64_t betti_number_via_tor(const FPModule& m, int i) {
  auto l = hom_ext_tor(residue_field(m.ring()), m, i, Functor::Tor).length();
  if (!l) throw ValidationFailure("Tor with the residue field has infinite length");
  return *l;
}

std::int64_t bass_number(const FPModule& m, int i) {
  auto l = hom_ext_tor(residue_field(m.ring()), m, i, Functor::Ext).length();
  if (!l) throw ValidationFailure("Ext from the residue field has infinite length");
  return *l;
}

ExtNat depth(const FPModule& m, int cap) {
  if (m.is_zero()) return ExtNat::infinite();
  for (int i = 0; i <= cap; ++i) {
    if (bass_number(m, i) != 0) return ExtNat::finite(i);
  }
  return ExtNat::at_least(cap + 1);
}

}  // namespace cohera
