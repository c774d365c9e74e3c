#include "cohera/stability.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cohera/errors.hpp"
#include "cohera/groebner.hpp"
#include "cohera/submodule.hpp"

namespace cohera {

namespace {

std::vector<FreeVector> concat(std::vector<FreeVector> a, const std::vector<FreeVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Point sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
  return out;
}

Point pmax(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = std::max(a[j], b[j]);
  return out;
}

std::vector<FreeVector> power_times(const IdealFamily& family, const Point& n, const FreeModule& f,
                                    const std::vector<FreeVector>& gens) {
  if (gens.empty()) return {};
  return multi_power(family, n, SubmoduleBasis(f, gens)).gens();
}

std::vector<FreeVector> apply_all(const TupleOperator& op, const std::vector<FreeVector>& vs) {
  std::vector<FreeVector> out;
  for (const auto& v : vs) {
    FreeVector w = op.apply(v);
    if (!w.is_zero()) out.push_back(std::move(w));
  }
  return out;
}

bool is_zero_in(const FreeModule& f, const std::vector<FreeVector>& x, const std::vector<FreeVector>& w) {
  return is_subset(SubmoduleBasis(f, x), SubmoduleBasis(f, w));
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Families

FamilySpec FamilySpec::quotient(FPModule m, SubmoduleBasis n, IdealFamily family) {
  if (!(n.ambient() == m.ambient())) throw ContractViolation("N must be given in the ambient of M");
  if (!is_subset(n, m.top())) throw ContractViolation("N is not a submodule of M");
  if (!same_ring(*family.ring(), *m.ring())) throw ContractViolation("family and module over different rings");
  FamilySpec s;
  s.kind_ = Kind::Quotient;
  s.m_ = std::move(m);
  s.n_ = std::move(n);
  s.family_ = std::move(family);
  return s;
}

FamilySpec FamilySpec::component(MultigradedModule m) {
  FamilySpec s;
  s.kind_ = Kind::Component;
  s.graded_ = std::make_shared<const MultigradedModule>(std::move(m));
  return s;
}

std::size_t FamilySpec::rank() const { return kind_ == Kind::Quotient ? family_.size() : graded_->algebra->r; }

const RingPtr& FamilySpec::ring() const { return kind_ == Kind::Quotient ? m_.ring() : graded_->algebra->base; }

FPModule quotient_member(const FamilySpec& spec, const Point& n) {
  if (n.size() != spec.rank()) throw ContractViolation("degree vector length must match the family");
  for (int v : n) {
    if (v < 0) throw ContractViolation("family index must be a natural number");
  }
  if (spec.kind() == FamilySpec::Kind::Component) return graded_component(spec.graded(), n);
  const FPModule& m = spec.m();
  return FPModule(m.ambient(), m.gens().gens(),
                  concat(m.rels().gens(), power_times(spec.family(), n, m.ambient(), spec.n().gens())));
}

// ---------------------------------------------------------------------------------------------
// Artin–Rees

bool artin_rees_holds(const FPModule& m, const SubmoduleBasis& n, const IdealFamily& family, const Point& d,
                      const Point& at) {
  const FreeModule& f = m.ambient();
  const auto& w = m.rels().gens();
  const auto lifted = concat(m.gens().gens(), w);
  SubmoduleBasis nn(f, concat(n.gens(), w));
  auto filtered = [&](const Point& k) { return SubmoduleBasis(f, concat(power_times(family, k, f, lifted), w)); };
  SubmoduleBasis left = intersect(filtered(at), nn);
  SubmoduleBasis inner = intersect(filtered(d), nn);
  SubmoduleBasis right(f, concat(power_times(family, sub(at, d), f, inner.gens()), w));
  return same_submodule(left, right);
}

ArtinReesResult artin_rees_exponent(const FPModule& m, const SubmoduleBasis& n, const IdealFamily& family,
                                    const GridBox& validation, bool certified) {
  validation.validate();
  if (validation.rank() != family.size()) throw ContractViolation("validation box rank must match the family");
  ArtinReesResult res;
  std::string fallback;
  if (certified) {
    try {
      ArtinReesCertificate cert = certified_artin_rees(m, n, family);
      res.d = cert.d;
      res.generator_degrees = cert.generator_degrees;
      res.certified = true;
      res.mode = "certified";
    } catch (const ConfigurationError& e) {
      fallback = e.what();
    } catch (const CapExceeded& e) {
      fallback = e.what();
    }
  }
  const auto points = validation.points();
  if (res.certified) {
    for (const auto& p : points) {
      if (!point_geq(p, res.d)) continue;
      if (!artin_rees_holds(m, n, family, res.d, p)) {
        throw ValidationFailure("Artin-Rees certificate d=" + point_to_string(res.d) + " fails at n=" + point_to_string(p));
      }
      res.checked.push_back(p);
    }
    return res;
  }
  res.mode = fallback.empty() ? "empirical" : "empirical (certificate unavailable: " + fallback + ")";
  // Candidates by total size, then lexicographically; each must hold on every box point above it.
  GridBox candidates{Point(validation.rank(), 0), validation.hi, 1};
  auto cands = candidates.points();
  std::stable_sort(cands.begin(), cands.end(), [](const Point& a, const Point& b) {
    int sa = 0, sb = 0;
    for (int v : a) sa += v;
    for (int v : b) sb += v;
    return sa < sb;
  });
  for (const auto& d : cands) {
    std::vector<Point> checked;
    bool ok = true;
    for (const auto& p : points) {
      if (!point_geq(p, d)) continue;
      if (!artin_rees_holds(m, n, family, d, p)) {
        ok = false;
        break;
      }
      checked.push_back(p);
    }
    if (ok && !checked.empty()) {
      res.d = d;
      res.checked = std::move(checked);
      return res;
    }
  }
  throw ValidationFailure("no Artin-Rees exponent validates on the box");
}

// ---------------------------------------------------------------------------------------------
// Normal form

FPModule NormalForm::u_module() const { return FPModule(t.ambient(), u.gens(), phi_a1.gens()); }

FPModule NormalForm::member(const Point& n) const {
  if (!point_geq(n, d)) throw ContractViolation("normal form member requested below d");
  const FreeModule& f = t.ambient();
  Point e = sub(n, d);
  auto gens = concat(u.gens(), power_times(family, e, f, v.gens()));
  auto rels = concat(power_times(family, e, f, w.gens()), phi_a1.gens());
  return FPModule(f, std::move(gens), std::move(rels));
}

NormalForm normal_form(const CoherentFunctor& f, const FamilySpec& spec, const GridBox& validation) {
  if (spec.kind() != FamilySpec::Kind::Quotient) throw ContractViolation("normal form needs a quotient family");
  validation.validate();
  const FPModule& m = spec.m();
  const IdealFamily& fam = spec.family();
  const std::size_t r = fam.size();
  if (validation.rank() != r) throw ContractViolation("validation box rank must match the family");
  const FreeModule& g = m.ambient();
  const int gr = g.rank();
  const LiftedDiagram& dg = f.diagram();
  TupleOperator bs = tensor_operator(dg.beta.transpose(), g);
  TupleOperator gs = tensor_operator(dg.gamma.transpose(), g);
  TupleOperator as = tensor_operator(dg.alpha.transpose(), g);
  const auto all = concat(m.gens().gens(), m.rels().gens());
  const auto& w = m.rels().gens();
  const auto& nn = spec.n().gens();

  // Hom(R^{l0}, -) side.
  const auto a_all = tuple_vectors(gs.source, all, gr);
  const auto w_l1 = tuple_vectors(gs.target, w, gr);
  const auto n_l1 = tuple_vectors(gs.target, nn, gr);
  const auto a1 = preimage(gs, a_all, w_l1);
  NormalForm nf;
  nf.family = fam;
  nf.c = Point(r, 0);
  nf.d = Point(r, 0);
  auto exponent = [&](const FreeModule& amb, const std::vector<FreeVector>& image, const std::vector<FreeVector>& np,
                      const std::vector<FreeVector>& wp, std::string& mode) {
    auto x = intersect(SubmoduleBasis(amb, concat(image, wp)), SubmoduleBasis(amb, concat(np, wp)));
    if (amb.rank() == 0 || is_zero_in(amb, x.gens(), wp)) {
      mode = "trivial";
      return Point(r, 0);
    }
    FPModule host(amb, np, wp);
    ArtinReesResult ar = artin_rees_exponent(host, x, fam, validation, true);
    mode = ar.mode;
    return ar.d;
  };
  nf.c = exponent(gs.target, apply_all(gs, a_all), n_l1, w_l1, nf.c_mode);
  const auto a2 = preimage(gs, a_all, concat(w_l1, power_times(fam, nf.c, gs.target, n_l1)));

  // Hom(R^{k0}, -) side.
  const FreeModule& bk = bs.source;
  const auto b_all = tuple_vectors(bk, all, gr);
  const auto w_k0 = tuple_vectors(bk, w, gr);
  const auto n_k0 = tuple_vectors(bk, nn, gr);
  const auto w_k1 = tuple_vectors(bs.target, w, gr);
  const auto n_k1 = tuple_vectors(bs.target, nn, gr);
  const auto phi1 = concat(apply_all(as, a1), w_k0);
  const auto kpsi = preimage(bs, b_all, w_k1);
  Point d_ar = exponent(bs.target, apply_all(bs, b_all), n_k1, w_k1, nf.d_mode);
  nf.d = pmax(d_ar, nf.c);
  const auto vlift = concat(preimage(bs, b_all, concat(w_k1, power_times(fam, nf.d, bs.target, n_k1))), phi1);
  auto wlift = concat(power_times(fam, sub(nf.d, nf.c), bk, apply_all(as, a2)), power_times(fam, nf.d, bk, n_k0));
  wlift = concat(std::move(wlift), phi1);

  nf.t = FPModule(bk, b_all, phi1);
  nf.phi_a1 = SubmoduleBasis(bk, phi1);
  nf.u = SubmoduleBasis(bk, concat(kpsi, phi1));
  nf.v = SubmoduleBasis(bk, vlift);
  nf.w = SubmoduleBasis(bk, wlift);
  nf.a1 = SubmoduleBasis(gs.source, a1);
  nf.a2 = SubmoduleBasis(gs.source, a2);

  if (!is_subset(nf.w, nf.v)) throw ValidationFailure("normal form: W is not contained in V");
  if (!hilbert_equal(nf.u_module(), evaluate(f, m))) throw ValidationFailure("normal form: U is not Hilbert-equal to F(M)");
  for (const auto& p : validation.points()) {
    if (!point_geq(p, nf.d)) continue;
    if (!hilbert_equal(nf.member(p), evaluate(f, quotient_member(spec, p)))) {
      throw ValidationFailure("normal form mismatch at n=" + point_to_string(p));
    }
    nf.validated.push_back(p);
  }
  return nf;
}

// ---------------------------------------------------------------------------------------------
// Grid evaluation

std::string DimensionValue::to_string() const {
  switch (kind) {
    case Kind::MinusInfinity:
      return "-inf";
    case Kind::Infinite:
      return "inf";
    case Kind::Finite:
      break;
  }
  return std::to_string(value);
}

const PointObservation& GridTable::at(const Point& n) const {
  for (const auto& p : points) {
    if (p.n == n) return p;
  }
  throw ContractViolation("no observation at " + point_to_string(n));
}

std::map<Point, std::optional<std::int64_t>> GridTable::lengths() const {
  std::map<Point, std::optional<std::int64_t>> out;
  for (const auto& p : points) {
    if (p.error.empty()) out[p.n] = p.length;
  }
  return out;
}

namespace {

int ring_depth(const RingPtr& ring) {
  ExtNat d = depth(FPModule::free(FreeModule::unit(ring)), static_cast<int>(ring->nvars()) + 1);
  if (d.kind != ExtNat::Kind::Finite) throw StrategyExhausted("depth of the base ring not determined");
  return d.value;
}

PointObservation observe(const FunctorExpression& e, const FamilySpec& spec, const Point& n, const ObservableRequest& obs,
                         int depth_r) {
  PointObservation po;
  po.n = n;
  try {
    FPModule x = evaluate_expression(e, quotient_member(spec, n));
    po.length = x.length();
    po.hilbert = x.hilbert_series().to_string();
    if (obs.ass) {
      try {
        po.ass = associated_primes(x).primes;
      } catch (const StrategyExhausted& ex) {
        po.ass_note = std::string("strategy exhausted: ") + ex.what();
      }
    }
    if (obs.grade_ideal) po.grade = grade(*obs.grade_ideal, x);
    for (int i = 0; i <= obs.betti_max; ++i) po.betti.push_back(betti_number(x, i));
    for (int i = 0; i <= obs.bass_max; ++i) po.bass.push_back(bass_number(x, i));
    if (obs.pd) {
      if (x.is_zero()) {
        po.pd = DimensionValue{};
      } else if (betti_number(x, depth_r + 1) != 0) {
        po.pd = DimensionValue{DimensionValue::Kind::Infinite, 0};
      } else {
        int t = 0;
        for (int i = 0; i <= depth_r; ++i) {
          if (betti_number(x, i) != 0) t = i;
        }
        po.pd = DimensionValue{DimensionValue::Kind::Finite, t};
      }
    }
    if (obs.id) {
      if (x.is_zero()) {
        po.id = DimensionValue{};
      } else if (bass_number(x, depth_r + 1) != 0) {
        po.id = DimensionValue{DimensionValue::Kind::Infinite, 0};
      } else {
        po.id = DimensionValue{DimensionValue::Kind::Finite, depth_r};
      }
    }
  } catch (const CapExceeded& ex) {
    po.error = std::string("cap exceeded at n=") + point_to_string(n) + ": " + ex.what();
  } catch (const ArithmeticError& ex) {
    po.error = std::string("arithmetic error at n=") + point_to_string(n) + ": " + ex.what();
  } catch (const StrategyExhausted& ex) {
    po.error = std::string("strategy exhausted at n=") + point_to_string(n) + ": " + ex.what();
  }
  return po;
}

}  // namespace

GridTable grid_evaluate(const FunctorExpression& e, const FamilySpec& spec, const GridBox& box,
                        const ObservableRequest& obs, int jobs, const ObservationHook& hook) {
  box.validate();
  if (box.rank() != spec.rank()) throw ContractViolation("box rank must match the family");
  GridTable table;
  table.box = box;
  table.ring = spec.ring();
  const auto pts = box.points();
  table.points.resize(pts.size());
  const int depth_r = (obs.pd || obs.id) ? ring_depth(spec.ring()) : 0;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) table.points[i] = observe(e, spec, pts[i], obs, depth_r);
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(pts.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (hook) {
    for (auto& p : table.points) hook(p);
  }
  return table;
}

// ---------------------------------------------------------------------------------------------
// Stabilization

namespace {

std::optional<StabilizationVerdict> verdict_for(const GridTable& table, const std::string& name,
                                                const std::function<std::optional<std::string>(const PointObservation&)>& get) {
  const GridBox& box = table.box;
  std::vector<std::optional<std::string>> vals;
  bool any = false;
  for (const auto& p : table.points) {
    vals.push_back(p.error.empty() ? get(p) : std::nullopt);
    any = any || vals.back().has_value();
  }
  if (!any) return std::nullopt;
  auto region = [&](int t) {
    Point lo(box.rank());
    for (std::size_t j = 0; j < box.rank(); ++j) lo[j] = std::max(box.lo[j], box.hi[j] - t);
    return lo;
  };
  auto constant_on = [&](const Point& lo, std::string& value) {
    std::optional<std::string> seen;
    for (std::size_t i = 0; i < table.points.size(); ++i) {
      if (!point_geq(table.points[i].n, lo)) continue;
      if (!vals[i]) return false;
      if (seen && *seen != *vals[i]) return false;
      seen = vals[i];
    }
    value = seen.value_or("");
    return true;
  };
  StabilizationVerdict v;
  v.observable = name;
  v.witness_hi = box.hi;
  std::string value;
  if (!constant_on(region(box.shell), value)) {
    v.stable = false;
    v.value = "not yet stable on box";
    v.witness_lo = region(box.shell);
    return v;
  }
  int span = 0;
  for (std::size_t j = 0; j < box.rank(); ++j) span = std::max(span, box.hi[j] - box.lo[j]);
  int t = box.shell;
  std::string wider;
  while (t < span && constant_on(region(t + 1), wider)) ++t;
  v.stable = true;
  v.value = value;
  v.witness_lo = region(t);
  return v;
}

}  // namespace

std::vector<StabilizationVerdict> detect_stabilization(const GridTable& table) {
  std::vector<StabilizationVerdict> out;
  auto add = [&](const std::string& name, const std::function<std::optional<std::string>(const PointObservation&)>& get) {
    if (auto v = verdict_for(table, name, get)) out.push_back(*v);
  };
  add("length", [](const PointObservation& p) -> std::optional<std::string> {
    return p.length ? std::to_string(*p.length) : std::string("inf");
  });
  add("ass", [&](const PointObservation& p) -> std::optional<std::string> {
    if (!p.ass) return std::nullopt;
    return primes_to_string(*p.ass, *table.ring);
  });
  add("grade", [](const PointObservation& p) -> std::optional<std::string> {
    if (!p.grade) return std::nullopt;
    return p.grade->to_string();
  });
  std::size_t nb = 0, nm = 0;
  for (const auto& p : table.points) {
    nb = std::max(nb, p.betti.size());
    nm = std::max(nm, p.bass.size());
  }
  for (std::size_t i = 0; i < nb; ++i) {
    add("betti_" + std::to_string(i), [i](const PointObservation& p) -> std::optional<std::string> {
      if (i >= p.betti.size()) return std::nullopt;
      return std::to_string(p.betti[i]);
    });
  }
  for (std::size_t i = 0; i < nm; ++i) {
    add("bass_" + std::to_string(i), [i](const PointObservation& p) -> std::optional<std::string> {
      if (i >= p.bass.size()) return std::nullopt;
      return std::to_string(p.bass[i]);
    });
  }
  add("pd", [](const PointObservation& p) -> std::optional<std::string> {
    if (!p.pd) return std::nullopt;
    return p.pd->to_string();
  });
  add("id", [](const PointObservation& p) -> std::optional<std::string> {
    if (!p.id) return std::nullopt;
    return p.id->to_string();
  });
  return out;
}

// ---------------------------------------------------------------------------------------------
// Degree bounds and asymptotics

namespace {

KrullDim minus(const KrullDim& a, int r) {
  if (!a) return std::nullopt;
  return *a - r;
}

bool dim_less(const KrullDim& a, const KrullDim& b) {
  if (!a) return b.has_value();
  return b && *a < *b;
}

}  // namespace

std::string DegreeBoundVerdict::to_string() const {
  std::string s = "deg P = " + (degree ? std::to_string(*degree) : std::string("-inf"));
  s += ", dim F(M) = " + dim_to_string(dim_f) + ", spread = " + dim_to_string(spread) + ", r = " + std::to_string(r);
  s += ", bound = " + dim_to_string(bound);
  if (equality_required) s += " (equality required)";
  s += holds ? ": holds" : ": VIOLATED";
  return s;
}

DegreeBoundVerdict degree_bound_check(const FunctorExpression& e, const FPModule& m, const IdealFamily& family,
                                      const FittedPolynomial& p) {
  DegreeBoundVerdict v;
  v.r = static_cast<int>(family.size());
  v.dim_f = evaluate_expression(e, m).krull_dim();
  v.spread = analytic_spread(m, family);
  v.degree = p.total_degree();
  KrullDim other = minus(v.spread, v.r);
  v.bound = dim_max(v.dim_f, other);
  KrullDim deg = v.degree ? KrullDim(*v.degree) : std::nullopt;
  bool within = !dim_less(v.bound, deg);
  v.equality_required = dim_less(other, v.dim_f);
  v.holds = within && (!v.equality_required || deg == v.dim_f);
  return v;
}

int default_degree_cap(const FunctorExpression& e, const FamilySpec& spec, const GridBox& box) {
  if (spec.kind() == FamilySpec::Kind::Quotient) {
    KrullDim dim_f = evaluate_expression(e, spec.m()).krull_dim();
    KrullDim spread = analytic_spread(spec.m(), spec.family());
    KrullDim b = dim_max(dim_f, minus(spread, static_cast<int>(spec.rank())));
    return std::max(b.value_or(0), 0) + 1;
  }
  int span = box.hi[0] - box.lo[0];
  for (std::size_t j = 1; j < box.rank(); ++j) span = std::min(span, box.hi[j] - box.lo[j]);
  return std::max(0, std::min(static_cast<int>(spec.graded().algebra->ring->nvars()), span - 1));
}

GradeAsymptotics grade_asymptotics(const SubmoduleBasis& j, const FunctorExpression& e, const FamilySpec& spec,
                                   const GridBox& box, int jobs) {
  ObservableRequest obs;
  obs.grade_ideal = j;
  GradeAsymptotics out;
  out.table = grid_evaluate(e, spec, box, obs, jobs);
  for (const auto& v : detect_stabilization(out.table)) {
    if (v.observable == "grade") out.verdict = v;
  }
  if (out.verdict.observable.empty()) {
    out.verdict.observable = "grade";
    out.verdict.value = "no grade observations";
  }
  return out;
}

BettiBassAsymptotics betti_bass_asymptotics(const FunctorExpression& e, const FamilySpec& spec, const GridBox& box,
                                            int i_max, int jobs) {
  BettiBassAsymptotics out;
  out.depth_r = ring_depth(spec.ring());
  if (i_max < out.depth_r + 1) throw ContractViolation("i_max must be at least depth(R) + 1");
  ObservableRequest obs;
  obs.betti_max = i_max;
  obs.bass_max = i_max;
  obs.pd = true;
  obs.id = true;
  out.table = grid_evaluate(e, spec, box, obs, jobs);
  int cap;
  if (spec.kind() == FamilySpec::Kind::Quotient) {
    KrullDim spread = analytic_spread(spec.m(), spec.family());
    out.degree_bound = std::max(0, minus(spread, static_cast<int>(spec.rank())).value_or(0));
    cap = *out.degree_bound + 1;
  } else {
    cap = default_degree_cap(e, spec, box);
  }
  auto series = [&](bool betti, int i) {
    std::map<Point, std::optional<std::int64_t>> t;
    for (const auto& p : out.table.points) {
      if (!p.error.empty()) continue;
      const auto& v = betti ? p.betti : p.bass;
      t[p.n] = v[static_cast<std::size_t>(i)];
    }
    return t;
  };
  for (int i = 0; i <= i_max; ++i) {
    out.betti_fits.push_back(fit_polynomial(series(true, i), box, cap));
    out.bass_fits.push_back(fit_polynomial(series(false, i), box, cap));
  }
  if (out.degree_bound) {
    for (const auto* fits : {&out.betti_fits, &out.bass_fits}) {
      for (const auto& f : *fits) {
        if (!f.ok) continue;
        auto deg = f.polynomial.total_degree();
        if (deg && *deg > *out.degree_bound) out.bound_respected = false;
      }
    }
  }
  for (const auto& v : detect_stabilization(out.table)) {
    if (v.observable == "pd" || v.observable == "id") out.verdicts.push_back(v);
  }
  return out;
}

ComponentTrack component_track(const MultigradedModule& m, const FunctorExpression& e, const GridBox& box,
                               const ObservableRequest& obs, int jobs) {
  FamilySpec spec = FamilySpec::component(m);
  ComponentTrack out;
  out.table = grid_evaluate(e, spec, box, obs, jobs);
  out.verdicts = detect_stabilization(out.table);
  try {
    out.fit = fit_polynomial(out.table.lengths(), box, default_degree_cap(e, spec, box));
  } catch (const ContractViolation& ex) {
    out.fit.ok = false;
    out.fit.reason = ex.what();
  }
  return out;
}

const std::vector<ObservableSignature>& observable_builtins() {
  static const std::vector<ObservableSignature> list = {
      {"length", {}, "lambda_R of the value (inf when not of finite length)"},
      {"ass", {}, "associated primes"},
      {"grade", {"ideal J"}, "grade(J, value) via Ext^i(R/J, value)"},
      {"betti", {"i"}, "beta_i = lambda Tor_i(k, value)"},
      {"bass", {"i"}, "mu^i = lambda Ext^i(k, value)"},
      {"pd", {}, "projective dimension via beta_{depth R + 1}"},
      {"id", {}, "injective dimension via mu^{depth R + 1}"},
  };
  return list;
}

}  // namespace cohera
