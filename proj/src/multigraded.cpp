#include "cohera/multigraded.hpp"

#include <algorithm>
#include <map>

#include "cohera/errors.hpp"
#include "cohera/groebner.hpp"
#include "cohera/submodule.hpp"

namespace cohera {

namespace {

constexpr std::size_t kComponentCap = 20000;

// Rings k[x, t, y] (grevlex and t-eliminating) and P = k[x, y] for a family.
struct Layout {
  RingPtr base;
  std::size_t nx = 0, r = 0, ny = 0;
  std::vector<FreeVector> g;  // generator polynomials in the base ring, one per y-variable
  std::vector<int> group;
  std::vector<int> internal;
  RingPtr t_ring, t_elim, p_ring;

  Monomial embed_x(const Monomial& m) const {
    std::vector<std::int32_t> e(nx + r + ny, 0);
    for (std::size_t i = 0; i < nx; ++i) e[i] = m[i];
    return Monomial(std::move(e));
  }
  FreeVector embed(const FreeModule& target, const FreeVector& v) const {
    std::vector<Term> terms;
    for (const auto& t : v.terms) terms.push_back(Term{embed_x(t.mon), t.comp, t.coeff});
    return target.normalize(std::move(terms));
  }
  // Drops the t-exponents (caller checks they vanish).
  Monomial to_p(const Monomial& m) const {
    std::vector<std::int32_t> e(nx + ny, 0);
    for (std::size_t i = 0; i < nx; ++i) e[i] = m[i];
    for (std::size_t i = 0; i < ny; ++i) e[nx + i] = m[nx + r + i];
    return Monomial(std::move(e));
  }
  bool t_free(const FreeVector& v) const {
    for (const auto& t : v.terms) {
      for (std::size_t j = 0; j < r; ++j) {
        if (t.mon[nx + j] != 0) return false;
      }
    }
    return true;
  }
};

Layout make_layout(const IdealFamily& family) {
  Layout l;
  l.base = family.ring();
  const Ring& R = *l.base;
  l.nx = R.nvars();
  l.r = family.size();
  for (std::size_t j = 0; j < l.r; ++j) {
    SubmoduleBasis mg = minimal_generators(family[j]);
    for (const auto& v : mg.gens()) {
      l.g.push_back(v);
      l.group.push_back(static_cast<int>(j));
      l.internal.push_back(static_cast<int>(R.degree(v.lead().mon)));
    }
  }
  l.ny = l.g.size();
  std::vector<std::string> vars = R.variables();
  std::vector<int> weights = R.weights();
  std::vector<std::string> pvars = vars;
  std::vector<int> pweights = weights;
  for (std::size_t j = 0; j < l.r; ++j) {
    vars.push_back("@t" + std::to_string(j + 1));
    weights.push_back(1);
  }
  std::vector<int> count(l.r, 0);
  for (std::size_t i = 0; i < l.ny; ++i) {
    std::string name = "@y" + std::to_string(l.group[i] + 1) + "_" + std::to_string(++count[l.group[i]]);
    vars.push_back(name);
    weights.push_back(l.internal[i] + 1);
    pvars.push_back(name);
    pweights.push_back(l.internal[i] + 1);
  }
  RingPtr t0 = Ring::make(R.field(), vars, weights);
  FreeModule t_unit = FreeModule::unit(t0);
  std::vector<FreeVector> base;
  for (const auto& rel : R.base_relations()) base.push_back(l.embed(t_unit, rel));
  l.t_ring = base.empty() ? t0 : t0->with_base_relations(base);
  std::vector<bool> mask(vars.size(), false);
  for (std::size_t j = 0; j < l.r; ++j) mask[l.nx + j] = true;
  l.t_elim = l.t_ring->with_order(OrderKind::Eliminate, mask);
  l.p_ring = Ring::make(R.field(), pvars, pweights);
  return l;
}

// D = { s in P^m : sum_l s_l(x, g t) u_l lies in modulo[t] }, as P-vectors.
std::vector<FreeVector> rees_kernel(const Layout& l, const FreeModule& F, const std::vector<FreeVector>& images,
                                    const std::vector<FreeVector>& modulo, const std::vector<int>& degs) {
  FreeModule FT = F.over_ring(l.t_ring).with_order(ModuleOrder::PositionOverTerm);
  std::vector<FreeVector> emb_images, emb_modulo;
  for (const auto& v : images) emb_images.push_back(l.embed(FT, v));
  for (const auto& v : modulo) emb_modulo.push_back(l.embed(FT, v));
  // (y_jk - g_jk t_j) e_c
  const std::size_t nt = l.nx + l.r + l.ny;
  for (std::size_t i = 0; i < l.ny; ++i) {
    Monomial tj = Monomial::variable(nt, l.nx + l.group[i]);
    Monomial yi = Monomial::variable(nt, l.nx + l.r + i);
    for (int c = 0; c < F.rank(); ++c) {
      std::vector<Term> terms{Term{yi, c, l.base->field().one()}};
      for (const auto& t : l.g[i].terms) {
        terms.push_back(Term{l.embed_x(t.mon) * tj, c, l.base->field().neg(t.coeff)});
      }
      emb_modulo.push_back(FT.normalize(std::move(terms)));
    }
  }
  SubmoduleBasis k = syzygies_modulo(FT, emb_images, emb_modulo, degs);
  FreeModule TE(l.t_elim, degs);
  std::vector<FreeVector> conv;
  for (const auto& v : k.gens()) conv.push_back(TE.convert(v));
  SubmoduleBasis gb = groebner_basis(SubmoduleBasis(TE, std::move(conv)));
  std::vector<int> pdegs = degs;
  FreeModule PM(l.p_ring, pdegs);
  std::vector<FreeVector> out;
  for (const auto& v : gb.gens()) {
    if (!l.t_free(v)) continue;
    std::vector<Term> terms;
    for (const auto& t : v.terms) terms.push_back(Term{l.to_p(t.mon), t.comp, t.coeff});
    out.push_back(PM.normalize(std::move(terms)));
  }
  return out;
}

AlgebraPtr algebra_from_layout(const Layout& l) {
  auto a = std::make_shared<MultigradedAlgebraPresentation>();
  a->base = l.base;
  a->ring = l.p_ring;
  a->nx = l.nx;
  a->r = l.r;
  a->y_group = l.group;
  a->y_internal = l.internal;
  FreeModule R1 = FreeModule::unit(l.base);
  a->q = rees_kernel(l, R1, {R1.basis(0)}, {}, {0});
  return a;
}

// All exponent vectors over the y-variables with group multidegree `target`.
std::vector<std::vector<std::int32_t>> y_monomials(const MultigradedAlgebraPresentation& a,
                                                   const std::vector<int>& target) {
  std::vector<std::vector<std::int32_t>> out;
  for (int v : target) {
    if (v < 0) return out;
  }
  const std::size_t ny = a.y_group.size();
  std::vector<std::int32_t> cur(ny, 0);
  std::vector<int> remaining = target;
  // Depth-first over variables; the last variable of each group absorbs the remainder.
  std::vector<int> last_in_group(a.r, -1);
  for (std::size_t i = 0; i < ny; ++i) last_in_group[a.y_group[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < a.r; ++j) {
    if (last_in_group[j] < 0 && target[j] != 0) return out;
  }
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ny) {
      out.push_back(cur);
      if (out.size() > kComponentCap) throw CapExceeded("graded component exceeds the generator cap");
      return;
    }
    int j = a.y_group[i];
    if (static_cast<int>(i) == last_in_group[j]) {
      cur[i] = remaining[j];
      int saved = remaining[j];
      remaining[j] = 0;
      self(self, i + 1);
      remaining[j] = saved;
      cur[i] = 0;
      return;
    }
    for (int e = remaining[j]; e >= 0; --e) {
      cur[i] = e;
      remaining[j] -= e;
      self(self, i + 1);
      remaining[j] += e;
    }
    cur[i] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<int> vector_multidegree(const MultigradedModule& m, const FreeVector& v) {
  const auto& a = *m.algebra;
  std::vector<int> d;
  for (const auto& t : v.terms) {
    std::vector<int> e = a.multidegree(t.mon);
    for (std::size_t j = 0; j < a.r; ++j) e[j] += m.gen_degrees[t.comp][j];
    if (d.empty()) {
      d = e;
    } else if (d != e) {
      throw ContractViolation("relation is not multihomogeneous");
    }
  }
  return d;
}

}  // namespace

std::vector<int> MultigradedAlgebraPresentation::multidegree(const Monomial& m) const {
  std::vector<int> d(r, 0);
  for (std::size_t i = 0; i < y_group.size(); ++i) d[y_group[i]] += m[nx + i];
  return d;
}

int MultigradedAlgebraPresentation::internal_degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < nx; ++i) d += static_cast<std::int64_t>(base->weights()[i]) * m[i];
  for (std::size_t i = 0; i < y_group.size(); ++i) d += static_cast<std::int64_t>(y_internal[i]) * m[nx + i];
  return static_cast<int>(d);
}

AlgebraPtr rees_algebra(const IdealFamily& family) { return algebra_from_layout(make_layout(family)); }

MultigradedModule rees_module(const FPModule& m, const IdealFamily& family) {
  if (!same_ring(*m.ring(), *family.ring())) throw ContractViolation("module and family must share a ring");
  Layout l = make_layout(family);
  MultigradedModule out;
  out.algebra = algebra_from_layout(l);
  const Presentation& p = m.presentation();
  std::vector<int> degs = p.module.ambient().twists();
  out.ambient = FreeModule(l.p_ring, degs);
  out.internal_twists = degs;
  out.gen_degrees.assign(degs.size(), std::vector<int>(l.r, 0));
  out.relations = rees_kernel(l, m.ambient(), p.generators, m.rels().gens(), degs);
  return out;
}

MultigradedModule algebra_as_module(const AlgebraPtr& algebra) {
  MultigradedModule out;
  out.algebra = algebra;
  out.ambient = FreeModule::unit(algebra->ring);
  out.internal_twists = {0};
  out.gen_degrees = {std::vector<int>(algebra->r, 0)};
  return out;
}

MultigradedModule truncation_module(const AlgebraPtr& algebra) {
  MultigradedModule out = algebra_as_module(algebra);
  const std::size_t n = algebra->ring->nvars();
  for (std::size_t i = 0; i < algebra->y_group.size(); ++i) {
    out.relations.push_back(out.ambient.monomial_vector(Monomial::variable(n, algebra->nx + i), 0,
                                                        algebra->ring->field().one()));
  }
  return out;
}

FPModule graded_component(const MultigradedModule& m, const std::vector<int>& n) {
  const auto& a = *m.algebra;
  if (n.size() != a.r) throw ContractViolation("degree vector length must match the family");
  using Key = std::pair<int, std::vector<std::int32_t>>;
  std::map<Key, int> index;
  std::vector<int> twists;
  for (int i = 0; i < m.ambient.rank(); ++i) {
    std::vector<int> rest(a.r);
    for (std::size_t j = 0; j < a.r; ++j) rest[j] = n[j] - m.gen_degrees[i][j];
    for (auto& mu : y_monomials(a, rest)) {
      std::vector<std::int32_t> e(a.nx, 0);
      e.insert(e.end(), mu.begin(), mu.end());
      int tw = m.internal_twists[i] + a.internal_degree(Monomial(e));
      index.emplace(Key{i, std::move(mu)}, static_cast<int>(twists.size()));
      twists.push_back(tw);
      if (twists.size() > kComponentCap) throw CapExceeded("graded component exceeds the generator cap");
    }
  }
  FreeModule target(a.base, twists);
  std::vector<FreeVector> rels;
  auto expand = [&](const FreeVector& rho) {
    if (rho.is_zero()) return;
    std::vector<int> b = vector_multidegree(m, rho);
    std::vector<int> rest(a.r);
    for (std::size_t j = 0; j < a.r; ++j) rest[j] = n[j] - b[j];
    for (const auto& nu : y_monomials(a, rest)) {
      std::vector<Term> terms;
      for (const auto& t : rho.terms) {
        std::vector<std::int32_t> xe(t.mon.exponents().begin(), t.mon.exponents().begin() + a.nx);
        std::vector<std::int32_t> ye(t.mon.exponents().begin() + a.nx, t.mon.exponents().end());
        for (std::size_t i = 0; i < ye.size(); ++i) ye[i] += nu[i];
        auto it = index.find(Key{t.comp, ye});
        if (it == index.end()) throw ContractViolation("relation term outside the graded strand");
        terms.push_back(Term{Monomial(std::move(xe)), it->second, t.coeff});
      }
      FreeVector v = target.normalize(std::move(terms));
      if (!v.is_zero()) rels.push_back(std::move(v));
    }
  };
  for (const auto& rho : m.relations) expand(rho);
  for (const auto& q : a.q) {
    for (int i = 0; i < m.ambient.rank(); ++i) expand(m.ambient.shift_components(q, i));
  }
  return FPModule::cokernel(target, std::move(rels));
}

KrullDim analytic_spread(const FPModule& m, const IdealFamily& family) {
  MultigradedModule rm = rees_module(m, family);
  const auto& a = *rm.algebra;
  std::vector<FreeVector> gens = rm.relations;
  const std::size_t nv = a.ring->nvars();
  for (std::size_t i = 0; i < a.nx; ++i) {
    for (int c = 0; c < rm.ambient.rank(); ++c) {
      gens.push_back(rm.ambient.monomial_vector(Monomial::variable(nv, i), c, a.ring->field().one()));
    }
  }
  return quotient_series(SubmoduleBasis(rm.ambient, std::move(gens))).krull_dim();
}

ArtinReesCertificate certified_artin_rees(const FPModule& m, const SubmoduleBasis& n, const IdealFamily& family) {
  if (!(n.ambient() == m.ambient())) throw ContractViolation("submodule must live in the module's ambient");
  if (!is_subset(n, m.top())) throw ContractViolation("submodule is not contained in the module");
  Layout l = make_layout(family);
  const Presentation& p = m.presentation();
  std::vector<int> degs = p.module.ambient().twists();
  std::vector<FreeVector> with_n = m.rels().gens();
  with_n.insert(with_n.end(), n.gens().begin(), n.gens().end());
  FreeModule PM(l.p_ring, degs);
  SubmoduleBasis d(PM, rees_kernel(l, m.ambient(), p.generators, with_n, degs));
  SubmoduleBasis k0(PM, rees_kernel(l, m.ambient(), p.generators, m.rels().gens(), degs));
  SubmoduleBasis mg = minimal_generators_modulo(d, k0);
  MultigradedModule shape;
  shape.algebra = algebra_from_layout(l);
  shape.ambient = PM;
  shape.internal_twists = degs;
  shape.gen_degrees.assign(degs.size(), std::vector<int>(l.r, 0));
  ArtinReesCertificate cert;
  cert.d.assign(l.r, 0);
  for (const auto& v : mg.gens()) {
    std::vector<int> md = vector_multidegree(shape, v);
    for (std::size_t j = 0; j < l.r; ++j) cert.d[j] = std::max(cert.d[j], md[j]);
    cert.generator_degrees.push_back(std::move(md));
  }
  return cert;
}

}  // namespace cohera
