#include "cohera/submodule.hpp"

#include <algorithm>
#include <map>

#include "cohera/errors.hpp"

namespace cohera {

namespace {

void require_same_ambient(const SubmoduleBasis& a, const SubmoduleBasis& b, const char* op) {
  if (!(a.ambient() == b.ambient())) throw ContractViolation(std::string("ambient mismatch in ") + op);
}

}  // namespace

FreeVector apply_combination(const FreeModule& target, const std::vector<FreeVector>& columns, const FreeVector& c) {
  std::vector<Term> acc;
  for (const auto& t : c.terms) {
    const FreeVector& col = columns.at(static_cast<std::size_t>(t.comp));
    for (const auto& s : col.terms) {
      acc.push_back(Term{s.mon * t.mon, s.comp, target.field().mul(s.coeff, t.coeff)});
    }
  }
  return target.normalize(std::move(acc));
}

std::vector<std::size_t> independent_subset(const FreeModule& F, const std::vector<FreeVector>& vectors) {
  // Echelon rows with pairwise distinct leads, kept sorted by descending lead.
  std::vector<FreeVector> rows;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    FreeVector v = vectors[idx];
    for (const auto& row : rows) {
      if (v.is_zero()) break;
      const Term& lead = row.lead();
      for (const auto& t : v.terms) {
        int c = F.compare(t, lead);
        if (c < 0) break;
        if (c == 0) {
          v = F.sub_multiple(v, t.coeff, Monomial(F.ring().nvars()), row);
          break;
        }
      }
    }
    if (v.is_zero()) continue;
    v = F.make_monic(v);
    auto pos = std::find_if(rows.begin(), rows.end(), [&](const FreeVector& r) { return F.compare(r.lead(), v.lead()) < 0; });
    rows.insert(pos, std::move(v));
    chosen.push_back(idx);
  }
  return chosen;
}

SubmoduleBasis minimal_generators_modulo(const SubmoduleBasis& u, const SubmoduleBasis& w) {
  require_same_ambient(u, w, "minimal generators");
  if (!u.homogeneous() || !w.homogeneous()) throw ContractViolation("minimal generators need homogeneous input");
  const FreeModule& F = u.ambient();
  std::map<std::int64_t, std::vector<FreeVector>> by_degree;
  for (const auto& g : u.gens()) by_degree[*F.homogeneous_degree(g)].push_back(g);
  std::vector<FreeVector> kept;
  for (auto& [deg, gens] : by_degree) {
    std::vector<FreeVector> lower = w.gens();
    lower.insert(lower.end(), kept.begin(), kept.end());
    SubmoduleBasis gb = groebner_basis(SubmoduleBasis(F, std::move(lower)));
    std::vector<FreeVector> reduced;
    for (const auto& g : gens) reduced.push_back(normal_form(g, gb));
    for (std::size_t i : independent_subset(F, reduced)) kept.push_back(gens[i]);
  }
  return SubmoduleBasis(F, std::move(kept));
}

SubmoduleBasis minimal_generators(const SubmoduleBasis& u) {
  if (!u.homogeneous()) return u;
  return minimal_generators_modulo(u, SubmoduleBasis::zero(u.ambient()));
}

SubmoduleBasis sum(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  require_same_ambient(a, b, "sum");
  std::vector<FreeVector> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return SubmoduleBasis(a.ambient(), std::move(g));
}

SubmoduleBasis intersect(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  require_same_ambient(a, b, "intersect");
  const FreeModule& F = a.ambient();
  SubmoduleBasis k = syzygies_modulo(F, a.gens(), b.gens(), generator_degrees(a));
  std::vector<FreeVector> out;
  for (const auto& c : k.gens()) {
    FreeVector v = apply_combination(F, a.gens(), c);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return minimal_generators(SubmoduleBasis(F, std::move(out)));
}

SubmoduleBasis colon(const SubmoduleBasis& u, const SubmoduleBasis& v) {
  require_same_ambient(u, v, "colon");
  FreeModule unit = FreeModule::unit(u.ambient().ring_ptr());
  SubmoduleBasis acc = SubmoduleBasis::whole(unit);
  for (const auto& g : v.gens()) {
    auto d = u.ambient().homogeneous_degree(g);
    int tw = d ? static_cast<int>(*d) : 0;
    SubmoduleBasis k = syzygies_modulo(u.ambient(), {g}, u.gens(), {tw});
    std::vector<FreeVector> polys;
    for (const auto& c : k.gens()) polys.push_back(unit.normalize(c.terms));
    acc = intersect(acc, SubmoduleBasis(unit, std::move(polys)));
  }
  return acc;
}

SubmoduleBasis product(const SubmoduleBasis& ideal, const SubmoduleBasis& target) {
  if (ideal.ambient().rank() != 1 || !same_ring(ideal.ambient().ring(), target.ambient().ring())) {
    throw ContractViolation("product needs an ideal of the target's ring");
  }
  const FreeModule& F = target.ambient();
  std::vector<FreeVector> g;
  for (const auto& f : ideal.gens()) {
    for (const auto& t : target.gens()) {
      FreeVector p = F.mul_poly(f, t);
      if (!p.is_zero()) g.push_back(std::move(p));
    }
  }
  return minimal_generators(SubmoduleBasis(F, std::move(g)));
}

SubmoduleBasis ideal_power(const SubmoduleBasis& ideal, int n) {
  if (n < 0) throw ContractViolation("negative ideal power");
  SubmoduleBasis acc = SubmoduleBasis::whole(ideal.ambient());
  for (int i = 0; i < n; ++i) acc = product(ideal, acc);
  return acc;
}

IdealFamily::IdealFamily(std::vector<SubmoduleBasis> ideals) : ideals_(std::move(ideals)) {
  if (ideals_.empty()) throw ContractViolation("an ideal family needs at least one ideal");
  for (const auto& i : ideals_) {
    if (i.ambient().rank() != 1) throw ContractViolation("family members must be ideals");
    if (!same_ring(i.ambient().ring(), ideals_.front().ambient().ring())) {
      throw ContractViolation("family members must share a ring");
    }
    if (!i.homogeneous()) throw ContractViolation("family members must be homogeneous");
    unit_.push_back(contains(i, FreeModule::unit(i.ambient().ring_ptr()).basis(0)));
  }
}

SubmoduleBasis multi_power(const IdealFamily& family, const std::vector<int>& n, const SubmoduleBasis& target) {
  if (n.size() != family.size()) throw ContractViolation("exponent vector length must match the family");
  SubmoduleBasis acc = target;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] < 0) throw ContractViolation("negative exponent in multi_power");
    for (int k = 0; k < n[j]; ++k) acc = product(family[j], acc);
  }
  return acc;
}

}  // namespace cohera
