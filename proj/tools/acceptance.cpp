#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cohera/errors.hpp"
#include "cohera/polynomial.hpp"
#include "cohera/stability.hpp"
#include "cohera/submodule.hpp"
#include "selftest.hpp"

using namespace cohera;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects the first failed requirement and a short trail of observed values.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      first_ = what;
    }
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }
  Outcome done() {
    out_.detail = out_.pass ? notes_.str() : first_ + (notes_.tellp() > 0 ? " [" + notes_.str() + "]" : "");
    return out_;
  }

 private:
  Outcome out_;
  std::string first_;
  std::ostringstream notes_;
};

RingPtr ring_xy() { return Ring::make(Field(), {"x", "y"}); }

SubmoduleBasis ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<FreeVector> v;
  for (const auto& g : gens) v.push_back(parse_polynomial(r, g).vec());
  return SubmoduleBasis(FreeModule::unit(r), v);
}

FPModule unit_module(const RingPtr& r) { return FPModule::free(FreeModule::unit(r)); }

FamilySpec quotient_family(const FPModule& m, const std::vector<SubmoduleBasis>& ideals) {
  return FamilySpec::quotient(m, m.gens(), IdealFamily(ideals));
}

FunctorExpression leaf(const CoherentFunctor& f) { return FunctorExpression::leaf(f); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome criterion_1() {
  Verdict v;
  auto t0 = Clock::now();
  RingPtr r = ring_xy();
  GridBox box{{1}, {12}, 1};
  FamilySpec spec = quotient_family(unit_module(r), {ideal(r, {"x", "y"})});
  GridTable table = grid_evaluate(leaf(identity_functor(r)), spec, box, ObservableRequest{});
  for (const auto& p : table.points) {
    std::int64_t n = p.n[0];
    v.require(p.length == n * (n + 1) / 2, "lambda(R/m^" + std::to_string(n) + ") != n(n+1)/2");
  }
  FitResult f = fit_polynomial(table.lengths(), box, default_degree_cap(leaf(identity_functor(r)), spec, box));
  v.require(f.ok, "no fit: " + f.reason);
  if (f.ok) {
    const auto& c = f.polynomial.coefficients;
    bool exact = c.size() == 2 && c.count({2}) && c.at({2}) == Rational(1, 2) && c.count({1}) && c.at({1}) == Rational(1, 2);
    v.require(exact, "fitted " + f.polynomial.to_string() + " is not n(n+1)/2");
    v.require(f.polynomial.total_degree() == unit_module(r).krull_dim(), "total degree differs from dim R");
    for (const auto& [n, res] : f.polynomial.residuals) v.require(res == 0, "nonzero residual at " + point_to_string(n));
    v.note("P = " + f.polynomial.to_string());
  }
  double s = seconds_since(t0);
  v.require(s < 10.0, "runtime " + std::to_string(s) + " s >= 10 s");
  v.note("runtime " + std::to_string(s) + " s");
  return v.done();
}

/// Monomials outside (x,y^2)^a (x^2,y)^b, counted from the product generators.
std::int64_t staircase_count(int a, int b) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) gens.emplace_back(i + 2 * j, 2 * (a - i) + (b - j));
  std::int64_t count = 0;
  for (int ex = 0; ex <= a + 2 * b; ++ex)
    for (int ey = 0; ey <= 2 * a + b; ++ey) {
      bool inside = false;
      for (const auto& [gx, gy] : gens) inside = inside || (gx <= ex && gy <= ey);
      if (!inside) ++count;
    }
  return count;
}

Outcome criterion_2() {
  Verdict v;
  RingPtr r = ring_xy();
  GridBox box{{1, 1}, {6, 6}, 1};
  FamilySpec spec = quotient_family(unit_module(r), {ideal(r, {"x", "y^2"}), ideal(r, {"x^2", "y"})});
  GridTable table = grid_evaluate(leaf(identity_functor(r)), spec, box, ObservableRequest{});
  for (const auto& p : table.points)
    v.require(p.length == staircase_count(p.n[0], p.n[1]), "lambda differs from staircase count at " + point_to_string(p.n));
  v.require(table.at({1, 1}).length == 5, "lambda(1,1) != 5");
  FitResult f = fit_polynomial(table.lengths(), box, default_degree_cap(leaf(identity_functor(r)), spec, box));
  v.require(f.ok, "no fit: " + f.reason);
  if (f.ok) {
    v.require(f.polynomial.total_degree() == 2, "total degree is not 2");
    v.require(f.polynomial.evaluate({1, 1}) == 5, "P(1,1) != 5");
    int shell_points = 0;
    for (const auto& [n, res] : f.polynomial.residuals) {
      v.require(res == 0, "nonzero residual at " + point_to_string(n));
      if (n[0] == 6 || n[1] == 6) ++shell_points;
    }
    v.require(shell_points == 11, "held-out shell n1 = 6 or n2 = 6 not fully validated");
    for (const auto& n : box.points())
      if (n[0] == 6 || n[1] == 6)
        v.require(!(point_geq(n, f.polynomial.fit_lo) && point_geq(f.polynomial.fit_hi, n)),
                  "shell point " + point_to_string(n) + " used for fitting");
    v.note("P = " + f.polynomial.to_string() + ", onset " + point_to_string(f.polynomial.onset));
  }
  return v.done();
}

Outcome criterion_3() {
  Verdict v;
  RingPtr r = ring_xy();
  FPModule rx = FPModule::quotient_ring(ideal(r, {"x"}));
  SubmoduleBasis m = ideal(r, {"x", "y"});
  FamilySpec spec = quotient_family(unit_module(r), {m});
  std::vector<CoherentFunctor> functors = {functor_from_hom(rx), functor_from_tensor(rx), functor_from_ext(rx, 1)};
  const char* names[] = {"h_R/(x)", "R/(x) (x) -", "Ext^1(R/(x), -)"};
  for (std::size_t k = 0; k < functors.size(); ++k) {
    const CoherentFunctor& f = functors[k];
    NormalForm nf = normal_form(f, spec, GridBox{{0}, {12}, 1});
    v.require(hilbert_equal(nf.u_module(), evaluate(f, unit_module(r))), std::string(names[k]) + ": Hilbert(U) != Hilbert(F(R))");
    for (int n = nf.d[0]; n <= nf.d[0] + 6; ++n) {
      FPModule direct = evaluate(f, FPModule::quotient_ring(ideal_power(m, n)));
      FPModule member = nf.member({n});
      v.require(hilbert_equal(member, direct), std::string(names[k]) + ": Hilbert function differs at n=" + std::to_string(n));
      v.require(direct.length() == n, std::string(names[k]) + ": lambda != n at n=" + std::to_string(n));
      v.require(member.length() == n, std::string(names[k]) + ": normal-form lambda != n at n=" + std::to_string(n));
    }
    v.note(std::string(names[k]) + " d=" + point_to_string(nf.d));
  }
  return v.done();
}

Outcome criterion_4() {
  Verdict v;
  RingPtr r = ring_xy();
  SubmoduleBasis m = ideal(r, {"x", "y"});
  FPModule rx = FPModule::quotient_ring(ideal(r, {"x"}));
  FamilySpec spec = quotient_family(unit_module(r), {m});
  GridBox box{{1}, {10}, 1};
  KrullDim spread = analytic_spread(unit_module(r), IdealFamily({m}));
  v.require(spread == 2, "l_R((x,y)) = " + dim_to_string(spread) + ", expected 2");
  struct Entry {
    std::string name;
    CoherentFunctor f;
  };
  std::vector<Entry> corpus = {{"identity", identity_functor(r)},
                               {"h_R/(x)", functor_from_hom(rx)},
                               {"R/(x) (x) -", functor_from_tensor(rx)},
                               {"k (x) -", functor_from_tensor(residue_field(r))}};
  for (const auto& e : corpus) {
    FunctorExpression ex = leaf(e.f);
    GridTable t = grid_evaluate(ex, spec, box, ObservableRequest{});
    FitResult f = fit_polynomial(t.lengths(), box, default_degree_cap(ex, spec, box));
    v.require(f.ok, e.name + ": no fit: " + f.reason);
    if (!f.ok) continue;
    DegreeBoundVerdict d = degree_bound_check(ex, unit_module(r), IdealFamily({m}), f.polynomial);
    v.require(d.holds, e.name + ": " + d.to_string());
    auto deg = f.polynomial.total_degree();
    auto bound = dim_max(d.dim_f, KrullDim(*spread - 1));
    v.require(!deg || (bound && *deg <= *bound), e.name + ": deg P exceeds max{dim F(M), l - 1}");
    if (e.name == "identity") {
      v.require(d.dim_f == 2, "identity: dim F(M) != 2");
      v.require(deg == 2 && d.equality_required, "identity: equality deg P = dim F(M) = 2 not met");
    }
    v.note(e.name + " deg " + (deg ? std::to_string(*deg) : std::string("-inf")));
  }
  return v.done();
}

Outcome criterion_5() {
  Verdict v;
  RingPtr r = ring_xy();
  GridBox box{{1}, {8}, 1};
  FamilySpec spec = quotient_family(unit_module(r), {ideal(r, {"x^2", "x*y"})});
  ObservableRequest obs;
  obs.ass = true;
  GridTable t = grid_evaluate(leaf(identity_functor(r)), spec, box, obs);
  std::vector<PrimeIdeal> want = {PrimeIdeal{{0}}, PrimeIdeal{{0, 1}}};
  for (const auto& p : t.points) {
    v.require(p.error.empty(), "error at n=" + point_to_string(p.n) + ": " + p.error);
    v.require(p.ass && *p.ass == want, "Ass differs from {(x), (x,y)} at n=" + point_to_string(p.n));
  }
  bool found = false;
  for (const auto& s : detect_stabilization(t)) {
    if (s.observable != "ass") continue;
    found = true;
    v.require(s.stable && s.value == "{(x), (x,y)}", "verdict not stable at {(x), (x,y)}");
    v.require(!s.witness_lo.empty() && point_geq(box.hi, s.witness_lo), "no witness shell");
    v.note("stable " + s.value + " on " + point_to_string(s.witness_lo) + ".." + point_to_string(s.witness_hi));
  }
  v.require(found, "no Ass verdict");
  return v.done();
}

Outcome criterion_6() {
  Verdict v;
  RingPtr r = ring_xy();
  GridBox box{{1}, {8}, 1};
  struct Case {
    SubmoduleBasis family;
    SubmoduleBasis j;
    int want;
  };
  std::vector<Case> cases = {{ideal(r, {"x"}), ideal(r, {"y"}), 1}, {ideal(r, {"x", "y"}), ideal(r, {"x", "y"}), 0}};
  for (const auto& c : cases) {
    FamilySpec spec = quotient_family(unit_module(r), {c.family});
    GradeAsymptotics g = grade_asymptotics(c.j, leaf(identity_functor(r)), spec, box);
    for (const auto& p : g.table.points) {
      v.require(p.grade && *p.grade == ExtNat::finite(c.want), "grade != " + std::to_string(c.want) + " at n=" + point_to_string(p.n));
      ExtNat oracle = regular_sequence_grade(c.j, quotient_member(spec, p.n));
      v.require(p.grade && oracle == *p.grade, "Ext route " + (p.grade ? p.grade->to_string() : "?") +
                                                   " != regular-sequence " + oracle.to_string() + " at n=" + point_to_string(p.n));
    }
    v.require(g.verdict.stable && g.verdict.value == std::to_string(c.want), "grade verdict not stable at " + std::to_string(c.want));
    v.note("grade stable at " + g.verdict.value);
  }
  return v.done();
}

Outcome criterion_7() {
  Verdict v;
  RingPtr r = ring_xy();
  FPModule rm = unit_module(r);
  struct Case {
    SubmoduleBasis n;
    SubmoduleBasis i;
    int want;
  };
  std::vector<Case> cases = {{ideal(r, {"x"}), ideal(r, {"x", "y"}), 1}, {ideal(r, {"y^2"}), ideal(r, {"x"}), 0}};
  for (const auto& c : cases) {
    ArtinReesResult a = artin_rees_exponent(rm, c.n, IdealFamily({c.i}), GridBox{{0}, {10}, 1});
    v.require(a.certified, "N=" + c.n.canonical() + ": not certified (" + a.mode + ")");
    v.require(a.d == Point{c.want}, "N=" + c.n.canonical() + ": d = " + point_to_string(a.d));
    int d = a.d[0];
    SubmoduleBasis base = intersect(ideal_power(c.i, d), c.n);
    for (int n = d; n <= d + 8; ++n) {
      SubmoduleBasis lhs = intersect(ideal_power(c.i, n), c.n);
      SubmoduleBasis rhs = product(ideal_power(c.i, n - d), base);
      v.require(same_submodule(lhs, rhs), "I^n M ∩ N != I^(n-d)(I^d M ∩ N) at n=" + std::to_string(n));
    }
    v.note("d=" + point_to_string(a.d) + " (" + a.mode + ")");
  }
  return v.done();
}

Outcome criterion_8() {
  Verdict v;
  RingPtr r = ring_xy();
  GridBox box{{1}, {8}, 1};
  SubmoduleBasis m = ideal(r, {"x", "y"});
  FamilySpec spec = quotient_family(unit_module(r), {m});
  BettiBassAsymptotics b = betti_bass_asymptotics(leaf(identity_functor(r)), spec, box, 3);
  const char* want[] = {"1", "n + 1", "n"};
  for (int i = 0; i < 3; ++i) {
    const FitResult& f = b.betti_fits[static_cast<std::size_t>(i)];
    v.require(f.ok && f.polynomial.to_string() == want[i], "beta_" + std::to_string(i) + " fit " +
                                                               (f.ok ? f.polynomial.to_string() : f.reason));
  }
  KrullDim spread = analytic_spread(unit_module(r), IdealFamily({m}));
  int bound = std::max(0, (spread ? *spread : 0) - 1);
  v.require(b.degree_bound == bound && bound == 1, "degree bound max{0, l - r} != 1");
  v.require(b.betti_fits[1].ok && b.betti_fits[1].polynomial.total_degree() == 1, "beta_1 fit degree != 1");
  v.require(b.bound_respected, "beta fit degree exceeds max{0, l - r}");
  for (const auto& p : b.table.points) {
    FPModule g = quotient_member(spec, p.n);
    for (int i = 0; i <= 3; ++i)
      v.require(p.betti[static_cast<std::size_t>(i)] == betti_number_via_tor(g, i),
                "beta_" + std::to_string(i) + " differs from lambda Tor_i(k, -) at n=" + point_to_string(p.n));
    v.require(p.bass.size() > 3 && p.bass[2] != 0 && p.bass[3] == 0, "mu^2 != 0, mu^3 = 0 fails at n=" + point_to_string(p.n));
  }
  for (const char* obs : {"pd", "id"}) {
    auto it = std::find_if(b.verdicts.begin(), b.verdicts.end(), [&](const auto& s) { return s.observable == obs; });
    v.require(it != b.verdicts.end() && it->stable && it->value == "2", std::string(obs) + " not stable at 2");
  }
  v.note("beta = (1, n + 1, n), pd = id = 2");
  return v.done();
}

Outcome criterion_9() {
  Verdict v;
  RingPtr r = ring_xy();
  IdealFamily family({ideal(r, {"x", "y"})});
  MultigradedModule rees = algebra_as_module(rees_algebra(family));
  GridBox box{{0}, {10}, 1};
  ComponentTrack c = component_track(rees, leaf(functor_from_tensor(residue_field(r))), box, ObservableRequest{});
  for (const auto& p : c.table.points)
    v.require(p.length == p.n[0] + 1, "lambda(k (x) M_n) != n + 1 at n=" + point_to_string(p.n));
  v.require(c.fit.ok && c.fit.polynomial.total_degree() == 1, "fit degree != 1");
  ObservableRequest obs;
  obs.ass = true;
  ComponentTrack id = component_track(rees, leaf(identity_functor(r)), box, obs);
  for (const auto& p : id.table.points)
    v.require(p.ass && *p.ass == std::vector<PrimeIdeal>{PrimeIdeal{}}, "Ass(M_n) != {(0)} at n=" + point_to_string(p.n));
  auto it = std::find_if(id.verdicts.begin(), id.verdicts.end(), [](const auto& s) { return s.observable == "ass"; });
  v.require(it != id.verdicts.end() && it->stable && it->value == "{(0)}", "Ass verdict not stable at {(0)}");
  if (c.fit.ok) v.note("P = " + c.fit.polynomial.to_string());
  return v.done();
}

Outcome criterion_10() {
  Verdict v;
  auto corpus = selftest::random_route_corpus(20261014, 30);
  int disagreements = 0;
  int nonzero = 0;
  for (const auto& p : corpus) {
    FPModule a = evaluate(p.functor, p.module);
    FPModule b = evaluate_via_diagram(p.functor, p.module);
    int lo = std::min(a.hilbert_series().initial_degree(), b.hilbert_series().initial_degree());
    int hi = std::max(a.hilbert_series().support_end(), b.hilbert_series().support_end());
    bool same = a.hilbert_function(lo, hi) == b.hilbert_function(lo, hi) && hilbert_equal(a, b);
    if (!same) ++disagreements;
    if (!a.is_zero()) ++nonzero;
    v.require(same, p.description + ": Hilbert functions differ");
  }
  v.require(corpus.size() >= 25, "corpus smaller than 25");
  v.note(std::to_string(corpus.size()) + " pairs (" + std::to_string(nonzero) + " with nonzero value), " +
         std::to_string(disagreements) + " disagreements");
  return v.done();
}

Outcome criterion_11() {
  Verdict v;
  RingPtr r = ring_xy();
  IdealFamily family({ideal(r, {"x", "y"})});
  FreeModule f2(r, {0, 0});
  FPModule sum = FPModule::cokernel(f2, {f2.mul_poly(parse_polynomial(r, "x*y").vec(), f2.basis(0)),
                                         f2.mul_poly(parse_polynomial(r, "x^2").vec(), f2.basis(1))});
  std::vector<std::pair<std::string, FPModule>> corpus = {
      {"R/(x^2,xy)", FPModule::quotient_ring(ideal(r, {"x^2", "x*y"}))},
      {"R/(x)", FPModule::quotient_ring(ideal(r, {"x"}))},
      {"R", unit_module(r)},
      {"k", residue_field(r)},
      {"(x,y)", FPModule::submodule(ideal(r, {"x", "y"}))},
      {"R/(xy) + R/(x^2)", sum},
  };
  for (const auto& [name, m] : corpus) {
    KrullDim lhs = analytic_spread(m, family);
    KrullDim rhs = analytic_spread(FPModule::quotient_ring(annihilator(m)), family);
    v.require(lhs == rhs, name + ": " + dim_to_string(lhs) + " != " + dim_to_string(rhs));
    v.note(name + " " + dim_to_string(lhs));
  }
  return v.done();
}

Outcome criterion_12() {
  Verdict v;
  auto t0 = Clock::now();
  selftest::Options o;
  for (const auto& s : selftest::all_suites()) {
    selftest::SuiteResult res = s.run(o);
    v.require(res.passed, s.name + ": " + res.first_failure);
    v.note(s.name + " " + std::to_string(res.checks));
  }
  double secs = seconds_since(t0);
  v.require(secs < 120.0, "selftest took " + std::to_string(secs) + " s");
  v.note("total " + std::to_string(secs) + " s");
  return v.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hilbert-Samuel fit of R/(x,y)^n", criterion_1},
      {"two-ideal fit on [1,6]^2", criterion_2},
      {"normal form for h_R/(x), R/(x) (x) -, Ext^1(R/(x), -)", criterion_3},
      {"degree bound on the four-functor corpus", criterion_4},
      {"Ass(R/(x^2,xy)^n) stabilization", criterion_5},
      {"grade stabilization and regular-sequence oracle", criterion_6},
      {"Artin-Rees certificates", criterion_7},
      {"Betti/Bass asymptotics of R/(x,y)^n", criterion_8},
      {"component track on the Rees algebra of (x,y)", criterion_9},
      {"route equivalence on the seeded corpus", criterion_10},
      {"spread-annihilator identity", criterion_11},
      {"kernel property suites in selftest", criterion_12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << o.detail << ", " << seconds_since(t0) << " s)\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
