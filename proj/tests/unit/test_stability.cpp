#include <doctest.h>

#include "cohera/errors.hpp"
#include "cohera/stability.hpp"
#include "cohera/submodule.hpp"
#include "helpers.hpp"

using namespace cohera;
using namespace testing_helpers;

namespace {

FPModule unit_module(const RingPtr& r) { return FPModule::free(FreeModule::unit(r)); }

FamilySpec powers_of(const RingPtr& r, const std::vector<std::vector<std::string>>& ideals) {
  std::vector<SubmoduleBasis> v;
  for (const auto& g : ideals) v.push_back(ideal(r, g));
  auto m = unit_module(r);
  return FamilySpec::quotient(m, m.gens(), IdealFamily(std::move(v)));
}

FunctorExpression leaf(CoherentFunctor f) { return FunctorExpression::leaf(std::move(f)); }

std::vector<std::int64_t> lengths(const GridTable& t) {
  std::vector<std::int64_t> out;
  for (const auto& p : t.points) out.push_back(p.length.value_or(-1));
  return out;
}

// Monomials x^a y^b outside the monomial ideal generated by `gens` (exponent pairs).
std::int64_t staircase(const std::vector<std::pair<int, int>>& gens, int bound) {
  std::int64_t count = 0;
  for (int a = 0; a <= bound; ++a) {
    for (int b = 0; b <= bound; ++b) {
      bool inside = false;
      for (auto [ga, gb] : gens) inside = inside || (a >= ga && b >= gb);
      if (!inside) ++count;
    }
  }
  return count;
}

std::vector<std::pair<int, int>> monomial_product(const std::vector<std::vector<std::pair<int, int>>>& factors) {
  std::vector<std::pair<int, int>> acc{{0, 0}};
  for (const auto& f : factors) {
    std::vector<std::pair<int, int>> next;
    for (auto [a, b] : acc) {
      for (auto [c, d] : f) next.emplace_back(a + c, b + d);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("grid boxes") {
  GridBox b{{1, 0}, {2, 1}, 1};
  CHECK(b.points() == std::vector<Point>{{1, 0}, {1, 1}, {2, 0}, {2, 1}});
  CHECK_THROWS_AS((GridBox{{3}, {2}, 1}).validate(), ContractViolation);
  CHECK_THROWS_AS((GridBox{{1}, {2}, 0}).validate(), ContractViolation);
}

TEST_CASE("polynomial fitting") {
  std::map<Point, std::optional<std::int64_t>> t;
  for (int n = 1; n <= 10; ++n) t[{n}] = n * (n + 1) / 2;
  FitResult f = fit_polynomial(t, GridBox{{1}, {10}, 1}, 3);
  REQUIRE(f.ok);
  CHECK(f.polynomial.to_string() == "1/2*n^2 + 1/2*n");
  CHECK(f.polynomial.total_degree() == 2);
  CHECK(f.polynomial.onset == Point{1});
  for (const auto& [n, res] : f.polynomial.residuals) CHECK(res == 0);

  std::map<Point, std::optional<std::int64_t>> c;
  for (int n = 0; n <= 6; ++n) c[{n}] = 4;
  FitResult fc = fit_polynomial(c, GridBox{{0}, {6}, 1}, 2);
  REQUIRE(fc.ok);
  CHECK(fc.polynomial.total_degree() == 0);
  CHECK(fc.polynomial.to_string() == "4");

  // Eventually polynomial: the onset moves up past the irregular start.
  std::map<Point, std::optional<std::int64_t>> e;
  for (int n = 0; n <= 9; ++n) e[{n}] = n < 3 ? 7 : 2 * n;
  FitResult fe = fit_polynomial(e, GridBox{{0}, {9}, 1}, 2);
  REQUIRE(fe.ok);
  CHECK(fe.polynomial.onset == Point{3});
  CHECK(fe.polynomial.total_degree() == 1);

  // 2^n is not polynomial on the held-out shell.
  std::map<Point, std::optional<std::int64_t>> x;
  for (int n = 0; n <= 8; ++n) x[{n}] = std::int64_t{1} << n;
  CHECK(!fit_polynomial(x, GridBox{{0}, {8}, 1}, 3).ok);

  std::map<Point, std::optional<std::int64_t>> inf = t;
  inf[{8}] = std::nullopt;
  CHECK_THROWS_AS(fit_polynomial(inf, GridBox{{1}, {10}, 1}, 3), ContractViolation);
}

TEST_CASE("quotient members") {
  auto r = ring_xy();
  auto m = powers_of(r, {{"x", "y"}});
  CHECK(quotient_member(m, {2}).length() == 3);
  CHECK(quotient_member(m, {0}).is_zero());
  auto two = powers_of(r, {{"x"}, {"y"}});
  CHECK(hilbert_equal(quotient_member(two, {1, 1}), FPModule::quotient_ring(ideal(r, {"x*y"}))));
  CHECK_THROWS_AS(FamilySpec::quotient(FPModule::submodule(ideal(r, {"x"})), ideal(r, {"y"}),
                                       IdealFamily({ideal(r, {"x"})})),
                  ContractViolation);
  auto sub = FamilySpec::quotient(unit_module(r), ideal(r, {"x"}), IdealFamily({ideal(r, {"y"})}));
  CHECK(hilbert_equal(quotient_member(sub, {2}), FPModule::quotient_ring(ideal(r, {"x*y^2"}))));
}

TEST_CASE("Artin-Rees exponents") {
  auto r = ring_xy();
  auto unit = unit_module(r);
  auto mx = IdealFamily({ideal(r, {"x", "y"})});
  GridBox box{{0}, {9}, 1};
  auto c1 = artin_rees_exponent(unit, ideal(r, {"x"}), mx, box);
  CHECK(c1.certified);
  CHECK(c1.d == Point{1});
  CHECK(c1.checked.size() == 9);
  auto e1 = artin_rees_exponent(unit, ideal(r, {"x"}), mx, box, false);
  CHECK(e1.d == Point{1});
  auto c0 = artin_rees_exponent(unit, ideal(r, {"y^2"}), IdealFamily({ideal(r, {"x"})}), box);
  CHECK(c0.d == Point{0});
  auto whole = artin_rees_exponent(unit, unit.gens(), mx, box);
  CHECK(whole.d == Point{0});
  auto two = IdealFamily({ideal(r, {"x"}), ideal(r, {"x", "y"})});
  auto c2 = artin_rees_exponent(unit, ideal(r, {"y^2"}), two, GridBox{{0, 0}, {3, 3}, 1});
  for (const auto& p : GridBox{{0, 0}, {3, 3}, 1}.points()) {
    if (point_geq(p, c2.d)) CHECK(artin_rees_holds(unit, ideal(r, {"y^2"}), two, c2.d, p));
  }
}

TEST_CASE("normal forms reproduce the family") {
  auto r = ring_xy();
  auto fam = powers_of(r, {{"x", "y"}});
  auto rx = FPModule::quotient_ring(ideal(r, {"x"}));
  GridBox box{{0}, {8}, 1};
  auto id = normal_form(identity_functor(r), fam, box);
  for (int n = 1; n <= 4; ++n) {
    if (point_geq({n}, id.d)) CHECK(id.member({n}).length() == std::int64_t{n * (n + 1) / 2});
  }
  for (const auto& f : {functor_from_hom(rx), functor_from_tensor(rx), functor_from_ext(rx, 1)}) {
    NormalForm nf = normal_form(f, fam, box);
    CHECK(hilbert_equal(nf.u_module(), evaluate(f, unit_module(r))));
    CHECK(is_subset(nf.w, nf.v));
    for (int n = nf.d[0]; n <= nf.d[0] + 6; ++n) {
      FPModule direct = evaluate(f, quotient_member(fam, {n}));
      CHECK(hilbert_equal(nf.member({n}), direct));
      if (n >= 1) CHECK(nf.member({n}).length() == n);
    }
  }
}

TEST_CASE("grid evaluation and stabilization") {
  auto r = ring_xy();
  auto id = leaf(identity_functor(r));
  auto fam = powers_of(r, {{"x", "y"}});
  ObservableRequest obs;
  auto t = grid_evaluate(id, fam, GridBox{{1}, {4}, 1}, obs);
  CHECK(lengths(t) == std::vector<std::int64_t>{1, 3, 6, 10});
  auto t2 = grid_evaluate(id, fam, GridBox{{1}, {4}, 1}, obs, 3);
  CHECK(lengths(t2) == lengths(t));

  ObservableRequest ass;
  ass.ass = true;
  auto bro = grid_evaluate(id, powers_of(r, {{"x^2", "x*y"}}), GridBox{{1}, {6}, 1}, ass, 2);
  for (const auto& p : bro.points) {
    REQUIRE(p.ass);
    CHECK(primes_to_string(*p.ass, *r) == "{(x), (x,y)}");
  }
  bool found = false;
  for (const auto& v : detect_stabilization(bro)) {
    if (v.observable != "ass") continue;
    found = true;
    CHECK(v.stable);
    CHECK(v.witness_lo == Point{1});
  }
  CHECK(found);

  auto zero = FamilySpec::quotient(unit_module(r), unit_module(r).gens(), IdealFamily({ideal(r, {"x", "y", "1"})}));
  auto tz = grid_evaluate(id, zero, GridBox{{1}, {3}, 1}, ass);
  for (const auto& p : tz.points) {
    CHECK(p.length == 0);
    CHECK(p.ass->empty());
  }
}

TEST_CASE("stabilization verdicts") {
  GridTable t;
  t.box = GridBox{{1}, {5}, 1};
  for (int n = 1; n <= 5; ++n) {
    PointObservation p;
    p.n = {n};
    p.length = n < 3 ? n : 9;
    t.points.push_back(p);
  }
  auto v = detect_stabilization(t);
  REQUIRE(v.size() == 1);
  CHECK(v[0].stable);
  CHECK(v[0].value == "9");
  CHECK(v[0].witness_lo == Point{3});
  t.points.back().length = 10;
  CHECK(!detect_stabilization(t)[0].stable);
}

TEST_CASE("grade asymptotics") {
  auto r = ring_xy();
  auto id = leaf(identity_functor(r));
  GridBox box{{1}, {6}, 1};
  auto g1 = grade_asymptotics(ideal(r, {"y"}), id, powers_of(r, {{"x"}}), box);
  CHECK(g1.verdict.stable);
  CHECK(g1.verdict.value == "1");
  auto g0 = grade_asymptotics(ideal(r, {"x", "y"}), id, powers_of(r, {{"x", "y"}}), box);
  CHECK(g0.verdict.value == "0");
  auto ginf = grade_asymptotics(ideal(r, {"1"}), id, powers_of(r, {{"x", "y"}}), box);
  CHECK(ginf.verdict.value == "inf");
  auto hx = leaf(functor_from_hom(FPModule::quotient_ring(ideal(r, {"x"}))));
  auto gh = grade_asymptotics(ideal(r, {"x", "y"}), hx, powers_of(r, {{"x", "y"}}), box);
  CHECK(gh.verdict.stable);
  CHECK(gh.verdict.value == "0");
}

TEST_CASE("degree bounds") {
  auto r = ring_xy();
  auto fam = powers_of(r, {{"x", "y"}});
  GridBox box{{1}, {9}, 1};
  auto rx = FPModule::quotient_ring(ideal(r, {"x"}));
  struct Case {
    FunctorExpression e;
    int degree;
    bool equality;
  };
  std::vector<Case> cases = {{leaf(identity_functor(r)), 2, true},
                             {leaf(functor_from_hom(rx)), 1, false},
                             {leaf(functor_from_tensor(rx)), 1, false},
                             {leaf(functor_from_tensor(residue_field(r))), 0, false}};
  for (const auto& c : cases) {
    auto t = grid_evaluate(c.e, fam, box, ObservableRequest{});
    FitResult f = fit_polynomial(t.lengths(), box, default_degree_cap(c.e, fam, box));
    REQUIRE(f.ok);
    CHECK(f.polynomial.total_degree() == c.degree);
    auto v = degree_bound_check(c.e, fam.m(), fam.family(), f.polynomial);
    CHECK(v.holds);
    CHECK(v.spread == 2);
    CHECK(v.equality_required == c.equality);
  }
}

TEST_CASE("two-ideal fit") {
  auto r = ring_xy();
  auto fam = powers_of(r, {{"x", "y^2"}, {"x^2", "y"}});
  GridBox box{{1, 1}, {6, 6}, 1};
  auto id = leaf(identity_functor(r));
  auto t = grid_evaluate(id, fam, box, ObservableRequest{}, 4);
  for (const auto& p : t.points) {
    auto gens = monomial_product({std::vector<std::vector<std::pair<int, int>>>(p.n[0], {{1, 0}, {0, 2}})});
    auto g2 = monomial_product(std::vector<std::vector<std::pair<int, int>>>(p.n[1], {{2, 0}, {0, 1}}));
    std::vector<std::pair<int, int>> prod;
    for (auto [a, b] : gens) {
      for (auto [c, d] : g2) prod.emplace_back(a + c, b + d);
    }
    CHECK(p.length == staircase(prod, 40));
  }
  CHECK(t.at({1, 1}).length == 5);
  FitResult f = fit_polynomial(t.lengths(), box, default_degree_cap(id, fam, box));
  REQUIRE(f.ok);
  CHECK(f.polynomial.total_degree() == 2);
}

TEST_CASE("Betti and Bass asymptotics") {
  auto r = ring_xy();
  auto id = leaf(identity_functor(r));
  auto res = betti_bass_asymptotics(id, powers_of(r, {{"x", "y"}}), GridBox{{1}, {8}, 1}, 3, 2);
  CHECK(res.depth_r == 2);
  CHECK(res.degree_bound == 1);
  CHECK(res.bound_respected);
  REQUIRE(res.betti_fits[1].ok);
  CHECK(res.betti_fits[0].polynomial.to_string() == "1");
  CHECK(res.betti_fits[1].polynomial.to_string() == "n + 1");
  CHECK(res.betti_fits[2].polynomial.to_string() == "n");
  CHECK(res.betti_fits[3].polynomial.to_string() == "0");
  for (const auto& p : res.table.points) {
    CHECK(p.bass[2] != 0);
    CHECK(p.bass[3] == 0);
  }
  for (const auto& v : res.verdicts) {
    CHECK(v.stable);
    CHECK(v.value == "2");
  }
  CHECK(res.verdicts.size() == 2);
  auto k = leaf(functor_from_tensor(residue_field(r)));
  auto rk = betti_bass_asymptotics(k, powers_of(r, {{"x", "y"}}), GridBox{{1}, {5}, 1}, 3);
  CHECK(rk.betti_fits[0].polynomial.to_string() == "1");
}

TEST_CASE("component track on the Rees algebra of the maximal ideal") {
  auto r = ring_xy();
  auto alg = rees_algebra(IdealFamily({ideal(r, {"x", "y"})}));
  auto m = algebra_as_module(alg);
  GridBox box{{0}, {10}, 1};
  auto fiber = component_track(m, leaf(functor_from_tensor(residue_field(r))), box, ObservableRequest{});
  for (const auto& p : fiber.table.points) CHECK(p.length == p.n[0] + 1);
  REQUIRE(fiber.fit.ok);
  CHECK(fiber.fit.polynomial.to_string() == "n + 1");
  ObservableRequest ass;
  ass.ass = true;
  auto idt = component_track(m, leaf(identity_functor(r)), GridBox{{0}, {5}, 1}, ass);
  for (const auto& p : idt.table.points) CHECK(primes_to_string(*p.ass, *r) == "{(0)}");
  auto trunc = component_track(truncation_module(alg), leaf(identity_functor(r)), GridBox{{1}, {4}, 1}, ass);
  for (const auto& p : trunc.table.points) {
    CHECK(p.length == 0);
    CHECK(p.ass->empty());
  }
}
