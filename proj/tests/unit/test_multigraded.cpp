#include <doctest.h>

#include "cohera/errors.hpp"
#include "cohera/multigraded.hpp"
#include "cohera/submodule.hpp"
#include "helpers.hpp"

using namespace cohera;
using namespace testing_helpers;

namespace {

IdealFamily family(const RingPtr& r, const std::vector<std::vector<std::string>>& ideals) {
  std::vector<SubmoduleBasis> v;
  for (const auto& g : ideals) v.push_back(ideal(r, g));
  return IdealFamily(std::move(v));
}

FPModule unit_module(const RingPtr& r) { return FPModule::free(FreeModule::unit(r)); }

}  // namespace

TEST_CASE("analytic spread examples") {
  auto r = ring_xy();
  CHECK(analytic_spread(unit_module(r), family(r, {{"x", "y"}})) == 2);
  CHECK(analytic_spread(unit_module(r), family(r, {{"x"}})) == 1);
  CHECK(analytic_spread(unit_module(r), family(r, {{"x"}, {"x"}})) == 2);
  CHECK(analytic_spread(unit_module(r), family(r, {{"x^2", "x*y"}})) == 2);
  auto r3 = Ring::make(Field(), {"x", "y", "z"});
  CHECK(analytic_spread(unit_module(r3), family(r3, {{"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"}})) == 3);
}

TEST_CASE("components of the Rees algebra of the maximal ideal") {
  auto r = ring_xy();
  auto m = ideal(r, {"x", "y"});
  auto rees = algebra_as_module(rees_algebra(IdealFamily({m})));
  for (int n = 0; n <= 5; ++n) {
    FPModule c = graded_component(rees, {n});
    CHECK(hilbert_equal(c, FPModule::submodule(ideal_power(m, n))));
    CHECK(c.presentation().generators.size() == static_cast<std::size_t>(n + 1));
  }
  CHECK(hilbert_equal(graded_component(rees, {0}), unit_module(r)));
  CHECK(graded_component(rees, {-1}).is_zero());
}

TEST_CASE("multigraded components match products of powers") {
  auto r = ring_xy();
  auto fam = family(r, {{"x"}, {"x", "y"}});
  auto rees = algebra_as_module(rees_algebra(fam));
  auto unit = SubmoduleBasis::whole(FreeModule::unit(r));
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      CHECK(hilbert_equal(graded_component(rees, {a, b}), FPModule::submodule(multi_power(fam, {a, b}, unit))));
    }
  }
  auto trunc = truncation_module(rees_algebra(fam));
  CHECK(hilbert_equal(graded_component(trunc, {0, 0}), unit_module(r)));
  CHECK(graded_component(trunc, {1, 0}).is_zero());
  CHECK(graded_component(trunc, {2, 3}).is_zero());
}

TEST_CASE("Rees module components of a cyclic module") {
  auto r = ring_xy();
  auto j = ideal(r, {"x^2"});
  auto m = FPModule::quotient_ring(j);
  auto i = ideal(r, {"x", "y"});
  auto rm = rees_module(m, IdealFamily({i}));
  for (int n = 0; n <= 4; ++n) {
    auto expected = FPModule::subquotient(sum(ideal_power(i, n), j), j);
    CHECK(hilbert_equal(graded_component(rm, {n}), expected));
  }
}

TEST_CASE("spread agrees with the spread over the annihilator quotient") {
  auto r = ring_xy();
  auto i = IdealFamily({ideal(r, {"x", "y"})});
  for (auto gens : std::vector<std::vector<std::string>>{{"x^2", "x*y"}, {"x"}, {"x^2", "y^2"}}) {
    auto m = FPModule::quotient_ring(ideal(r, gens));
    auto a = FPModule::quotient_ring(annihilator(m));
    CHECK(analytic_spread(m, i) == analytic_spread(a, i));
  }
  CHECK(analytic_spread(FPModule::quotient_ring(ideal(r, {"x^2", "x*y"})), i) == 1);
  CHECK(analytic_spread(FPModule::quotient_ring(ideal(r, {"x", "y^3"})), i) == 0);
}

TEST_CASE("certified Artin-Rees exponents") {
  auto r = ring_xy();
  auto unit = unit_module(r);
  auto check_equality = [&](const SubmoduleBasis& n, const SubmoduleBasis& i, int d) {
    auto ind = intersect(ideal_power(i, d), n);
    for (int k = d; k <= d + 4; ++k) {
      CHECK(same_submodule(intersect(ideal_power(i, k), n), product(ideal_power(i, k - d), ind)));
    }
  };
  auto mx = ideal(r, {"x", "y"});
  auto nx = ideal(r, {"x"});
  auto c1 = certified_artin_rees(unit, nx, IdealFamily({mx}));
  CHECK(c1.d == std::vector<int>{1});
  check_equality(nx, mx, 1);
  CHECK(!same_submodule(intersect(ideal_power(mx, 1), nx), product(ideal_power(mx, 1), nx)));

  auto ny = ideal(r, {"y^2"});
  auto c0 = certified_artin_rees(unit, ny, IdealFamily({nx}));
  CHECK(c0.d == std::vector<int>{0});
  check_equality(ny, nx, 0);

  CHECK(certified_artin_rees(unit, SubmoduleBasis::zero(FreeModule::unit(r)), IdealFamily({mx})).d ==
        std::vector<int>{0});
}
