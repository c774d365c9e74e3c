#include <doctest.h>

#include "cohera/errors.hpp"
#include "cohera/functor.hpp"
#include "cohera/submodule.hpp"
#include "helpers.hpp"

using namespace cohera;
using namespace testing_helpers;

namespace {

FPModule quotient(const RingPtr& r, const std::vector<std::string>& gens) { return FPModule::quotient_ring(ideal(r, gens)); }

// (R + R(-1)) / (y e0 - e1), isomorphic to R.
FPModule twisted_cokernel(const RingPtr& r) {
  FreeModule f(r, {0, 1});
  return FPModule::cokernel(f, {f.sub(f.mul_poly(poly(r, "y"), f.basis(0)), f.basis(1))});
}

std::vector<FPModule> corpus(const RingPtr& r) {
  return {quotient(r, {"x"}),
          quotient(r, {"x^2", "x*y", "y^2"}),
          quotient(r, {"x^3", "x^2*y", "x*y^2", "y^3"}),
          quotient(r, {"x^2", "x*y"}),
          quotient(r, {"x*y"}),
          quotient(r, {"x^2", "y^3"}),
          FPModule::submodule(ideal(r, {"x", "y"})),
          FPModule::free(FreeModule::unit(r)),
          twisted_cokernel(r)};
}

std::vector<CoherentFunctor> builtins(const RingPtr& r) {
  return {identity_functor(r),
          functor_from_hom(quotient(r, {"x"})),
          functor_from_hom(residue_field(r)),
          functor_from_tensor(quotient(r, {"x"})),
          functor_from_tensor(residue_field(r)),
          functor_from_ext(quotient(r, {"x"}), 1),
          functor_from_ext(residue_field(r), 2),
          functor_from_ext(quotient(r, {"x^2", "x*y"}), 1),
          functor_from_tor(quotient(r, {"x"}), 1),
          functor_from_tor(residue_field(r), 1),
          functor_from_tor(quotient(r, {"x^2", "x*y"}), 2)};
}

}  // namespace

TEST_CASE("functor evaluation examples") {
  auto r = ring_xy();
  auto m2 = quotient(r, {"x^2", "x*y", "y^2"});
  auto m3 = quotient(r, {"x^3", "x^2*y", "x*y^2", "y^3"});
  auto rx = quotient(r, {"x"});
  auto unit = FPModule::free(FreeModule::unit(r));
  auto id = identity_functor(r);
  CHECK(evaluate(id, m2).length() == 3);
  CHECK(hilbert_equal(evaluate(id, m3), m3));
  auto hx = functor_from_hom(rx);
  CHECK(evaluate(hx, unit).is_zero());
  CHECK(evaluate(hx, m2).length() == 2);
  CHECK(evaluate(hx, rx).hilbert_function(0, 4) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(evaluate(functor_from_tensor(unit), m3).length() == 6);
  CHECK(evaluate(functor_from_tensor(rx), m3).length() == 3);
  CHECK(evaluate(functor_from_tensor(residue_field(r)), m2).length() == 1);
  CHECK(hilbert_equal(evaluate(functor_from_tensor(residue_field(r)), unit), residue_field(r)));
  CHECK(evaluate(functor_from_ext(rx, 1), m3).length() == 3);
  CHECK(evaluate(functor_from_tor(rx, 1), rx).hilbert_function(0, 4) == std::vector<std::int64_t>{0, 1, 1, 1, 1});
  CHECK(evaluate(functor_from_tor(residue_field(r), 1), residue_field(r)).length() == 2);
}

TEST_CASE("diagram route examples") {
  auto r = ring_xy();
  auto m2 = quotient(r, {"x^2", "x*y", "y^2"});
  auto m3 = quotient(r, {"x^3", "x^2*y", "x*y^2", "y^3"});
  auto rx = quotient(r, {"x"});
  CHECK(evaluate_via_diagram(identity_functor(r), m2).length() == 3);
  CHECK(evaluate_via_diagram(functor_from_hom(rx), m2).length() == 2);
  CHECK(evaluate_via_diagram(functor_from_ext(rx, 1), m3).length() == 3);
  for (const auto& f : builtins(r)) CHECK(f.diagram().commutes());
}

TEST_CASE("route equivalence on the corpus") {
  auto r = ring_xy();
  for (const auto& f : builtins(r)) {
    for (const auto& x : corpus(r)) {
      FPModule a = evaluate(f, x);
      FPModule b = evaluate_via_diagram(f, x);
      INFO(f.label(), " ", f.index(), " at ", x.describe());
      CHECK(hilbert_equal(a, b));
      try {
        CHECK(associated_primes(a).primes == associated_primes(b).primes);
      } catch (const StrategyExhausted&) {
      }
    }
  }
}

TEST_CASE("built-in presentations agree with direct Hom, Ext and Tor") {
  auto r = ring_xy();
  for (const auto& x : corpus(r)) {
    for (const auto& m : {quotient(r, {"x"}), residue_field(r), quotient(r, {"x^2", "x*y"})}) {
      CHECK(hilbert_equal(evaluate(functor_from_tensor(m), x), hom_ext_tor(m, x, 0, Functor::Tor)));
      CHECK(hilbert_equal(evaluate_via_diagram(functor_from_tensor(m), x), tensor(m, x)));
      for (int i = 1; i <= 2; ++i) {
        CHECK(hilbert_equal(evaluate_via_diagram(functor_from_ext(m, i), x), hom_ext_tor(m, x, i, Functor::Ext)));
        CHECK(hilbert_equal(evaluate_via_diagram(functor_from_tor(m, i), x), hom_ext_tor(m, x, i, Functor::Tor)));
      }
    }
  }
}

TEST_CASE("general presentation matches a colon-ideal oracle") {
  // f: R/(x^2) -> R/(x) the projection, so F(R/J) = (J : x^2) / (J : x).
  auto r = ring_xy();
  auto k = quotient(r, {"x^2"});
  auto l = quotient(r, {"x"});
  CoherentFunctor f(k, l, ModuleMap{k, l, {FreeModule::unit(r).basis(0)}, 0}, "projection");
  CHECK(f.diagram().commutes());
  auto x2 = ideal(r, {"x^2"});
  auto x1 = ideal(r, {"x"});
  for (auto gens : std::vector<std::vector<std::string>>{{"x^3", "y^2"}, {"x^2", "x*y", "y^2"}, {"x^4", "x*y^2"}, {"x*y"}}) {
    auto j = ideal(r, gens);
    auto oracle = FPModule::subquotient(colon(j, x2), colon(j, x1));
    auto x = FPModule::quotient_ring(j);
    CHECK(hilbert_equal(evaluate(f, x), oracle));
    CHECK(hilbert_equal(evaluate_via_diagram(f, x), oracle));
  }
  CHECK_THROWS_AS(CoherentFunctor(l, k, ModuleMap{l, k, {FreeModule::unit(r).basis(0)}, 0}, "bad").diagram(),
                  ContractViolation);
}

TEST_CASE("functor expressions") {
  auto r = ring_xy();
  auto m2 = quotient(r, {"x^2", "x*y", "y^2"});
  auto id = FunctorExpression::leaf(identity_functor(r));
  auto socle = FunctorExpression::compose(FunctorExpression::leaf(functor_from_ext(residue_field(r), 0)), id);
  CHECK(evaluate_expression(socle, m2).length() == 2);
  CHECK(evaluate_expression(socle, m2, Route::Diagram).length() == 2);
  auto fiber = FunctorExpression::compose(FunctorExpression::leaf(functor_from_tor(residue_field(r), 0)), id);
  for (int n = 1; n <= 4; ++n) {
    auto mn = FPModule::quotient_ring(ideal_power(ideal(r, {"x", "y"}), n));
    CHECK(evaluate_expression(fiber, mn).length() == 1);
  }
  auto ext = FunctorExpression::leaf(functor_from_ext(quotient(r, {"x"}), 1));
  auto with_id = FunctorExpression::compose(id, ext);
  CHECK(hilbert_equal(evaluate_expression(with_id, m2), evaluate_expression(ext, m2)));
  CHECK(with_id.label() == "compose(identity, ext)");
}
