#include <filesystem>
#include <fstream>
#include <random>

#include "cohera/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cohera;
using namespace testing_helpers;

TEST_CASE("polynomial parser") {
  auto r = ring_xy(Field::rationals());
  CHECK(parse_polynomial(r, "x^2*y - 3/2*y^3").to_string() == "x^2*y - 3/2*y^3");
  CHECK(parse_polynomial(r, "(x+y)^2 - x^2 - y^2").to_string() == "2*x*y");
  CHECK(parse_polynomial(r, "-(x - y)").to_string() == "-x + y");
  CHECK_THROWS_AS(parse_polynomial(r, "x + z"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "x / y"), ParseError);
  try {
    parse_polynomial(r, "x + * y");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  auto fp = ring_xy();
  CHECK(parse_polynomial(fp, "32004*x").to_string() == "x");
  CHECK(parse_polynomial(fp, "1/2*x + 1/2*x").to_string() == "x");
}

TEST_CASE("monomial ideal is already a Gröbner basis") {
  auto r = ring_xy();
  auto gb = groebner_basis(ideal(r, {"x^2", "x*y"}));
  CHECK(strings(gb) == std::vector<std::string>{"x*y", "x^2"});
}

TEST_CASE("linear forms row-reduce") {
  auto r = ring_xy(Field::rationals());
  auto gb = groebner_basis(ideal(r, {"x+y", "x-y"}));
  CHECK(strings(gb) == std::vector<std::string>{"y", "x"});
}

TEST_CASE("lex basis of an inhomogeneous ideal") {
  auto r = Ring::make(Field::rationals(), {"x", "y"}, {}, OrderKind::Lex);
  auto gens = ideal(r, {"x^2-1", "x*y-1"});
  auto gb = groebner_basis(gens);
  CHECK(strings(gb) == std::vector<std::string>{"y^2 - 1", "x - y"});
  auto expected = ideal(r, {"x-y", "y^2-1"});
  CHECK(same_submodule(gens, expected));
  CHECK(normal_form(poly(r, "x^2+y"), gb) == poly(r, "y+1"));
}

TEST_CASE("normal form examples and contract") {
  auto r = ring_xy();
  auto gb = groebner_basis(ideal(r, {"x^2", "x*y"}));
  CHECK(normal_form(poly(r, "x^2*y"), gb).is_zero());
  CHECK(normal_form(poly(r, "y^3"), gb) == poly(r, "y^3"));
  CHECK_THROWS_AS(normal_form(poly(r, "y"), ideal(r, {"x"})), ContractViolation);
}

TEST_CASE("syzygies") {
  auto r = ring_xy();
  auto s = syzygies(ideal(r, {"x", "y"}));
  REQUIRE(s.size() == 1);
  CHECK(s.ambient().to_string(s.gens()[0]) == "y*e0 - x*e1");
  auto s2 = syzygies(ideal(r, {"x^2", "x*y"}));
  REQUIRE(s2.size() == 1);
  CHECK(s2.ambient().to_string(s2.gens()[0]) == "y*e0 - x*e1");
  FreeModule f = FreeModule::free(r, 3);
  CHECK(syzygies(SubmoduleBasis::whole(f)).size() == 0);
}

TEST_CASE("syzygies over a quotient ring include Koszul images") {
  auto base = ring_xy();
  auto q = base->with_base_relations({poly(base, "x^2")});
  // x * x = 0 in k[x,y]/(x^2).
  auto s = syzygies(ideal(q, {"x"}));
  REQUIRE(s.gens().size() >= 1);
  CHECK(contains(s, poly(q, "x")));
  CHECK(!contains(s, poly(q, "y")));
}

TEST_CASE("lifting expresses members in generators") {
  auto r = ring_xy();
  FreeModule u = FreeModule::unit(r);
  Lifter lifter(u, {poly(r, "x^2"), poly(r, "x*y+y^2")}, {}, {2, 2});
  auto c = lifter.lift(poly(r, "x^3 + x^2*y + x*y^2"));
  REQUIRE(c);
  FreeVector back = u.add(u.mul_poly((*c)[0], poly(r, "x^2")), u.mul_poly((*c)[1], poly(r, "x*y+y^2")));
  CHECK(back == poly(r, "x^3 + x^2*y + x*y^2"));
  CHECK(!lifter.lift(poly(r, "y^2")));
}

TEST_CASE("idempotence and Buchberger criterion on random ideals") {
  std::mt19937 rng(7);
  auto r = Ring::make(Field(), {"x", "y", "z"});
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FreeVector> gens;
    FreeModule u = FreeModule::unit(r);
    for (int g = 0; g < 3; ++g) {
      int d = 2 + (trial + g) % 2;
      std::vector<Term> terms;
      for (int a = 0; a <= d; ++a) {
        for (int b = 0; a + b <= d; ++b) {
          int c = coef(rng);
          if (c == 0 || (rng() % 3) != 0) continue;
          terms.push_back(Term{Monomial({a, b, d - a - b}), 0, r->field().from_int(c)});
        }
      }
      gens.push_back(u.normalize(terms));
    }
    SubmoduleBasis s(u, gens);
    auto gb = groebner_basis(s);
    CHECK(satisfies_buchberger_criterion(gb));
    SubmoduleBasis again(u, gb.gens());
    CHECK(strings(groebner_basis(again)) == strings(gb));
    for (const auto& g : s.gens()) CHECK(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("disk cache round trip and corruption recovery") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "cohera_cache_unit";
  fs::remove_all(dir);
  auto& cache = GroebnerCache::instance();
  cache.set_directory(dir.string());
  cache.clear_memory();
  auto r = Ring::make(Field(), {"a", "b", "c"});
  auto s = ideal(r, {"a^2-b*c", "a*b-c^2"});
  auto first = strings(groebner_basis(s));
  cache.clear_memory();
  cache.reset_stats();
  CHECK(strings(groebner_basis(ideal(r, {"a^2-b*c", "a*b-c^2"}))) == first);
  CHECK(cache.stats().disk_hits == 1);
  for (auto& e : fs::directory_iterator(dir)) {
    std::ofstream(e.path(), std::ios::trunc) << "garbage";
  }
  cache.clear_memory();
  cache.reset_stats();
  CHECK(strings(groebner_basis(ideal(r, {"a^2-b*c", "a*b-c^2"}))) == first);
  CHECK(cache.stats().invalidated == 1);
  cache.set_directory(std::nullopt);
  fs::remove_all(dir);
}
