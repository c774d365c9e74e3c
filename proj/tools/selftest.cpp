#include "selftest.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>

#include "cohera/errors.hpp"
#include "cohera/groebner.hpp"
#include "cohera/polynomial.hpp"
#include "cohera/stability.hpp"
#include "cohera/submodule.hpp"

namespace cohera::selftest {

namespace {

using Clock = std::chrono::steady_clock;

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.first_failure = what;
    }
  }

  SuiteResult done() {
    result_.millis = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return result_;
  }

 private:
  SuiteResult result_;
  Clock::time_point start_ = Clock::now();
};

void exponents_of_degree(std::size_t nvars, int d, std::vector<std::int32_t>& cur, std::size_t at,
                         std::vector<Monomial>& out) {
  if (at + 1 == nvars) {
    cur[at] = d;
    out.emplace_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[at] = e;
    exponents_of_degree(nvars, d - e, cur, at + 1, out);
  }
}

std::vector<Monomial> monomials_of_degree(const Ring& r, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<std::int32_t> cur(r.nvars(), 0);
  exponents_of_degree(r.nvars(), d, cur, 0, out);
  return out;
}

class Random {
 public:
  explicit Random(std::uint32_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  /// Homogeneous polynomial of degree d with small integer coefficients, never zero.
  FreeVector poly(const RingPtr& ring, int d, int max_terms = 3) {
    FreeModule F = FreeModule::unit(ring);
    auto mons = monomials_of_degree(*ring, d);
    std::vector<Term> terms;
    int count = uniform(1, std::min<int>(max_terms, static_cast<int>(mons.size())));
    std::shuffle(mons.begin(), mons.end(), gen_);
    for (int i = 0; i < count; ++i) {
      int c = uniform(1, 3) * (uniform(0, 1) ? 1 : -1);
      terms.push_back(Term{mons[static_cast<std::size_t>(i)], 0, ring->field().from_int(c)});
    }
    return F.normalize(std::move(terms));
  }

  /// Homogeneous vector of degree d in F; components of negative degree stay zero.
  FreeVector vector(const FreeModule& F, int d) {
    FreeVector out;
    for (int i = 0; i < F.rank(); ++i) {
      int di = d - F.twist(i);
      if (di < 0 || uniform(0, 3) == 0) continue;
      for (const auto& t : poly(F.ring_ptr(), di).terms) out = F.add(out, F.normalize({Term{t.mon, i, t.coeff}}));
    }
    if (out.is_zero()) {
      for (int i = 0; i < F.rank(); ++i)
        if (d - F.twist(i) >= 0)
          return F.mul_term(F.basis(i), F.field().one(), monomials_of_degree(F.ring(), d - F.twist(i)).front());
    }
    return out;
  }

  SubmoduleBasis ideal(const RingPtr& ring, int gens, int max_deg) {
    std::vector<FreeVector> g;
    for (int i = 0; i < gens; ++i) g.push_back(poly(ring, uniform(1, max_deg)));
    return SubmoduleBasis(FreeModule::unit(ring), std::move(g));
  }

  /// Monomial ideal with one or two generators of degree 1..3.
  SubmoduleBasis monomial_ideal(const RingPtr& ring) {
    std::vector<FreeVector> g;
    int count = uniform(1, 2);
    for (int i = 0; i < count; ++i) {
      auto mons = monomials_of_degree(*ring, uniform(1, 3));
      g.push_back(FreeModule::unit(ring).monomial_vector(mons[static_cast<std::size_t>(uniform(0, static_cast<int>(mons.size()) - 1))],
                                                         0, ring->field().one()));
    }
    return SubmoduleBasis(FreeModule::unit(ring), std::move(g));
  }

  FPModule module(const RingPtr& ring) {
    switch (uniform(0, 6)) {
      case 5:
      case 6:
        return FPModule::quotient_ring(monomial_ideal(ring));
      case 0:
        return FPModule::quotient_ring(ideal(ring, uniform(1, 2), 2));
      case 1: {
        FreeModule F(ring, {0, 1});
        return FPModule::cokernel(F, {vector(F, 2)});
      }
      case 2:
        return residue_field(ring);
      case 3:
        return FPModule::submodule(ideal(ring, 2, 2));
      default:
        return FPModule::free(FreeModule::unit(ring));
    }
  }

 private:
  std::mt19937 gen_;
};

RingPtr ring_xy() { return Ring::make(Field(), {"x", "y"}); }
RingPtr ring_xyz() { return Ring::make(Field(), {"x", "y", "z"}); }

std::int64_t rank_mod(std::vector<std::vector<Coeff>> rows, const Field& k) {
  std::int64_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && k.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& p = rows[static_cast<std::size_t>(rank)];
    Coeff inv = k.inv(p[c]);
    for (auto& v : p) v = k.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || k.is_zero(rows[r][c])) continue;
      Coeff f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = k.sub(rows[r][j], k.mul(f, p[j]));
    }
    ++rank;
  }
  return rank;
}

/// dim_k of the degree-d kernel of e_l -> images[l], by linear algebra on monomial strands.
std::int64_t brute_force_kernel_dim(const FreeModule& target, const std::vector<FreeVector>& images,
                                    const std::vector<int>& twists, int d) {
  std::vector<FreeVector> columns;
  for (std::size_t l = 0; l < images.size(); ++l)
    for (const auto& m : monomials_of_degree(target.ring(), d - twists[l]))
      columns.push_back(target.mul_term(images[l], target.field().one(), m));
  std::map<std::pair<std::vector<std::int32_t>, int>, std::size_t> index;
  for (const auto& c : columns)
    for (const auto& t : c.terms) index.emplace(std::make_pair(t.mon.exponents(), t.comp), index.size());
  std::vector<std::vector<Coeff>> rows(columns.size(), std::vector<Coeff>(index.size(), target.field().zero()));
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (const auto& t : columns[i].terms) rows[i][index.at({t.mon.exponents(), t.comp})] = t.coeff;
  return static_cast<std::int64_t>(columns.size()) - rank_mod(std::move(rows), target.field());
}

std::int64_t strand(const FPModule& m, int d) { return m.hilbert_function(d, d).front(); }

std::optional<std::int64_t> member_length(const CoherentFunctor& f, const FPModule& x, int n, Route route) {
  std::vector<FreeVector> vars;
  for (std::size_t i = 0; i < x.ring()->nvars(); ++i)
    vars.push_back(FreeModule::unit(x.ring()).monomial_vector(Monomial::variable(x.ring()->nvars(), i), 0,
                                                             x.ring()->field().one()));
  IdealFamily family({SubmoduleBasis(FreeModule::unit(x.ring()), vars)});
  FPModule g = quotient_member(FamilySpec::quotient(x, x.gens(), family), {n});
  FPModule e = route == Route::Direct ? evaluate(f, g) : evaluate_via_diagram(f, g);
  return e.length();
}

}  // namespace

std::vector<RoutePair> random_route_corpus(std::uint32_t seed, int count) {
  Random rnd(seed);
  std::vector<RoutePair> out;
  const char* kinds[] = {"hom", "tensor", "ext0", "ext1", "ext2", "tor0", "tor1", "tor2"};
  while (static_cast<int>(out.size()) < count) {
    RingPtr r = rnd.uniform(0, 4) == 0 ? ring_xyz() : ring_xy();
    FPModule a = rnd.module(r);
    FPModule x = rnd.module(r);
    std::string kind = kinds[rnd.uniform(0, 7)];
    CoherentFunctor f = kind == "hom"      ? functor_from_hom(a)
                        : kind == "tensor" ? functor_from_tensor(a)
                        : kind[0] == 'e'   ? functor_from_ext(a, kind[3] - '0')
                                           : functor_from_tor(a, kind[3] - '0');
    if (evaluate(f, x).is_zero()) continue;
    out.push_back(RoutePair{f, x, kind + " of " + a.describe() + " on " + x.describe()});
  }
  return out;
}

SuiteResult buchberger_suite(const Options& o) {
  Check c("buchberger");
  Random rnd(o.seed);
  for (int trial = 0; trial < 40; ++trial) {
    RingPtr r = trial % 2 ? ring_xyz() : ring_xy();
    SubmoduleBasis u;
    if (trial % 4 == 3) {
      FreeModule F(r, {0, 1});
      std::vector<FreeVector> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(rnd.vector(F, rnd.uniform(2, 3)));
      u = SubmoduleBasis(F, gens);
    } else {
      u = rnd.ideal(r, rnd.uniform(2, 4), 3);
    }
    const std::string tag = "trial " + std::to_string(trial);
    SubmoduleBasis gb = groebner_basis(u);
    c.expect(satisfies_buchberger_criterion(gb), tag + ": S-vectors do not reduce to zero");
    for (const auto& g : u.gens()) c.expect(normal_form(g, gb).is_zero(), tag + ": generator not reduced to zero");
    Lifter lift(u.ambient(), u.gens(), {}, generator_degrees(u));
    for (const auto& g : gb.gens()) c.expect(lift.lift(g).has_value(), tag + ": basis element outside the span");
    SubmoduleBasis again = groebner_basis(SubmoduleBasis(gb.ambient(), gb.gens()));
    c.expect(again.gens() == gb.gens(), tag + ": reduced basis not idempotent");
    FreeVector p = u.ambient().mul_poly(rnd.poly(r, 2), u.gens().front());
    c.expect(normal_form(p, gb).is_zero(), tag + ": multiple of a generator not in the submodule");
  }
  return c.done();
}

SuiteResult syzygy_suite(const Options& o) {
  Check c("syzygy");
  Random rnd(o.seed + 1);
  for (int trial = 0; trial < 30; ++trial) {
    RingPtr r = trial % 3 == 2 ? ring_xyz() : ring_xy();
    FreeModule target = trial % 2 ? FreeModule(r, {0, 1}) : FreeModule::unit(r);
    std::vector<FreeVector> images;
    std::vector<int> twists;
    int m = rnd.uniform(2, 4);
    for (int l = 0; l < m; ++l) {
      int d = rnd.uniform(1, 3);
      images.push_back(rnd.vector(target, d));
      twists.push_back(d);
    }
    const std::string tag = "trial " + std::to_string(trial);
    SubmoduleBasis syz = syzygies_modulo(target, images, {}, twists);
    for (const auto& s : syz.gens())
      c.expect(apply_combination(target, images, s).is_zero(), tag + ": syzygy does not map to zero");
    FPModule k = FPModule::submodule(syz);
    int top = *std::max_element(twists.begin(), twists.end()) + 3;
    for (int d = 0; d <= top; ++d)
      c.expect(strand(k, d) == brute_force_kernel_dim(target, images, twists, d),
               tag + ": kernel dimension differs from brute force in degree " + std::to_string(d));
  }
  return c.done();
}

SuiteResult euler_suite(const Options& o) {
  Check c("euler_characteristic");
  Random rnd(o.seed + 2);
  for (int trial = 0; trial < 25; ++trial) {
    RingPtr r = trial % 2 ? ring_xyz() : ring_xy();
    FreeModule F(r, {0, 0, 1});
    std::vector<FreeVector> rels;
    int rel_count = rnd.uniform(1, 3);
    for (int i = 0; i < rel_count; ++i) rels.push_back(rnd.vector(F, rnd.uniform(1, 3)));
    FPModule m = FPModule::cokernel(F, rels);
    GradedComplex res = free_resolution(m, static_cast<int>(r->nvars()) + 1);
    const std::string tag = "trial " + std::to_string(trial);
    c.expect(res.complete, tag + ": resolution did not end within nvars + 1 steps");
    c.expect(res.composites_vanish(), tag + ": d^2 != 0");
    for (int d = 0; d <= 12; ++d) {
      std::int64_t chi = 0;
      for (std::size_t i = 0; i < res.modules.size(); ++i)
        chi += (i % 2 ? -1 : 1) * strand(FPModule::free(res.modules[i]), d);
      c.expect(chi == strand(m, d), tag + ": Euler characteristic differs in degree " + std::to_string(d));
    }
  }
  return c.done();
}

SuiteResult tor_balance_suite(const Options& o) {
  Check c("tor_balance");
  Random rnd(o.seed + 3);
  for (int trial = 0; trial < 20; ++trial) {
    RingPtr r = trial % 3 == 2 ? ring_xyz() : ring_xy();
    FPModule a = rnd.module(r);
    FPModule b = rnd.module(r);
    for (int i = 0; i <= 2; ++i)
      c.expect(hilbert_equal(hom_ext_tor(a, b, i, Functor::Tor), hom_ext_tor(b, a, i, Functor::Tor)),
               "Tor_" + std::to_string(i) + "(" + a.describe() + ", " + b.describe() + ") unbalanced");
  }
  return c.done();
}

SuiteResult route_equivalence_suite(const Options& o) {
  Check c("route_equivalence");
  auto corpus = random_route_corpus(o.seed + 4, o.route_pairs);
  bool first = true;
  for (const auto& p : corpus) {
    FPModule direct = evaluate(p.functor, p.module);
    FPModule diagram = evaluate_via_diagram(p.functor, p.module);
    c.expect(hilbert_equal(direct, diagram), p.description + ": Hilbert series differ");
    for (int n = 1; n <= 2; ++n) {
      auto a = member_length(p.functor, p.module, n, Route::Direct);
      auto b = member_length(p.functor, p.module, n, Route::Diagram);
      if (first && o.flip_lambda && a) *a += 1;
      first = false;
      c.expect(a == b, p.description + ": lambda differs at n=" + std::to_string(n));
    }
  }
  return c.done();
}

SuiteResult artin_rees_suite(const Options& o) {
  Check c("artin_rees");
  Random rnd(o.seed + 5);
  RingPtr r = ring_xy();
  auto parse = [&](const std::vector<std::string>& gens) {
    std::vector<FreeVector> v;
    for (const auto& g : gens) v.push_back(parse_polynomial(r, g).vec());
    return SubmoduleBasis(FreeModule::unit(r), v);
  };
  struct Case {
    SubmoduleBasis n;
    SubmoduleBasis i;
  };
  std::vector<Case> cases = {{parse({"x"}), parse({"x", "y"})},
                             {parse({"y^2"}), parse({"x"})},
                             {parse({"x^2", "x*y"}), parse({"x", "y"})},
                             {parse({"x*y"}), parse({"x^2", "y"})}};
  for (int t = 0; t < 3; ++t) cases.push_back({rnd.ideal(r, rnd.uniform(1, 2), 2), parse({"x", "y"})});
  FPModule m = FPModule::free(FreeModule::unit(r));
  GridBox box{{0}, {6}, 1};
  for (const auto& cs : cases) {
    const std::string tag = "N=" + cs.n.canonical();
    ArtinReesResult a = artin_rees_exponent(m, cs.n, IdealFamily({cs.i}), box);
    c.expect(a.certified, tag + ": no certificate (" + a.mode + ")");
    for (int k = 0; k <= 3; ++k)
      c.expect(artin_rees_holds(m, cs.n, IdealFamily({cs.i}), a.d, {a.d[0] + k}),
               tag + ": equality fails at d+" + std::to_string(k));
  }
  return c.done();
}

SuiteResult fit_suite(const Options& o) {
  Check c("fit_exactness");
  std::mt19937 gen(o.seed + 6);
  auto coef = [&]() { return std::uniform_int_distribution<int>(-3, 3)(gen); };
  auto binom = [](std::int64_t n, int k) {
    std::int64_t v = 1;
    for (int j = 0; j < k; ++j) v = v * (n - j) / (j + 1);
    return v;
  };
  for (int trial = 0; trial < 8; ++trial) {
    int deg = trial % 4;
    std::vector<int> a(static_cast<std::size_t>(deg) + 1);
    for (auto& v : a) v = coef();
    a.back() = a.back() == 0 ? 1 : a.back();
    GridBox box{{1}, {10}, 1};
    std::map<Point, std::optional<std::int64_t>> table;
    for (const auto& n : box.points()) {
      std::int64_t v = 0;
      for (int k = 0; k <= deg; ++k) v += a[static_cast<std::size_t>(k)] * binom(n[0], k);
      table[n] = v;
    }
    FitResult f = fit_polynomial(table, box, deg + 1);
    c.expect(f.ok && f.polynomial.total_degree() == deg, "univariate degree " + std::to_string(deg) + " not recovered");
    if (f.ok)
      for (const auto& [n, v] : table) c.expect(f.polynomial.evaluate(n) == Rational(*v), "value mismatch");
  }
  for (int trial = 0; trial < 4; ++trial) {
    int a = coef(), b = coef(), d = coef(), e = coef() == 0 ? 1 : 2;
    GridBox box{{1, 1}, {6, 6}, 1};
    std::map<Point, std::optional<std::int64_t>> table;
    for (const auto& n : box.points()) table[n] = a + b * n[0] + d * n[1] + e * binom(n[0] + n[1], 2);
    FitResult f = fit_polynomial(table, box, 3);
    c.expect(f.ok && f.polynomial.total_degree() == 2, "bivariate quadratic not recovered");
    if (f.ok)
      for (const auto& [n, v] : table) c.expect(f.polynomial.evaluate(n) == Rational(*v), "bivariate value mismatch");
  }
  GridBox box{{1}, {12}, 1};
  std::map<Point, std::optional<std::int64_t>> expo;
  for (const auto& n : box.points()) expo[n] = std::int64_t{1} << n[0];
  c.expect(!fit_polynomial(expo, box, 3).ok, "2^n accepted as a polynomial");
  std::map<Point, std::optional<std::int64_t>> late;
  for (const auto& n : box.points()) late[n] = n[0] < 4 ? 7 : 2 * n[0];
  FitResult lf = fit_polynomial(late, box, 2);
  c.expect(lf.ok && lf.polynomial.onset == Point{4}, "onset of 2n from n = 4 not found");
  return c.done();
}

SuiteResult cache_suite(const Options& o) {
  Check c("cache_recovery");
  GroebnerCache& cache = GroebnerCache::instance();
  auto previous_dir = cache.directory();
  bool previous_enabled = cache.enabled();
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("cohera-selftest-" + hex64(fnv1a(std::to_string(o.seed) +
                                                                               std::to_string(Clock::now().time_since_epoch().count()))));
  cache.set_enabled(true);
  cache.set_directory(dir.string());
  cache.clear_memory();

  RingPtr r = ring_xyz();
  auto make = [&]() {
    std::vector<FreeVector> g;
    for (const char* s : {"x^2*y - z^3", "x*y^2 - y*z^2", "x^3 - y^2*z"}) g.push_back(parse_polynomial(r, s).vec());
    return SubmoduleBasis(FreeModule::unit(r), g);
  };
  std::vector<FreeVector> cold = groebner_basis(make()).gens();
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ofstream(e.path(), std::ios::trunc) << "cohera-gb 1\ncorrupted entry\nsum 0\n";
    ++files;
  }
  c.expect(files > 0, "no cache entry written");
  cache.clear_memory();
  cache.reset_stats();
  std::vector<FreeVector> warm = groebner_basis(make()).gens();
  c.expect(cache.stats().invalidated > 0, "corrupted entry not invalidated");
  c.expect(warm == cold, "recomputed basis differs after invalidation");
  cache.clear_memory();
  cache.reset_stats();
  std::vector<FreeVector> again = groebner_basis(make()).gens();
  c.expect(cache.stats().disk_hits > 0, "rewritten entry not served from disk");
  c.expect(again == cold, "disk entry differs from computed basis");

  cache.clear_memory();
  cache.set_directory(previous_dir);
  cache.set_enabled(previous_enabled);
  std::error_code ec;
  fs::remove_all(dir, ec);
  return c.done();
}

const std::vector<NamedSuite>& all_suites() {
  static const std::vector<NamedSuite> suites = {
      {"buchberger", buchberger_suite},         {"syzygy", syzygy_suite},
      {"euler_characteristic", euler_suite},    {"tor_balance", tor_balance_suite},
      {"route_equivalence", route_equivalence_suite}, {"artin_rees", artin_rees_suite},
      {"fit_exactness", fit_suite},             {"cache_recovery", cache_suite},
  };
  return suites;
}

int run_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<SuiteResult> results;
  for (const auto& s : all_suites()) {
    SuiteResult r;
    try {
      r = s.run(o);
    } catch (const std::exception& e) {
      r.name = s.name;
      r.passed = false;
      r.first_failure = std::string("exception: ") + e.what();
    }
    results.push_back(r);
  }
  out << std::left << std::setw(24) << "suite" << std::setw(8) << "status" << std::setw(8) << "checks" << "ms\n";
  for (const auto& r : results)
    out << std::left << std::setw(24) << r.name << std::setw(8) << (r.passed ? "PASS" : "FAIL") << std::setw(8)
        << r.checks << std::fixed << std::setprecision(1) << r.millis << "\n";
  for (const auto& r : results) {
    if (!r.passed) {
      err << "selftest failed: " << r.name << ": " << r.first_failure << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace cohera::selftest
