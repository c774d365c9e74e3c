#include "cohera/hilbert.hpp"

#include <algorithm>
#include <set>

#include "cohera/errors.hpp"

namespace cohera {

namespace {

using TPoly = std::map<int, std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("Hilbert series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("Hilbert series coefficient overflow");
  return r;
}

void add_into(TPoly& acc, const TPoly& p, int shift = 0, std::int64_t scale = 1) {
  for (const auto& [e, c] : p) {
    auto& slot = acc[e + shift];
    slot = checked_add(slot, checked_mul(c, scale));
    if (slot == 0) acc.erase(e + shift);
  }
}

TPoly mul(const TPoly& a, const TPoly& b) {
  TPoly out;
  for (const auto& [e, c] : b) add_into(out, a, e, c);
  return out;
}

/// Exact division by (1 - t^w); nullopt when not divisible.
std::optional<TPoly> divide_one_minus(const TPoly& p, int w) {
  if (p.empty()) return TPoly{};
  // q(t) (1 - t^w) = p(t): q_e = p_e + q_{e-w}, scanning upward.
  int lo = p.begin()->first;
  int hi = p.rbegin()->first;
  std::map<int, std::int64_t> q;
  for (int e = lo; e <= hi - w; ++e) {
    std::int64_t v = 0;
    auto it = p.find(e);
    if (it != p.end()) v = it->second;
    auto jt = q.find(e - w);
    if (jt != q.end()) v = checked_add(v, jt->second);
    if (v != 0) q[e] = v;
  }
  TPoly check = q;
  TPoly shifted;
  for (const auto& [e, c] : q) shifted[e + w] = c;
  add_into(check, shifted, 0, -1);
  if (check != p) return std::nullopt;
  return q;
}

}  // namespace

std::string dim_to_string(const KrullDim& d) { return d ? std::to_string(*d) : "-inf"; }

KrullDim dim_max(const KrullDim& a, const KrullDim& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

HilbertSeries::HilbertSeries(std::map<int, std::int64_t> numerator, std::vector<int> weights)
    : num_(std::move(numerator)), weights_(std::move(weights)) {
  for (auto it = num_.begin(); it != num_.end();) {
    it = it->second == 0 ? num_.erase(it) : std::next(it);
  }
}

std::vector<std::int64_t> HilbertSeries::values(int lo, int hi) const {
  std::vector<std::int64_t> out;
  if (hi < lo) return out;
  if (num_.empty()) return std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo + 1), 0);
  int base = std::min(lo, num_.begin()->first);
  std::vector<std::int64_t> s(static_cast<std::size_t>(hi - base + 1), 0);
  for (const auto& [e, c] : num_) {
    if (e <= hi) s[static_cast<std::size_t>(e - base)] = c;
  }
  for (int w : weights_) {
    for (std::size_t i = static_cast<std::size_t>(w); i < s.size(); ++i) s[i] = checked_add(s[i], s[i - w]);
  }
  out.assign(s.begin() + (lo - base), s.end());
  return out;
}

KrullDim HilbertSeries::krull_dim() const {
  if (num_.empty()) return std::nullopt;
  TPoly p = num_;
  int order = 0;
  for (;;) {
    std::int64_t at_one = 0;
    for (const auto& [e, c] : p) at_one = checked_add(at_one, c);
    if (at_one != 0) break;
    p = *divide_one_minus(p, 1);
    ++order;
  }
  return static_cast<int>(weights_.size()) - order;
}

std::optional<std::int64_t> HilbertSeries::length() const {
  KrullDim d = krull_dim();
  if (d && *d > 0) return std::nullopt;
  TPoly p = num_;
  for (int w : weights_) {
    auto q = divide_one_minus(p, w);
    if (!q) throw ArithmeticError("finite-length series has a non-divisible numerator");
    p = std::move(*q);
  }
  std::int64_t total = 0;
  for (const auto& [e, c] : p) total = checked_add(total, c);
  return total;
}

int HilbertSeries::initial_degree() const {
  if (num_.empty()) return 0;
  return num_.begin()->first;
}

int HilbertSeries::support_end() const {
  if (num_.empty()) return 0;
  KrullDim d = krull_dim();
  if (!d || *d <= 0) {
    TPoly p = num_;
    for (int w : weights_) p = *divide_one_minus(p, w);
    return p.empty() ? 0 : p.rbegin()->first + 1;
  }
  return num_.rbegin()->first + 1;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.weights_ != b.weights_) throw ContractViolation("Hilbert series over different gradings");
  TPoly n = a.num_;
  add_into(n, b.num_);
  return HilbertSeries(std::move(n), a.weights_);
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.weights_ != b.weights_) throw ContractViolation("Hilbert series over different gradings");
  TPoly n = a.num_;
  add_into(n, b.num_, 0, -1);
  return HilbertSeries(std::move(n), a.weights_);
}

HilbertSeries HilbertSeries::shifted(int s) const {
  TPoly n;
  for (const auto& [e, c] : num_) n[e + s] = c;
  return HilbertSeries(std::move(n), weights_);
}

std::string HilbertSeries::to_string() const {
  std::string s;
  for (const auto& [e, c] : num_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  if (s.empty()) s = "0";
  std::string den;
  for (int w : weights_) den += "(1-t" + (w == 1 ? std::string() : "^" + std::to_string(w)) + ")";
  return den.empty() ? s : "(" + s + ")/" + den;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

namespace {

int single_variable(const Monomial& m) {
  int var = -1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (var >= 0) return -2;
    var = static_cast<int>(i);
  }
  return var;
}

TPoly numerator_rec(const std::vector<int>& w, std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return TPoly{{0, 1}};
  for (const auto& g : gens) {
    if (g.is_one()) return TPoly{};
  }
  const std::size_t n = w.size();
  std::vector<int> count(n, 0);
  bool all_pure = true;
  for (const auto& g : gens) {
    if (single_variable(g) >= 0) continue;
    all_pure = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] > 0) ++count[i];
    }
  }
  if (all_pure) {
    TPoly p{{0, 1}};
    for (const auto& g : gens) {
      int v = single_variable(g);
      int deg = w[static_cast<std::size_t>(v)] * g[static_cast<std::size_t>(v)];
      p = mul(p, TPoly{{0, 1}, {deg, -1}});
    }
    return p;
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<std::int32_t> exps;
  for (const auto& g : gens) {
    if (single_variable(g) < 0 && g[var] > 0) exps.push_back(g[var]);
  }
  std::sort(exps.begin(), exps.end());
  std::int32_t e = exps[exps.size() / 2];
  Monomial pivot = Monomial::variable(n, var, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(quotient(g, gcd(g, pivot)));
  TPoly out = numerator_rec(w, std::move(plus));
  add_into(out, numerator_rec(w, std::move(colon)), w[var] * e);
  return out;
}

}  // namespace

std::map<int, std::int64_t> monomial_numerator(const std::vector<int>& weights, std::vector<Monomial> gens) {
  return numerator_rec(weights, std::move(gens));
}

HilbertSeries quotient_series(const SubmoduleBasis& u) {
  const SubmoduleBasis& gb = u.groebner();
  const FreeModule& F = gb.ambient();
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(F.rank()));
  for (const auto& g : gb.gens()) leads[static_cast<std::size_t>(g.lead().comp)].push_back(g.lead().mon);
  TPoly num;
  for (int i = 0; i < F.rank(); ++i) {
    add_into(num, monomial_numerator(F.ring().weights(), std::move(leads[static_cast<std::size_t>(i)])), F.twist(i));
  }
  return HilbertSeries(std::move(num), F.ring().weights());
}

bool is_monomial_submodule(const SubmoduleBasis& gb) {
  for (const auto& g : gb.groebner().gens()) {
    if (g.size() != 1) return false;
  }
  return true;
}

namespace {

std::vector<int> support(const Monomial& m) {
  std::vector<int> s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) s.push_back(static_cast<int>(i));
  }
  return s;
}

void covers_rec(const std::vector<std::vector<int>>& sets, std::vector<bool>& chosen, std::set<std::vector<int>>& out) {
  for (const auto& s : sets) {
    bool hit = false;
    for (int v : s) hit = hit || chosen[static_cast<std::size_t>(v)];
    if (hit) continue;
    for (int v : s) {
      chosen[static_cast<std::size_t>(v)] = true;
      covers_rec(sets, chosen, out);
      chosen[static_cast<std::size_t>(v)] = false;
    }
    return;
  }
  std::vector<int> c;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) c.push_back(static_cast<int>(i));
  }
  out.insert(c);
}

std::vector<std::vector<int>> minimal_sets(const std::set<std::vector<int>>& all) {
  std::vector<std::vector<int>> out;
  for (const auto& a : all) {
    bool minimal = true;
    for (const auto& b : all) {
      if (b != a && b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

/// Irreducible components (exponent vectors, 0 = absent) of a monomial ideal.
void irreducible_rec(std::vector<Monomial> gens, std::set<std::vector<std::int32_t>>& out) {
  gens = minimalize_monomials(std::move(gens));
  for (const auto& g : gens) {
    if (g.is_one()) return;
  }
  for (const auto& g : gens) {
    auto s = support(g);
    if (s.size() < 2) continue;
    std::size_t v = static_cast<std::size_t>(s.front());
    Monomial power = Monomial::variable(g.size(), v, g[v]);
    std::vector<Monomial> a = gens;
    a.push_back(power);
    std::vector<Monomial> b = gens;
    b.push_back(quotient(g, power));
    irreducible_rec(std::move(a), out);
    irreducible_rec(std::move(b), out);
    return;
  }
  std::vector<std::int32_t> comp(gens.empty() ? 0 : gens.front().size(), 0);
  for (const auto& g : gens) {
    int v = single_variable(g);
    comp[static_cast<std::size_t>(v)] = g[static_cast<std::size_t>(v)];
  }
  out.insert(comp);
}

}  // namespace

std::vector<std::vector<int>> monomial_minimal_primes(std::size_t nvars, std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  std::vector<std::vector<int>> sets;
  for (const auto& g : gens) sets.push_back(support(g));
  std::vector<bool> chosen(nvars, false);
  std::set<std::vector<int>> all;
  covers_rec(sets, chosen, all);
  return minimal_sets(all);
}

std::vector<std::vector<int>> monomial_associated_primes(std::size_t nvars, std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  if (gens.empty()) return {std::vector<int>{}};
  std::set<std::vector<std::int32_t>> comps;
  irreducible_rec(gens, comps);
  // Q_a contains Q_b iff b_i > 0 implies 0 < a_i <= b_i.
  auto contains_ideal = [](const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] > 0 && (a[i] == 0 || a[i] > b[i])) return false;
    }
    return true;
  };
  std::set<std::vector<int>> primes;
  for (const auto& a : comps) {
    bool redundant = false;
    for (const auto& b : comps) {
      if (b != a && contains_ideal(a, b)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    std::vector<int> p;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (a[i] > 0) p.push_back(static_cast<int>(i));
    }
    primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

}  // namespace cohera
