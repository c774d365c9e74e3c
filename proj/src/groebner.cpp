#include "cohera/groebner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "cohera/errors.hpp"

namespace cohera {

struct SubmoduleBasis::Lazy {
  std::once_flag once;
  std::unique_ptr<SubmoduleBasis> gb;
};

SubmoduleBasis::SubmoduleBasis(FreeModule ambient, std::vector<FreeVector> gens)
    : ambient_(std::move(ambient)), lazy_(std::make_shared<Lazy>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms) {
      if (t.comp < 0 || t.comp >= ambient_.rank()) throw ContractViolation("generator component outside ambient rank");
    }
    if (!ambient_.homogeneous_degree(g)) homogeneous_ = false;
    gens_.push_back(std::move(g));
  }
}

SubmoduleBasis SubmoduleBasis::whole(const FreeModule& ambient) {
  std::vector<FreeVector> gens;
  for (int i = 0; i < ambient.rank(); ++i) gens.push_back(ambient.basis(i));
  return SubmoduleBasis(ambient, std::move(gens));
}

SubmoduleBasis make_groebner_flagged(FreeModule ambient, std::vector<FreeVector> gb) {
  SubmoduleBasis s(std::move(ambient), std::move(gb));
  s.groebner_ = true;
  return s;
}

const SubmoduleBasis& SubmoduleBasis::groebner() const {
  if (groebner_) return *this;
  if (!lazy_) throw ContractViolation("uninitialised submodule");
  std::call_once(lazy_->once, [&] { lazy_->gb = std::make_unique<SubmoduleBasis>(groebner_basis(*this)); });
  return *lazy_->gb;
}

std::string SubmoduleBasis::canonical() const {
  std::vector<std::string> parts;
  parts.reserve(gens_.size());
  for (const auto& g : gens_) parts.push_back(ambient_.canonical(g));
  std::sort(parts.begin(), parts.end());
  std::string key = ambient_.tag() + "{";
  for (const auto& p : parts) key += p + "|";
  return key + "}";
}

namespace {

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

/// Division by a fixed list of monic vectors.
class Reducer {
 public:
  explicit Reducer(const FreeModule& F) : F_(F) {}

  void add(const FreeVector* g) {
    const Term& t = g->lead();
    gs_.push_back(g);
    masks_.push_back(support_mask(t.mon));
    degs_.push_back(F_.ring().degree(t.mon));
  }

  std::size_t size() const { return gs_.size(); }

  /// Index of a basis element whose lead divides t, or -1.
  int find(const Term& t, std::uint64_t tmask, std::int64_t tdeg) const {
    for (std::size_t i = 0; i < gs_.size(); ++i) {
      if (degs_[i] > tdeg || (masks_[i] & ~tmask) != 0) continue;
      const Term& l = gs_[i]->lead();
      if (l.comp == t.comp && divides(l.mon, t.mon)) return static_cast<int>(i);
    }
    return -1;
  }

  FreeVector reduce_lead(FreeVector v) const {
    while (!v.is_zero()) {
      const Term& t = v.lead();
      int i = find(t, support_mask(t.mon), F_.ring().degree(t.mon));
      if (i < 0) break;
      Monomial q = quotient(t.mon, gs_[i]->lead().mon);
      v = F_.sub_multiple(v, t.coeff, q, *gs_[i]);
    }
    return v;
  }

  FreeVector reduce_full(FreeVector v) const {
    FreeVector out;
    while (!v.is_zero()) {
      const Term& t = v.lead();
      int i = find(t, support_mask(t.mon), F_.ring().degree(t.mon));
      if (i < 0) {
        out.terms.push_back(t);
        v.terms.erase(v.terms.begin());
        continue;
      }
      Monomial q = quotient(t.mon, gs_[i]->lead().mon);
      v = F_.sub_multiple(v, t.coeff, q, *gs_[i]);
    }
    return out;
  }

 private:
  const FreeModule& F_;
  std::vector<const FreeVector*> gs_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::int64_t> degs_;
};

FreeVector s_vector(const FreeModule& F, const FreeVector& f, const FreeVector& g) {
  const Term& a = f.lead();
  const Term& b = g.lead();
  Monomial l = lcm(a.mon, b.mon);
  FreeVector left = F.mul_term(f, F.field().one(), quotient(l, a.mon));
  return F.sub_multiple(left, F.field().div(a.coeff, b.coeff), quotient(l, b.mon), g);
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
  std::int64_t degree;
};

class Buchberger {
 public:
  explicit Buchberger(const FreeModule& F) : F_(F), ideal_(F.rank() == 1) {}

  std::vector<FreeVector> run(std::vector<FreeVector> input) {
    std::vector<std::int64_t> input_sugar;
    std::vector<std::size_t> order(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
      order[i] = i;
      input_sugar.push_back(sugar_of(input[i]));
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return input_sugar[a] < input_sugar[b]; });
    std::size_t next = 0;
    while (next < order.size() || !pairs_.empty()) {
      std::size_t best = pick_pair();
      bool take_input =
          next < order.size() && (pairs_.empty() || input_sugar[order[next]] <= pairs_[best].degree);
      FreeVector h;
      std::int64_t sugar = 0;
      if (take_input) {
        sugar = input_sugar[order[next]];
        h = std::move(input[order[next++]]);
      } else {
        Pair p = pairs_[best];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        sugar = p.degree;
        h = s_vector(F_, *g_[p.i], *g_[p.j]);
      }
      h = reducer_.reduce_lead(std::move(h));
      if (h.is_zero()) continue;
      insert(F_.make_monic(h), sugar);
    }
    return interreduce();
  }

 private:
  std::size_t pick_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      int c = F_.compare_lead(a.lcm, g_[a.i]->lead().comp, b.lcm, g_[b.i]->lead().comp);
      if (c < 0) best = k;
    }
    return best;
  }

  std::int64_t sugar_of(const FreeVector& v) const {
    std::int64_t d = 0;
    for (const auto& t : v.terms) d = std::max(d, F_.degree(t));
    return d;
  }

  void insert(FreeVector h, std::int64_t sugar) {
    sugar = std::max(sugar, sugar_of(h));
    g_.push_back(std::make_unique<FreeVector>(std::move(h)));
    sugar_.push_back(sugar);
    const int k = static_cast<int>(g_.size()) - 1;
    const Term& lh = g_[k]->lead();
    reducer_.add(g_[k].get());

    struct Cand {
      int j;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (int j = 0; j < k; ++j) {
      const Term& lj = g_[j]->lead();
      if (lj.comp != lh.comp) continue;
      c.push_back(Cand{j, lcm(lh.mon, lj.mon), ideal_ && coprime(lh.mon, lj.mon)});
    }
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (divides(c[b].lcm, c[a].lcm)) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (divides(d[b].lcm, c[a].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(std::move(c[a]));
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      const Term& li = g_[p.i]->lead();
      if (li.comp == lh.comp && divides(lh.mon, p.lcm)) {
        Monomial a = lcm(li.mon, lh.mon);
        Monomial b = lcm(g_[p.j]->lead().mon, lh.mon);
        if (!(a == p.lcm) && !(b == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& cand : d) {
      if (cand.coprime) continue;
      const auto& lj = g_[cand.j]->lead().mon;
      std::int64_t deg = std::max(sugar_[cand.j] + F_.ring().degree(cand.lcm) - F_.ring().degree(lj),
                                  sugar_[k] + F_.ring().degree(cand.lcm) - F_.ring().degree(lh.mon));
      kept.push_back(Pair{cand.j, k, std::move(cand.lcm), deg});
    }
    pairs_ = std::move(kept);
  }

  std::vector<FreeVector> interreduce() {
    std::vector<const FreeVector*> kept;
    for (std::size_t i = 0; i < g_.size(); ++i) {
      const Term& li = g_[i]->lead();
      bool redundant = false;
      for (std::size_t j = 0; j < g_.size() && !redundant; ++j) {
        const Term& lj = g_[j]->lead();
        if (j == i || lj.comp != li.comp || !divides(lj.mon, li.mon)) continue;
        redundant = !(lj.mon == li.mon) || j < i;
      }
      if (!redundant) kept.push_back(g_[i].get());
    }
    Reducer red(F_);
    for (const auto* g : kept) red.add(g);
    std::vector<FreeVector> out;
    out.reserve(kept.size());
    for (const auto* g : kept) {
      FreeVector tail;
      tail.terms.assign(g->terms.begin() + 1, g->terms.end());
      FreeVector r = red.reduce_full(std::move(tail));
      FreeVector full;
      full.terms.reserve(r.size() + 1);
      full.terms.push_back(g->lead());
      for (auto& t : r.terms) full.terms.push_back(std::move(t));
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(),
              [&](const FreeVector& a, const FreeVector& b) { return F_.compare(a.lead(), b.lead()) < 0; });
    return out;
  }

  const FreeModule& F_;
  bool ideal_;
  std::vector<std::unique_ptr<FreeVector>> g_;
  std::vector<std::int64_t> sugar_;
  std::vector<Pair> pairs_;
  Reducer reducer_{F_};
};

std::vector<FreeVector> base_relation_images(const FreeModule& F) {
  std::vector<FreeVector> out;
  const auto& rels = F.ring().base_relations();
  for (int i = 0; i < F.rank(); ++i) {
    FreeVector e = F.basis(i);
    for (const auto& r : rels) out.push_back(F.mul_poly(r, e));
  }
  return out;
}

FreeVector renormalize(const FreeModule& F, const FreeVector& v) { return F.normalize(v.terms); }

}  // namespace

SubmoduleBasis groebner_basis(const SubmoduleBasis& gens) {
  if (gens.is_groebner()) return gens;
  const FreeModule& F = gens.ambient();
  const std::string key = gens.canonical();
  GroebnerCache& cache = GroebnerCache::instance();
  if (auto hit = cache.find(F, key)) return make_groebner_flagged(F, std::move(*hit));

  std::vector<FreeVector> input = gens.gens();
  for (auto& r : base_relation_images(F)) input.push_back(std::move(r));
  std::vector<FreeVector> gb = Buchberger(F).run(std::move(input));
  cache.store(F, key, gb);
  return make_groebner_flagged(F, std::move(gb));
}

FreeVector normal_form(const FreeVector& v, const SubmoduleBasis& gb) {
  if (!gb.is_groebner()) throw ContractViolation("normal form requires a Gröbner basis");
  const FreeModule& F = gb.ambient();
  Reducer red(F);
  for (const auto& g : gb.gens()) red.add(&g);
  return red.reduce_full(v);
}

bool contains(const SubmoduleBasis& u, const FreeVector& v) { return normal_form(v, u.groebner()).is_zero(); }

bool is_subset(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  if (!(a.ambient() == b.ambient())) throw ContractViolation("ambient mismatch in submodule comparison");
  const SubmoduleBasis& gb = b.groebner();
  Reducer red(gb.ambient());
  for (const auto& g : gb.gens()) red.add(&g);
  for (const auto& g : a.gens()) {
    if (!red.reduce_full(g).is_zero()) return false;
  }
  return true;
}

bool same_submodule(const SubmoduleBasis& a, const SubmoduleBasis& b) {
  if (!(a.ambient() == b.ambient())) throw ContractViolation("ambient mismatch in submodule comparison");
  const auto& ga = a.groebner().gens();
  const auto& gb = b.groebner().gens();
  if (ga.size() != gb.size()) return false;
  const FreeModule& F = a.ambient();
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (F.canonical(ga[i]) != F.canonical(gb[i])) return false;
  }
  return true;
}

bool satisfies_buchberger_criterion(const SubmoduleBasis& gb) {
  const FreeModule& F = gb.ambient();
  Reducer red(F);
  for (const auto& g : gb.gens()) red.add(&g);
  const auto& g = gb.gens();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].lead().comp != g[j].lead().comp) continue;
      if (!red.reduce_full(s_vector(F, g[i], g[j])).is_zero()) return false;
    }
  }
  return true;
}

namespace {

FreeModule combined_module(const FreeModule& target, const std::vector<int>& source_twists) {
  if (target.ring().order() == OrderKind::Eliminate) {
    throw ConfigurationError("syzygy computations need a degree order, not an elimination order");
  }
  std::vector<int> tw = target.twists();
  tw.insert(tw.end(), source_twists.begin(), source_twists.end());
  return FreeModule(target.ring_ptr(), std::move(tw), ModuleOrder::PositionOverTerm);
}

std::vector<FreeVector> tagged_images(const FreeModule& comb, const FreeModule& target,
                                      const std::vector<FreeVector>& images, const std::vector<int>& source_twists) {
  if (images.size() != source_twists.size()) throw ContractViolation("one twist per image required");
  std::vector<FreeVector> out;
  const int a = target.rank();
  for (std::size_t l = 0; l < images.size(); ++l) {
    auto d = target.homogeneous_degree(images[l]);
    if (d && *d != source_twists[l]) {
      throw ContractViolation("image degree does not match its source twist");
    }
    out.push_back(comb.add(renormalize(comb, images[l]), comb.basis(a + static_cast<int>(l))));
  }
  return out;
}

}  // namespace

SubmoduleBasis syzygies_modulo(const FreeModule& target, const std::vector<FreeVector>& images,
                               const std::vector<FreeVector>& modulo, const std::vector<int>& source_twists) {
  FreeModule comb = combined_module(target, source_twists);
  FreeModule source(target.ring_ptr(), source_twists, ModuleOrder::PositionOverTerm);
  std::vector<FreeVector> gens = tagged_images(comb, target, images, source_twists);
  for (const auto& w : modulo) gens.push_back(renormalize(comb, w));
  SubmoduleBasis gb = groebner_basis(SubmoduleBasis(comb, std::move(gens)));
  const int a = target.rank();
  const int m = static_cast<int>(images.size());
  std::vector<FreeVector> kernel;
  for (const auto& g : gb.gens()) {
    if (g.lead().comp >= a) kernel.push_back(comb.restrict_components(g, a, m));
  }
  return make_groebner_flagged(source, std::move(kernel));
}

std::vector<int> generator_degrees(const SubmoduleBasis& gens) {
  std::vector<int> out;
  for (const auto& g : gens.gens()) {
    auto d = gens.ambient().homogeneous_degree(g);
    if (!d) throw ContractViolation("generator degree undefined");
    out.push_back(static_cast<int>(*d));
  }
  return out;
}

SubmoduleBasis syzygies(const SubmoduleBasis& gens) {
  return syzygies_modulo(gens.ambient(), gens.gens(), {}, generator_degrees(gens));
}

Lifter::Lifter(const FreeModule& target, std::vector<FreeVector> gens, std::vector<FreeVector> modulo,
               std::vector<int> source_twists)
    : target_(target),
      source_(target.ring_ptr(), source_twists, ModuleOrder::PositionOverTerm),
      combined_(combined_module(target, source_twists)) {
  std::vector<FreeVector> all = tagged_images(combined_, target, gens, source_twists);
  for (const auto& w : modulo) all.push_back(renormalize(combined_, w));
  gb_ = groebner_basis(SubmoduleBasis(combined_, std::move(all)));
}

std::optional<FreeVector> Lifter::lift_vector(const FreeVector& v) const {
  FreeVector r = normal_form(renormalize(combined_, v), gb_);
  const int a = target_.rank();
  for (const auto& t : r.terms) {
    if (t.comp < a) return std::nullopt;
  }
  return source_.neg(combined_.restrict_components(r, a, source_.rank()));
}

std::optional<std::vector<FreeVector>> Lifter::lift(const FreeVector& v) const {
  auto packed = lift_vector(v);
  if (!packed) return std::nullopt;
  std::vector<std::vector<Term>> parts(source_.rank());
  for (const auto& t : packed->terms) parts[t.comp].push_back(Term{t.mon, 0, t.coeff});
  FreeModule unit = FreeModule::unit(source_.ring_ptr());
  std::vector<FreeVector> out;
  for (auto& p : parts) out.push_back(unit.normalize(std::move(p)));
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 15u];
    v >>= 4;
  }
  return s;
}

FreeVector parse_canonical_vector(const FreeModule& ambient, const std::string& text) {
  const Field& k = ambient.field();
  const std::size_t n = ambient.ring().nvars();
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto fail = [&] { throw ParseError("malformed canonical vector"); };
  while (pos < text.size()) {
    std::size_t colon = text.find(':', pos);
    std::size_t at = text.find('@', pos);
    std::size_t semi = text.find(';', pos);
    if (colon == std::string::npos || at == std::string::npos || semi == std::string::npos || !(colon < at && at < semi)) {
      fail();
    }
    std::string cs = text.substr(pos, colon - pos);
    Coeff c;
    try {
      std::size_t slash = cs.find('/');
      if (slash == std::string::npos) {
        c = k.from_int(std::stoll(cs));
      } else {
        c = k.from_fraction(std::stoll(cs.substr(0, slash)), std::stoll(cs.substr(slash + 1)));
      }
    } catch (const std::logic_error&) {
      fail();
    }
    std::vector<std::int32_t> exps;
    std::stringstream es(text.substr(colon + 1, at - colon - 1));
    std::string item;
    while (std::getline(es, item, ',')) {
      try {
        exps.push_back(static_cast<std::int32_t>(std::stol(item)));
      } catch (const std::logic_error&) {
        fail();
      }
    }
    if (exps.size() != n) fail();
    int comp = 0;
    try {
      comp = std::stoi(text.substr(at + 1, semi - at - 1));
    } catch (const std::logic_error&) {
      fail();
    }
    if (comp < 0 || comp >= ambient.rank()) fail();
    for (auto e : exps) {
      if (e < 0) fail();
    }
    terms.push_back(Term{Monomial(std::move(exps)), comp, c});
    pos = semi + 1;
  }
  return ambient.normalize(std::move(terms));
}

struct GroebnerCache::Impl {
  mutable std::mutex mu;
  std::unordered_map<std::string, std::vector<FreeVector>> memory;
  std::optional<std::string> dir;
  bool enabled = true;
  GroebnerCacheStats stats;
};

GroebnerCache& GroebnerCache::instance() {
  static GroebnerCache cache;
  return cache;
}

GroebnerCache::Impl& GroebnerCache::impl() const {
  static Impl state;
  return state;
}

void GroebnerCache::set_directory(std::optional<std::string> dir) {
  std::lock_guard<std::mutex> lock(impl().mu);
  impl().dir = std::move(dir);
}

std::optional<std::string> GroebnerCache::directory() const {
  std::lock_guard<std::mutex> lock(impl().mu);
  return impl().dir;
}

void GroebnerCache::set_enabled(bool on) {
  std::lock_guard<std::mutex> lock(impl().mu);
  impl().enabled = on;
}

bool GroebnerCache::enabled() const {
  std::lock_guard<std::mutex> lock(impl().mu);
  return impl().enabled;
}

void GroebnerCache::clear_memory() {
  std::lock_guard<std::mutex> lock(impl().mu);
  impl().memory.clear();
}

GroebnerCacheStats GroebnerCache::stats() const {
  std::lock_guard<std::mutex> lock(impl().mu);
  return impl().stats;
}

void GroebnerCache::reset_stats() {
  std::lock_guard<std::mutex> lock(impl().mu);
  impl().stats = {};
}

namespace {

constexpr const char* kDiskMagic = "cohera-gb 1";

std::string disk_body(const FreeModule& ambient, const std::string& key, const std::vector<FreeVector>& gb) {
  std::string body = std::string(kDiskMagic) + "\n" + key + "\n" + std::to_string(gb.size()) + "\n";
  for (const auto& g : gb) body += ambient.canonical(g) + "\n";
  return body;
}

std::optional<std::vector<FreeVector>> read_disk(const FreeModule& ambient, const std::string& key,
                                                 const std::string& path, bool& corrupt) {
  corrupt = false;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string content = ss.str();
  corrupt = true;
  std::size_t sum_at = content.rfind("sum ");
  if (sum_at == std::string::npos) return std::nullopt;
  std::string body = content.substr(0, sum_at);
  std::string sum = content.substr(sum_at + 4);
  while (!sum.empty() && (sum.back() == '\n' || sum.back() == '\r')) sum.pop_back();
  if (sum != hex64(fnv1a(body))) return std::nullopt;
  std::stringstream lines(body);
  std::string line;
  if (!std::getline(lines, line) || line != kDiskMagic) return std::nullopt;
  if (!std::getline(lines, line) || line != key) return std::nullopt;
  if (!std::getline(lines, line)) return std::nullopt;
  std::size_t count = 0;
  try {
    count = std::stoul(line);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
  std::vector<FreeVector> gb;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(lines, line)) return std::nullopt;
    try {
      gb.push_back(parse_canonical_vector(ambient, line));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  corrupt = false;
  return gb;
}

}  // namespace

std::optional<std::vector<FreeVector>> GroebnerCache::find(const FreeModule& ambient, const std::string& key) {
  Impl& s = impl();
  std::optional<std::string> dir;
  {
    std::lock_guard<std::mutex> lock(s.mu);
    if (!s.enabled) return std::nullopt;
    auto it = s.memory.find(key);
    if (it != s.memory.end()) {
      ++s.stats.memory_hits;
      return it->second;
    }
    dir = s.dir;
  }
  if (dir) {
    std::string path = *dir + "/" + hex64(fnv1a(key)) + ".gb";
    bool corrupt = false;
    auto gb = read_disk(ambient, key, path, corrupt);
    std::lock_guard<std::mutex> lock(s.mu);
    if (gb) {
      ++s.stats.disk_hits;
      s.memory.emplace(key, *gb);
      return gb;
    }
    if (corrupt) {
      ++s.stats.invalidated;
      std::error_code ec;
      std::filesystem::remove(path, ec);
    }
  }
  std::lock_guard<std::mutex> lock(s.mu);
  ++s.stats.misses;
  return std::nullopt;
}

void GroebnerCache::store(const FreeModule& ambient, const std::string& key, const std::vector<FreeVector>& gb) {
  Impl& s = impl();
  std::optional<std::string> dir;
  {
    std::lock_guard<std::mutex> lock(s.mu);
    if (!s.enabled) return;
    s.memory.emplace(key, gb);
    dir = s.dir;
  }
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  std::string body = disk_body(ambient, key, gb);
  std::string name = hex64(fnv1a(key));
  std::string path = *dir + "/" + name + ".gb";
  if (std::filesystem::exists(path, ec)) return;
  std::string tmp = path + ".tmp" + hex64(fnv1a(body) ^ reinterpret_cast<std::uintptr_t>(&gb));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << body << "sum " << hex64(fnv1a(body)) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace cohera
