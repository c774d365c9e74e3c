#include "scenario.hpp"

#include <algorithm>
#include <set>

#include "cohera/errors.hpp"
#include "cohera/polynomial.hpp"

namespace cohera::runner {

ScenarioError::ScenarioError(const std::string& block, const std::string& what, int line, int column)
    : std::runtime_error(what), block_(block), line_(line), column_(column) {}

namespace {

const std::set<std::string> kTaskKinds = {"normal_form", "stabilization", "fit",           "degree_bound",
                                          "grade",       "betti_bass",    "component_track", "artin_rees"};
const std::set<std::string> kQuotientOnly = {"normal_form", "degree_bound", "artin_rees"};

[[noreturn]] void fail(const std::string& block, const std::string& what) { throw ScenarioError(block, what); }

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& require(const json& obj, const char* key, const std::string& block) {
  if (!obj.is_object() || !obj.contains(key)) fail(block, "missing field \"" + std::string(key) + "\"");
  return obj.at(key);
}

int as_int(const json& v, const std::string& block, const std::string& what) {
  if (!v.is_number_integer()) fail(block, what + " must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const std::string& block, const std::string& what) {
  if (!v.is_array()) fail(block, what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, block, what));
  return out;
}

std::string as_string(const json& v, const std::string& block, const std::string& what) {
  if (!v.is_string()) fail(block, what + " must be a string");
  return v.get<std::string>();
}

class Loader {
 public:
  Loader(const json& doc, const std::string& text, const RunOptions& options)
      : doc_(doc), text_(text), options_(options) {}

  Scenario load() {
    Scenario s;
    s.source = doc_;
    if (!doc_.is_object()) fail("scenario", "top level must be an object");
    if (!doc_.contains("format") || doc_.at("format") != kScenarioFormat)
      fail("format", "expected \"format\": \"" + std::string(kScenarioFormat) + "\"");
    if (doc_.contains("name")) s.name = as_string(doc_.at("name"), "name", "name");
    load_ring(s);
    load_ideals(s);
    load_modules(s);
    s.functor = doc_.contains("functor") ? load_functor(doc_.at("functor"), "functor")
                                         : FunctorExpression::leaf(identity_functor(s.ring));
    load_family(s);
    load_box(s);
    load_tasks(s);
    load_output(s);
    return s;
  }

 private:
  void load_ring(Scenario& s) {
    const json& r = require(doc_, "ring", "scenario");
    std::uint32_t p = Field::kDefaultPrime;
    if (r.contains("characteristic")) {
      const json& c = r.at("characteristic");
      if (!c.is_number_unsigned()) fail("ring", "characteristic must be 0 or a prime");
      p = c.get<std::uint32_t>();
    }
    if (options_.characteristic) p = *options_.characteristic;
    if (p != 0 && !is_prime(p)) fail("ring", "characteristic " + std::to_string(p) + " is not prime");
    Field k = p == 0 ? Field::rationals() : Field::prime(p);

    const json& vars = require(r, "variables", "ring");
    if (!vars.is_array() || vars.empty()) fail("ring", "variables must be a nonempty array");
    std::vector<std::string> names;
    for (const auto& v : vars) names.push_back(as_string(v, "ring", "variable"));
    std::vector<int> weights;
    if (r.contains("weights")) weights = int_list(r.at("weights"), "ring", "weights");
    try {
      ring_ = Ring::make(k, names, weights);
      if (r.contains("base_relations")) {
        std::vector<FreeVector> rels;
        for (const auto& g : r.at("base_relations")) rels.push_back(parse(g, "ring", "base_relations"));
        ring_ = ring_->with_base_relations(std::move(rels));
      }
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      fail("ring", e.what());
    }
    s.ring = ring_;
  }

  FreeVector parse(const json& text, const std::string& block, const std::string& where) {
    std::string str = as_string(text, block, where + " entry");
    try {
      return parse_polynomial(ring_, str).vec();
    } catch (const ParseError& e) {
      // Locate the literal in the source so the error carries a file position.
      std::size_t at = text_.find(json(str).dump());
      if (at == std::string::npos) throw ScenarioError(block, where + ": " + e.what(), 0, e.column());
      auto [line, column] = line_column(text_, at + 1 + static_cast<std::size_t>(e.column()));
      throw ScenarioError(block, where + ": " + e.what(), line, column);
    }
  }

  FreeVector parse_vector(const FreeModule& F, const json& entries, const std::string& block,
                          const std::string& where) {
    if (!entries.is_array() || static_cast<int>(entries.size()) != F.rank())
      fail(block, where + " must list " + std::to_string(F.rank()) + " components");
    FreeVector out;
    for (int i = 0; i < F.rank(); ++i) {
      FreeVector c = parse(entries[static_cast<std::size_t>(i)], block, where);
      std::vector<Term> terms;
      for (const auto& t : c.terms) terms.push_back(Term{t.mon, i, t.coeff});
      out = F.add(out, F.normalize(std::move(terms)));
    }
    return out;
  }

  SubmoduleBasis ideal_of(const json& spec, const std::string& block) {
    if (spec.is_string()) {
      auto it = ideals_.find(spec.get<std::string>());
      if (it == ideals_.end()) fail(block, "unknown ideal \"" + spec.get<std::string>() + "\"");
      return it->second;
    }
    if (!spec.is_array()) fail(block, "ideal must be a name or a generator list");
    std::vector<FreeVector> gens;
    for (const auto& g : spec) gens.push_back(parse(g, block, "generator"));
    try {
      return SubmoduleBasis(FreeModule::unit(ring_), std::move(gens));
    } catch (const ContractViolation& e) {
      fail(block, e.what());
    }
  }

  void load_ideals(Scenario& s) {
    if (!doc_.contains("ideals")) return;
    const json& ideals = doc_.at("ideals");
    if (!ideals.is_object()) fail("ideals", "must be an object of named generator lists");
    for (const auto& [name, gens] : ideals.items()) {
      if (!gens.is_array()) fail("ideals", "ideal \"" + name + "\" must be a generator list");
      ideals_.emplace(name, ideal_of(gens, "ideals"));
    }
    s.ideals = ideals_;
  }

  FPModule build_module(const std::string& name, const json& m) {
    const std::string block = "modules";
    std::string kind = as_string(require(m, "kind", block), block, "module \"" + name + "\" kind");
    auto ambient = [&]() {
      std::vector<int> twists = m.contains("twists") ? int_list(m.at("twists"), block, "twists") : std::vector<int>{0};
      return FreeModule(ring_, twists);
    };
    auto vectors = [&](const FreeModule& F, const char* key) {
      std::vector<FreeVector> out;
      if (!m.contains(key)) return out;
      for (const auto& v : m.at(key)) out.push_back(parse_vector(F, v, block, "module \"" + name + "\" " + key));
      return out;
    };
    if (kind == "free") return FPModule::free(ambient());
    if (kind == "residue_field") return residue_field(ring_);
    if (kind == "quotient") return FPModule::quotient_ring(ideal_of(require(m, "ideal", block), block));
    if (kind == "ideal") return FPModule::submodule(ideal_of(require(m, "ideal", block), block));
    if (kind == "cokernel") {
      FreeModule F = ambient();
      return FPModule::cokernel(F, vectors(F, "relations"));
    }
    if (kind == "subquotient") {
      FreeModule F = ambient();
      return FPModule::subquotient(SubmoduleBasis(F, vectors(F, "generators")), SubmoduleBasis(F, vectors(F, "relations")));
    }
    fail(block, "module \"" + name + "\" has unknown kind \"" + kind + "\"");
  }

  void load_modules(Scenario& s) {
    modules_.emplace("R", FPModule::free(FreeModule::unit(ring_)));
    if (doc_.contains("modules")) {
      const json& mods = doc_.at("modules");
      if (!mods.is_object()) fail("modules", "must be an object of named presentations");
      for (const auto& [name, m] : mods.items()) {
        try {
          modules_.insert_or_assign(name, build_module(name, m));
        } catch (const ScenarioError&) {
          throw;
        } catch (const std::exception& e) {
          fail("modules", "module \"" + name + "\": " + e.what());
        }
      }
    }
    s.modules = modules_;
  }

  const FPModule& module_named(const json& v, const std::string& block) {
    std::string name = as_string(v, block, "module reference");
    auto it = modules_.find(name);
    if (it == modules_.end()) fail(block, "unknown module \"" + name + "\"");
    return it->second;
  }

  FunctorExpression load_functor(const json& f, const std::string& block) {
    if (f.is_string()) {
      if (f == "identity") return FunctorExpression::leaf(identity_functor(ring_));
      fail(block, "functor must be an object with a \"builder\"");
    }
    std::string builder = as_string(require(f, "builder", block), block, "builder");
    if (builder == "identity") return FunctorExpression::leaf(identity_functor(ring_));
    if (builder == "compose") {
      if (f.contains("args")) {
        const json& a = f.at("args");
        if (!a.is_array() || a.size() != 2) fail(block, "compose takes (functor, functor)");
        return FunctorExpression::compose(load_functor(a[0], block), load_functor(a[1], block));
      }
      return FunctorExpression::compose(load_functor(require(f, "outer", block), block),
                                        load_functor(require(f, "inner", block), block));
    }
    const FPModule& m = module_named(require(f, "module", block), block);
    const std::string arg = f.at("module").get<std::string>();
    try {
      if (builder == "hom") return FunctorExpression::leaf(functor_from_hom(m).relabeled("hom(" + arg + ")"));
      if (builder == "tensor") return FunctorExpression::leaf(functor_from_tensor(m).relabeled("tensor(" + arg + ")"));
      if (builder == "ext" || builder == "tor") {
        int i = as_int(require(f, "i", block), block, "i");
        if (i < 0) fail(block, builder + " index must be >= 0");
        CoherentFunctor g = builder == "ext" ? functor_from_ext(m, i) : functor_from_tor(m, i);
        return FunctorExpression::leaf(g.relabeled(builder + "(" + arg + ", " + std::to_string(i) + ")"));
      }
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      fail(block, builder + ": " + e.what());
    }
    fail(block, "unknown builder \"" + builder + "\"");
  }

  void load_family(Scenario& s) {
    const std::string block = "family";
    const json& f = require(doc_, "family", "scenario");
    std::string kind = as_string(require(f, "kind", block), block, "kind");
    const json& names = require(f, "ideals", block);
    if (!names.is_array() || names.empty()) fail(block, "ideals must be a nonempty list");
    std::vector<SubmoduleBasis> ideals;
    for (const auto& n : names) {
      ideals.push_back(ideal_of(n, block));
      s.family_ideals.push_back(n.is_string() ? n.get<std::string>() : n.dump());
    }
    IdealFamily family(ideals);
    try {
      if (kind == "quotient") {
        const FPModule& m = module_named(require(f, "module", block), block);
        SubmoduleBasis n = m.gens();
        if (f.contains("submodule")) {
          const json& sub = f.at("submodule");
          if (sub.is_string() && sub == f.at("module")) {
            n = m.gens();
          } else if (sub.is_object() && sub.contains("ideal")) {
            n = ideal_times(ideal_of(sub.at("ideal"), block), m);
          } else if (sub.is_object() && sub.contains("vectors")) {
            std::vector<FreeVector> vs;
            for (const auto& v : sub.at("vectors")) vs.push_back(parse_vector(m.ambient(), v, block, "submodule vector"));
            n = SubmoduleBasis(m.ambient(), std::move(vs));
          } else {
            fail(block, "submodule must be the module name, {\"ideal\": J} or {\"vectors\": [...]}");
          }
        }
        s.family = FamilySpec::quotient(m, n, family);
      } else if (kind == "component") {
        bool truncate = f.contains("truncate") && f.at("truncate").get<bool>();
        if (truncate) {
          s.family = FamilySpec::component(truncation_module(rees_algebra(family)));
        } else if (f.contains("module")) {
          s.family = FamilySpec::component(rees_module(module_named(f.at("module"), block), family));
        } else {
          s.family = FamilySpec::component(algebra_as_module(rees_algebra(family)));
        }
      } else {
        fail(block, "kind must be \"quotient\" or \"component\"");
      }
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      fail(block, e.what());
    }
  }

  void load_box(Scenario& s) {
    const std::string block = "box";
    const json& b = require(doc_, "box", "scenario");
    s.box.lo = int_list(require(b, "lo", block), block, "lo");
    s.box.hi = int_list(require(b, "hi", block), block, "hi");
    if (b.contains("shell")) s.box.shell = as_int(b.at("shell"), block, "shell");
    if (s.box.lo.size() != s.family.rank())
      fail(block, "box rank " + std::to_string(s.box.lo.size()) + " does not match family rank " +
                      std::to_string(s.family.rank()));
    try {
      s.box.validate();
    } catch (const ContractViolation& e) {
      fail(block, e.what());
    }
  }

  void load_tasks(Scenario& s) {
    const std::string block = "tasks";
    const json& tasks = require(doc_, "tasks", "scenario");
    if (!tasks.is_array()) fail(block, "must be a list");
    for (const auto& t : tasks) {
      TaskSpec spec;
      if (t.is_string()) {
        spec.kind = t.get<std::string>();
      } else {
        spec.kind = as_string(require(t, "task", block), block, "task");
        spec.args = t;
      }
      if (!kTaskKinds.count(spec.kind)) fail(block, "unknown task \"" + spec.kind + "\"");
      if (kQuotientOnly.count(spec.kind) && s.family.kind() != FamilySpec::Kind::Quotient)
        fail(block, spec.kind + " needs a quotient family");
      if (spec.kind == "component_track" && s.family.kind() != FamilySpec::Kind::Component)
        fail(block, "component_track needs a component family");
      if (spec.kind == "normal_form" && !s.functor.is_leaf()) fail(block, "normal_form needs a single functor");
      if (spec.kind == "grade" && !spec.args.contains("ideal")) fail(block, "grade requires \"ideal\"");
      if (spec.args.contains("ideal")) ideal_of(spec.args.at("ideal"), block);
      s.tasks.push_back(std::move(spec));
    }
  }

  void load_output(Scenario& s) {
    if (!doc_.contains("output")) return;
    const json& o = doc_.at("output");
    if (!o.is_object()) fail("output", "must be an object");
    auto flag = [&](const char* key, bool& dst) {
      if (!o.contains(key)) return;
      if (!o.at(key).is_boolean()) fail("output", std::string(key) + " must be true or false");
      dst = o.at(key).get<bool>();
    };
    flag("json", s.output.json);
    flag("markdown", s.output.markdown);
    flag("csv", s.output.csv);
    if (o.contains("stem")) s.output.stem = as_string(o.at("stem"), "output", "stem");
  }

  const json& doc_;
  const std::string& text_;
  const RunOptions& options_;
  RingPtr ring_;
  std::map<std::string, SubmoduleBasis> ideals_;
  std::map<std::string, FPModule> modules_;
};

}  // namespace

Scenario load_scenario(const std::string& text, const RunOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw ScenarioError("syntax", e.what(), line, column);
  }
  return Loader(doc, text, options).load();
}

void print_builtins(std::ostream& out) {
  out << "functor builders:\n";
  out << "  identity()  the identity functor\n";
  for (const auto& b : functor_builtins()) {
    out << "  " << b.name << "(";
    for (std::size_t i = 0; i < b.arguments.size(); ++i) out << (i ? ", " : "") << b.arguments[i];
    out << ")  " << b.summary << "\n";
  }
  out << "observables:\n";
  for (const auto& o : observable_builtins()) {
    out << "  " << o.name;
    if (!o.requires_args.empty()) {
      out << " [requires ";
      for (std::size_t i = 0; i < o.requires_args.size(); ++i) out << (i ? ", " : "") << o.requires_args[i];
      out << "]";
    }
    out << "  " << o.summary << "\n";
  }
  out << "tasks:\n";
  for (const auto& t : kTaskKinds) out << "  " << t << "\n";
  out << "strategies:\n"
         "  groebner        Buchberger with sugar selection, content-addressed cache\n"
         "  ass             monomial irreducible decomposition, then Ext annihilator criterion, else refusal\n"
         "  artin_rees      certified from Rees module generators, empirical search as fallback\n"
         "  grade           minimal nonvanishing Ext index up to the resolution cap\n"
         "  fit             exact Newton interpolation validated on the held-out shell\n";
  out << "defaults:\n"
      << "  characteristic  " << Field::kDefaultPrime << "\n"
      << "  jobs            1\n"
      << "  shell           1\n"
      << "  resolution cap  " << kResolutionCap << "\n"
      << "  degree cap      max{dim E(M), l_M(I) - r} + 1 (quotient), variable count (component)\n"
      << "  cache dir       $" << kCacheEnv << ", else $HOME/.cache/cohera\n";
}

}  // namespace cohera::runner
