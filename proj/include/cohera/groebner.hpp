#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohera/free_module.hpp"

namespace cohera {

/// Generators of a submodule of a graded free module, taken modulo the base relations
/// of the ring (I0 * ambient). Copies share a lazily computed reduced Gröbner basis.
/// Inhomogeneous generators are accepted here; graded constructions reject them.
class SubmoduleBasis {
 public:
  SubmoduleBasis() = default;
  SubmoduleBasis(FreeModule ambient, std::vector<FreeVector> gens);

  static SubmoduleBasis zero(const FreeModule& ambient) { return SubmoduleBasis(ambient, {}); }
  static SubmoduleBasis whole(const FreeModule& ambient);

  const FreeModule& ambient() const { return ambient_; }
  const std::vector<FreeVector>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_groebner() const { return groebner_; }
  bool homogeneous() const { return homogeneous_; }

  /// Reduced Gröbner basis (including the base relations), computed once.
  const SubmoduleBasis& groebner() const;

  std::string canonical() const;

 private:
  friend SubmoduleBasis make_groebner_flagged(FreeModule ambient, std::vector<FreeVector> gb);
  struct Lazy;

  FreeModule ambient_;
  std::vector<FreeVector> gens_;
  bool groebner_ = false;
  bool homogeneous_ = true;
  std::shared_ptr<Lazy> lazy_;
};

/// Wraps vectors known to form a reduced Gröbner basis (of a submodule containing I0 * ambient).
SubmoduleBasis make_groebner_flagged(FreeModule ambient, std::vector<FreeVector> gb);

SubmoduleBasis groebner_basis(const SubmoduleBasis& gens);

/// Unique fully reduced remainder; requires a Gröbner-flagged basis.
FreeVector normal_form(const FreeVector& v, const SubmoduleBasis& gb);
bool contains(const SubmoduleBasis& u, const FreeVector& v);
bool is_subset(const SubmoduleBasis& a, const SubmoduleBasis& b);
bool same_submodule(const SubmoduleBasis& a, const SubmoduleBasis& b);
/// Buchberger criterion: every S-vector of the basis reduces to zero.
bool satisfies_buchberger_criterion(const SubmoduleBasis& gb);

/// Kernel of R(-s_1)+...+R(-s_m) -> target/modulo, e_l -> images[l]. The result is a Gröbner
/// basis of the kernel plus I0 * source.
SubmoduleBasis syzygies_modulo(const FreeModule& target, const std::vector<FreeVector>& images,
                               const std::vector<FreeVector>& modulo, const std::vector<int>& source_twists);
/// Full syzygy module of the generators (source twists = generator degrees).
SubmoduleBasis syzygies(const SubmoduleBasis& gens);
/// Degree of each generator; zero generators are rejected.
std::vector<int> generator_degrees(const SubmoduleBasis& gens);

/// Expresses vectors of a submodule (modulo an optional extra submodule) in its generators.
class Lifter {
 public:
  Lifter(const FreeModule& target, std::vector<FreeVector> gens, std::vector<FreeVector> modulo,
         std::vector<int> source_twists);
  /// Coefficients c with v = sum c_l gens[l] modulo (modulo + I0), or nullopt when v is outside.
  std::optional<std::vector<FreeVector>> lift(const FreeVector& v) const;
  /// Same as lift, packed as one vector of the source free module.
  std::optional<FreeVector> lift_vector(const FreeVector& v) const;
  const FreeModule& source() const { return source_; }

 private:
  FreeModule target_;
  FreeModule source_;
  FreeModule combined_;
  SubmoduleBasis gb_;
};

struct GroebnerCacheStats {
  std::uint64_t memory_hits = 0;
  std::uint64_t disk_hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t invalidated = 0;
};

/// Process-wide content-addressed store of reduced bases. Advisory: a bad disk entry is dropped.
class GroebnerCache {
 public:
  static GroebnerCache& instance();

  void set_directory(std::optional<std::string> dir);
  std::optional<std::string> directory() const;
  void set_enabled(bool on);
  bool enabled() const;
  void clear_memory();
  GroebnerCacheStats stats() const;
  void reset_stats();

  std::optional<std::vector<FreeVector>> find(const FreeModule& ambient, const std::string& key);
  void store(const FreeModule& ambient, const std::string& key, const std::vector<FreeVector>& gb);

 private:
  GroebnerCache() = default;
  struct Impl;
  Impl& impl() const;
};

/// 64-bit FNV-1a, used for content addresses and checksums.
std::uint64_t fnv1a(const std::string& text);
std::string hex64(std::uint64_t v);

/// Parses FreeModule::canonical output back into a vector of `ambient`.
FreeVector parse_canonical_vector(const FreeModule& ambient, const std::string& text);

}  // namespace cohera
