#pragma once

#include <string>
#include <vector>

#include "cohera/groebner.hpp"
#include "cohera/polynomial.hpp"

namespace testing_helpers {

using namespace cohera;

inline RingPtr ring_xy(Field k = Field()) { return Ring::make(k, {"x", "y"}); }

inline FreeVector poly(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s).vec(); }

inline SubmoduleBasis ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<FreeVector> v;
  for (const auto& g : gens) v.push_back(poly(r, g));
  return SubmoduleBasis(FreeModule::unit(r), std::move(v));
}

inline std::vector<std::string> strings(const SubmoduleBasis& s) {
  std::vector<std::string> out;
  for (const auto& g : s.gens()) out.push_back(s.ambient().to_string(g));
  return out;
}

}  // namespace testing_helpers
