#include "cohera/free_module.hpp"

#include <algorithm>

#include "cohera/errors.hpp"

namespace cohera {

FreeModule::FreeModule(RingPtr ring, std::vector<int> twists, ModuleOrder order)
    : ring_(std::move(ring)), twists_(std::move(twists)), order_(order) {
  if (!ring_) throw ContractViolation("free module needs a ring");
}

bool operator==(const FreeModule& a, const FreeModule& b) {
  return a.order_ == b.order_ && a.twists_ == b.twists_ && same_ring(*a.ring_, *b.ring_);
}

int FreeModule::compare_lead(const Monomial& am, int ac, const Monomial& bm, int bc) const {
  if (ring_->order() == OrderKind::Eliminate) {
    auto ea = ring_->eliminated_degree(am);
    auto eb = ring_->eliminated_degree(bm);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  if (order_ == ModuleOrder::PositionOverTerm) {
    if (ac != bc) return ac < bc ? 1 : -1;
    return ring_->compare(am, bm);
  }
  auto da = ring_->degree(am) + twists_[ac];
  auto db = ring_->degree(bm) + twists_[bc];
  if (da != db) return da > db ? 1 : -1;
  int c = ring_->compare(am, bm);
  if (c != 0) return c;
  if (ac != bc) return ac < bc ? 1 : -1;
  return 0;
}

int FreeModule::compare(const Term& a, const Term& b) const { return compare_lead(a.mon, a.comp, b.mon, b.comp); }

FreeVector FreeModule::normalize(std::vector<Term> terms) const {
  const Field& k = field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return compare(a, b) > 0; });
  FreeVector out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (t.comp < 0 || t.comp >= rank()) throw ContractViolation("component index outside ambient rank");
    if (!out.terms.empty() && out.terms.back().comp == t.comp && out.terms.back().mon == t.mon) {
      out.terms.back().coeff = k.add(out.terms.back().coeff, t.coeff);
      if (k.is_zero(out.terms.back().coeff)) out.terms.pop_back();
    } else if (!k.is_zero(t.coeff)) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

FreeVector FreeModule::basis(int i) const {
  if (i < 0 || i >= rank()) throw ContractViolation("basis index outside ambient rank");
  FreeVector v;
  v.terms.push_back(Term{Monomial(ring_->nvars()), i, field().one()});
  return v;
}

FreeVector FreeModule::monomial_vector(const Monomial& m, int comp, Coeff c) const {
  FreeVector v;
  if (!field().is_zero(c)) v.terms.push_back(Term{m, comp, c});
  return v;
}

FreeVector FreeModule::add(const FreeVector& a, const FreeVector& b) const {
  const Field& k = field();
  FreeVector out;
  out.terms.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a.terms[i], b.terms[j]);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Coeff s = k.add(a.terms[i].coeff, b.terms[j].coeff);
      if (!k.is_zero(s)) out.terms.push_back(Term{a.terms[i].mon, a.terms[i].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

FreeVector FreeModule::neg(const FreeVector& a) const {
  FreeVector out = a;
  for (auto& t : out.terms) t.coeff = field().neg(t.coeff);
  return out;
}

FreeVector FreeModule::sub(const FreeVector& a, const FreeVector& b) const { return add(a, neg(b)); }

FreeVector FreeModule::scale(const FreeVector& a, const Coeff& c) const {
  if (field().is_zero(c)) return {};
  FreeVector out = a;
  for (auto& t : out.terms) t.coeff = field().mul(t.coeff, c);
  return out;
}

FreeVector FreeModule::mul_term(const FreeVector& a, const Coeff& c, const Monomial& m) const {
  if (field().is_zero(c)) return {};
  FreeVector out;
  out.terms.reserve(a.size());
  // Multiplication by a monomial preserves the (multiplicative) order.
  for (const auto& t : a.terms) out.terms.push_back(Term{t.mon * m, t.comp, field().mul(t.coeff, c)});
  return out;
}

FreeVector FreeModule::sub_multiple(const FreeVector& a, const Coeff& c, const Monomial& m,
                                    const FreeVector& b) const {
  const Field& k = field();
  FreeVector out;
  out.terms.reserve(a.size() + b.size());
  Coeff nc = k.neg(c);
  std::size_t i = 0, j = 0;
  Term scaled;
  auto scaled_term = [&](std::size_t idx) {
    const Term& t = b.terms[idx];
    return Term{t.mon * m, t.comp, k.mul(t.coeff, nc)};
  };
  bool have = false;
  while (i < a.size() && j < b.size()) {
    if (!have) {
      scaled = scaled_term(j);
      have = true;
    }
    int cmp = compare(a.terms[i], scaled);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back(std::move(scaled));
      ++j;
      have = false;
    } else {
      Coeff s = k.add(a.terms[i].coeff, scaled.coeff);
      if (!k.is_zero(s)) out.terms.push_back(Term{a.terms[i].mon, a.terms[i].comp, s});
      ++i;
      ++j;
      have = false;
    }
  }
  for (; i < a.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.size(); ++j) out.terms.push_back(scaled_term(j));
  return out;
}

FreeVector FreeModule::mul_poly(const FreeVector& poly, const FreeVector& v) const {
  std::vector<Term> terms;
  terms.reserve(poly.size() * v.size());
  for (const auto& p : poly.terms) {
    for (const auto& t : v.terms) terms.push_back(Term{t.mon * p.mon, t.comp, field().mul(t.coeff, p.coeff)});
  }
  return normalize(std::move(terms));
}

FreeVector FreeModule::make_monic(const FreeVector& a) const {
  if (a.is_zero() || field().is_one(a.lead().coeff)) return a;
  return scale(a, field().inv(a.lead().coeff));
}

std::optional<std::int64_t> FreeModule::homogeneous_degree(const FreeVector& v) const {
  if (v.is_zero()) return std::nullopt;
  std::int64_t d = degree(v.lead());
  for (const auto& t : v.terms) {
    if (degree(t) != d) return std::nullopt;
  }
  return d;
}

FreeVector FreeModule::convert(const FreeVector& v) const { return normalize(v.terms); }

FreeVector FreeModule::shift_components(const FreeVector& v, int offset) const {
  std::vector<Term> terms = v.terms;
  for (auto& t : terms) t.comp += offset;
  return normalize(std::move(terms));
}

FreeVector FreeModule::restrict_components(const FreeVector& v, int offset, int width) const {
  std::vector<Term> terms;
  for (const auto& t : v.terms) {
    if (t.comp >= offset && t.comp < offset + width) terms.push_back(Term{t.mon, t.comp - offset, t.coeff});
  }
  return normalize(std::move(terms));
}

FreeModule FreeModule::direct_sum(const FreeModule& other) const {
  std::vector<int> tw = twists_;
  tw.insert(tw.end(), other.twists_.begin(), other.twists_.end());
  return FreeModule(ring_, std::move(tw), order_);
}

FreeModule FreeModule::shifted(int s) const {
  std::vector<int> tw = twists_;
  for (auto& t : tw) t += s;
  return FreeModule(ring_, std::move(tw), order_);
}

FreeModule FreeModule::power(const std::vector<int>& shifts) const {
  std::vector<int> tw;
  tw.reserve(shifts.size() * twists_.size());
  for (int s : shifts) {
    for (int t : twists_) tw.push_back(t + s);
  }
  return FreeModule(ring_, std::move(tw), order_);
}

std::string FreeModule::to_string(const FreeVector& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& t : v.terms) {
    std::string c = field().to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string m = ring_->monomial_string(t.mon);
    if (m == "1") {
      out += c;
    } else if (c == "1") {
      out += m;
    } else {
      out += c + "*" + m;
    }
    if (rank() > 1) out += "*e" + std::to_string(t.comp);
  }
  return out;
}

std::string FreeModule::canonical(const FreeVector& v) const {
  std::string out;
  for (const auto& t : v.terms) {
    out += field().canonical(t.coeff) + ":";
    for (std::size_t i = 0; i < t.mon.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(t.mon[i]);
    }
    out += "@" + std::to_string(t.comp) + ";";
  }
  return out;
}

std::string FreeModule::tag() const {
  std::string s = ring_->tag() + ";module=";
  s += order_ == ModuleOrder::PositionOverTerm ? "pot" : "top";
  s += "[";
  for (int t : twists_) s += std::to_string(t) + ",";
  return s + "]";
}

}  // namespace cohera
