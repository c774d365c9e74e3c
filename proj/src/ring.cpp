#include "cohera/ring.hpp"

#include <algorithm>
#include <set>

#include "cohera/errors.hpp"

namespace cohera {

RingPtr Ring::make(Field field, std::vector<std::string> vars, std::vector<int> weights, OrderKind order,
                   std::vector<bool> eliminate) {
  std::shared_ptr<Ring> r(new Ring());
  r->field_ = field;
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size()) throw ContractViolation("one weight per variable required");
  for (int w : weights) {
    if (w <= 0) throw ContractViolation("variable weights must be positive");
  }
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw ContractViolation("empty variable name");
    if (!seen.insert(v).second) throw ContractViolation("duplicate variable name '" + v + "'");
  }
  if (order == OrderKind::Eliminate) {
    if (eliminate.size() != vars.size()) throw ConfigurationError("elimination mask must cover all variables");
  } else {
    eliminate.clear();
  }
  r->vars_ = std::move(vars);
  r->weights_ = std::move(weights);
  r->order_ = order;
  r->eliminate_ = std::move(eliminate);
  r->finish();
  return r;
}

RingPtr Ring::with_base_relations(std::vector<FreeVector> relations) const {
  std::shared_ptr<Ring> r(new Ring(*this));
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    std::int64_t d = degree(rel.lead().mon);
    for (const auto& t : rel.terms) {
      if (t.comp != 0) throw ContractViolation("base relation must be a polynomial");
      if (degree(t.mon) != d) throw ContractViolation("base relations must be homogeneous");
    }
    r->base_relations_.push_back(rel);
  }
  r->finish();
  return r;
}

RingPtr Ring::with_order(OrderKind order, std::vector<bool> eliminate) const {
  if (order == OrderKind::Eliminate && eliminate.size() != vars_.size()) {
    throw ConfigurationError("elimination mask must cover all variables");
  }
  std::shared_ptr<Ring> r(new Ring(*this));
  r->order_ = order;
  r->eliminate_ = order == OrderKind::Eliminate ? std::move(eliminate) : std::vector<bool>{};
  // Relations keep their terms but must be re-sorted under the new order.
  for (auto& rel : r->base_relations_) {
    std::sort(rel.terms.begin(), rel.terms.end(),
              [&](const Term& a, const Term& b) { return r->compare(a.mon, b.mon) > 0; });
  }
  r->finish();
  return r;
}

RingPtr Ring::ambient_polynomial_ring() const {
  std::shared_ptr<Ring> r(new Ring(*this));
  r->base_relations_.clear();
  r->finish();
  return r;
}

int Ring::variable_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return -1;
  return static_cast<int>(it - vars_.begin());
}

std::int64_t Ring::degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::int64_t>(weights_[i]) * m[i];
  return d;
}

std::int64_t Ring::eliminated_degree(const Monomial& m) const {
  std::int64_t d = 0;
  if (order_ != OrderKind::Eliminate) return 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (eliminate_[i]) d += static_cast<std::int64_t>(weights_[i]) * m[i];
  }
  return d;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (order_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Eliminate: {
      auto ea = eliminated_degree(a);
      auto eb = eliminated_degree(b);
      if (ea != eb) return ea > eb ? 1 : -1;
      [[fallthrough]];
    }
    case OrderKind::GRevLex: {
      auto da = degree(a);
      auto db = degree(b);
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Ring::order_tag() const {
  switch (order_) {
    case OrderKind::GRevLex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Eliminate: {
      std::string s = "elim(";
      for (bool b : eliminate_) s += b ? '1' : '0';
      return s + ")";
    }
  }
  return "?";
}

void Ring::finish() {
  tag_ = "char=" + std::to_string(field_.characteristic()) + ";vars=";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    tag_ += vars_[i] + ":" + std::to_string(weights_[i]) + ",";
  }
  tag_ += ";order=" + order_tag() + ";rels=";
  for (const auto& rel : base_relations_) {
    for (const auto& t : rel.terms) {
      tag_ += field_.canonical(t.coeff) + "*[";
      for (auto e : t.mon.exponents()) tag_ += std::to_string(e) + ",";
      tag_ += "]";
    }
    tag_ += "|";
  }
}

}  // namespace cohera
