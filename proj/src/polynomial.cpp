#include "cohera/polynomial.hpp"

#include <cctype>
#include <limits>

#include "cohera/errors.hpp"

namespace cohera {

Polynomial Polynomial::constant(const RingPtr& ring, const Coeff& c) {
  FreeModule u = FreeModule::unit(ring);
  return Polynomial(ring, u.monomial_vector(Monomial(ring->nvars()), 0, c));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  FreeModule u = FreeModule::unit(ring);
  return Polynomial(ring, u.monomial_vector(Monomial::variable(ring->nvars(), index), 0, ring->field().one()));
}

bool Polynomial::is_homogeneous() const { return unit().is_homogeneous(v_); }

std::int64_t Polynomial::degree() const {
  auto d = unit().homogeneous_degree(v_);
  return d ? *d : -1;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, ring_->field().one());
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return Polynomial(a.ring_, a.unit().add(a.v_, b.v_)); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return Polynomial(a.ring_, a.unit().sub(a.v_, b.v_)); }
Polynomial operator-(const Polynomial& a) { return Polynomial(a.ring_, a.unit().neg(a.v_)); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return Polynomial(a.ring_, a.unit().mul_poly(a.v_, b.v_));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.v_.size() != b.v_.size()) return false;
  for (std::size_t i = 0; i < a.v_.size(); ++i) {
    const auto& s = a.v_.terms[i];
    const auto& t = b.v_.terms[i];
    if (!(s.mon == t.mon) || !(s.coeff == t.coeff)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const { return unit().to_string(v_); }

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial \"" + std::string(text_) + "\": " + msg + " at column " + std::to_string(pos_ + 1), 1,
                     static_cast<int>(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        Coeff inv = ring_->field().inv(d.vec().lead().coeff);
        acc = acc * Polynomial::constant(ring_, inv);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::int64_t k = integer();
      if (k < 0) fail("negative exponent");
      if (k > Monomial::kMaxExponent) throw ArithmeticError("exponent too large in polynomial literal");
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int d = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail("integer literal overflow");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, ring_->field().from_int(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->variable_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace cohera
