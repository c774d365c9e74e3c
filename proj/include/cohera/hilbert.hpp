#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohera/groebner.hpp"

namespace cohera {

/// Dimension sentinel: nullopt stands for the dimension of the zero module, below every integer.
using KrullDim = std::optional<int>;
std::string dim_to_string(const KrullDim& d);
/// max with the zero-module sentinel ordered below every integer.
KrullDim dim_max(const KrullDim& a, const KrullDim& b);

/// Graded Hilbert series N(t) / prod_j (1 - t^{w_j}) with an integer Laurent numerator.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(std::map<int, std::int64_t> numerator, std::vector<int> weights);

  const std::map<int, std::int64_t>& numerator() const { return num_; }
  const std::vector<int>& weights() const { return weights_; }
  bool is_zero() const { return num_.empty(); }

  /// Strand dimensions for degrees lo..hi inclusive.
  std::vector<std::int64_t> values(int lo, int hi) const;
  std::int64_t value(int d) const { return values(d, d).front(); }
  KrullDim krull_dim() const;
  /// Total dimension, nullopt when infinite.
  std::optional<std::int64_t> length() const;
  /// Lowest degree of a nonzero strand (for the zero series: 0).
  int initial_degree() const;
  /// Degrees outside [initial_degree, support_end) vanish when the module has finite length;
  /// otherwise this is a degree beyond which the Hilbert function is a quasi-polynomial.
  int support_end() const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.num_ == b.num_ && a.weights_ == b.weights_;
  }
  HilbertSeries shifted(int s) const;

  std::string to_string() const;

 private:
  std::map<int, std::int64_t> num_;
  std::vector<int> weights_;
};

/// Numerator of S/J for a monomial ideal J of k[x_1..x_n] with variable weights.
std::map<int, std::int64_t> monomial_numerator(const std::vector<int>& weights, std::vector<Monomial> gens);

/// Series of F/U, read off the leading terms of a Gröbner basis of U (plus I0).
HilbertSeries quotient_series(const SubmoduleBasis& u);

/// Removes non-minimal generators and duplicates.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);
/// True when every element of the reduced Gröbner basis is a monomial.
bool is_monomial_submodule(const SubmoduleBasis& gb);

/// Variable index sets of the minimal primes of a monomial ideal (sorted, deduplicated).
std::vector<std::vector<int>> monomial_minimal_primes(std::size_t nvars, std::vector<Monomial> gens);
/// Variable index sets of Ass(S/J) for a monomial ideal J (via irreducible decomposition).
std::vector<std::vector<int>> monomial_associated_primes(std::size_t nvars, std::vector<Monomial> gens);

}  // namespace cohera
