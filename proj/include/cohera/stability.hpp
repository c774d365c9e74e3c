#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohera/fit.hpp"
#include "cohera/functor.hpp"
#include "cohera/multigraded.hpp"

namespace cohera {

/// G_n = M / I^n N (quotient family) or the strand M_n of a multigraded module (component family).
class FamilySpec {
 public:
  enum class Kind { Quotient, Component };

  /// N is given by lifts in M's ambient and must lie in U' + W'.
  static FamilySpec quotient(FPModule m, SubmoduleBasis n, IdealFamily family);
  static FamilySpec component(MultigradedModule m);

  Kind kind() const { return kind_; }
  std::size_t rank() const;
  const FPModule& m() const { return m_; }
  const SubmoduleBasis& n() const { return n_; }
  const IdealFamily& family() const { return family_; }
  const MultigradedModule& graded() const { return *graded_; }
  const RingPtr& ring() const;

 private:
  Kind kind_ = Kind::Quotient;
  FPModule m_;
  SubmoduleBasis n_;
  IdealFamily family_;
  std::shared_ptr<const MultigradedModule> graded_;
};

FPModule quotient_member(const FamilySpec& spec, const Point& n);

struct ArtinReesResult {
  Point d;
  bool certified = false;
  /// "certified" or "empirical"; a fallback carries the reason.
  std::string mode;
  std::vector<Point> generator_degrees;
  /// Points n >= d of the validation box on which the equality was checked.
  std::vector<Point> checked;
};

/// I^n M ∩ N = I^{n-d}(I^d M ∩ N) for N ⊆ M (lifts in M's ambient). The certified exponent comes
/// from the Rees module; either way equality is verified on the box (ValidationFailure if not).
ArtinReesResult artin_rees_exponent(const FPModule& m, const SubmoduleBasis& n, const IdealFamily& family,
                                    const GridBox& validation, bool certified = true);
/// Exact submodule comparison of both sides at n (n >= d).
bool artin_rees_holds(const FPModule& m, const SubmoduleBasis& n, const IdealFamily& family, const Point& d,
                      const Point& at);

/// (T, U, V, W, c, d) with F(M / I^n N) ≅ (U + I^{n-d} V) / I^{n-d} W for n >= d. U, V, Wsub are
/// lifts in T's ambient that contain phi(A1); T = B / phi(A1).
struct NormalForm {
  FPModule t;
  SubmoduleBasis phi_a1;
  SubmoduleBasis u;
  SubmoduleBasis v;
  SubmoduleBasis w;
  SubmoduleBasis a1;
  SubmoduleBasis a2;
  Point c;
  Point d;
  std::string c_mode;
  std::string d_mode;
  IdealFamily family;
  std::vector<Point> validated;

  FPModule u_module() const;
  FPModule member(const Point& n) const;
};

/// Builds the normal form and checks it against direct evaluation on every box point n >= d.
NormalForm normal_form(const CoherentFunctor& f, const FamilySpec& spec, const GridBox& validation);

struct ObservableRequest {
  bool length = true;
  bool ass = false;
  std::optional<SubmoduleBasis> grade_ideal;
  int betti_max = -1;
  int bass_max = -1;
  bool pd = false;
  bool id = false;
};

/// Projective or injective dimension value; nullopt module means zero module (-inf).
struct DimensionValue {
  enum class Kind { MinusInfinity, Finite, Infinite } kind = Kind::MinusInfinity;
  int value = 0;
  std::string to_string() const;
  friend bool operator==(const DimensionValue&, const DimensionValue&) = default;
};

struct PointObservation {
  Point n;
  std::optional<std::int64_t> length;
  std::string hilbert;
  std::optional<std::vector<PrimeIdeal>> ass;
  std::string ass_note;
  std::optional<ExtNat> grade;
  std::vector<std::int64_t> betti;
  std::vector<std::int64_t> bass;
  std::optional<DimensionValue> pd;
  std::optional<DimensionValue> id;
  std::string error;
};

struct GridTable {
  GridBox box;
  std::vector<PointObservation> points;
  RingPtr ring;

  const PointObservation& at(const Point& n) const;
  std::map<Point, std::optional<std::int64_t>> lengths() const;
};

/// Test hook: may alter an observation after it is computed (fault injection).
using ObservationHook = std::function<void(PointObservation&)>;

/// Evaluates E(G_n) on every box point; points are independent and may run on `jobs` threads,
/// the table order is always lexicographic in n.
GridTable grid_evaluate(const FunctorExpression& e, const FamilySpec& spec, const GridBox& box,
                        const ObservableRequest& obs, int jobs = 1, const ObservationHook& hook = {});

struct StabilizationVerdict {
  std::string observable;
  bool stable = false;
  std::string value;
  /// Stable on {n in box : n >= witness_lo}.
  Point witness_lo;
  Point witness_hi;
  std::string evidence = "evidence-level on box";
};

std::vector<StabilizationVerdict> detect_stabilization(const GridTable& table);

struct DegreeBoundVerdict {
  KrullDim dim_f;
  KrullDim spread;
  int r = 1;
  std::optional<int> degree;
  KrullDim bound;
  bool equality_required = false;
  bool holds = false;
  std::string to_string() const;
};

/// deg P <= max{dim F(M), l_M(I) - r}, with equality when dim F(M) > l_M(I) - r.
DegreeBoundVerdict degree_bound_check(const FunctorExpression& e, const FPModule& m, const IdealFamily& family,
                                      const FittedPolynomial& p);
/// max{dim E(M), l_M(I) - r} + 1 (at least 1) for quotient families; a variable count for components.
int default_degree_cap(const FunctorExpression& e, const FamilySpec& spec, const GridBox& box);

struct GradeAsymptotics {
  GridTable table;
  StabilizationVerdict verdict;
};
GradeAsymptotics grade_asymptotics(const SubmoduleBasis& j, const FunctorExpression& e, const FamilySpec& spec,
                                   const GridBox& box, int jobs = 1);

struct BettiBassAsymptotics {
  GridTable table;
  int depth_r = 0;
  std::vector<FitResult> betti_fits;
  std::vector<FitResult> bass_fits;
  /// max{0, l_M(I) - r} for quotient families.
  std::optional<int> degree_bound;
  bool bound_respected = true;
  std::vector<StabilizationVerdict> verdicts;
};
BettiBassAsymptotics betti_bass_asymptotics(const FunctorExpression& e, const FamilySpec& spec, const GridBox& box,
                                            int i_max, int jobs = 1);

struct ComponentTrack {
  GridTable table;
  std::vector<StabilizationVerdict> verdicts;
  FitResult fit;
};
ComponentTrack component_track(const MultigradedModule& m, const FunctorExpression& e, const GridBox& box,
                               const ObservableRequest& obs, int jobs = 1);

struct ObservableSignature {
  std::string name;
  std::vector<std::string> requires_args;
  std::string summary;
};
const std::vector<ObservableSignature>& observable_builtins();

}  // namespace cohera
