#ifndef IPM_CONDITIONING_HPP
#define IPM_CONDITIONING_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ipm/capacity.hpp"
#include "ipm/measure.hpp"
#include "ipm/rational.hpp"
#include "ipm/space.hpp"

namespace ipm {

struct ConditionalOptions {
  /// Accept P(H) = 0 as long as the normalizer P(H) + E[r I_{H_ind}] is
  /// positive. Off by default: conditioning requires P(H) > 0.
  bool allow_null_condition = false;
};

/// Q_r(A|H) with
///   lo = (P(A n H) + E[r I_{A n H_ind}]) / D,
///   hi = E[(I_A + r I_{A_ind})(I_H + r I_{H_ind})] / D,
/// D = P(H) + E[r I_{H_ind}]. For r = 1 this is
/// [P(A | (H_w^c)^c), P((A_w^c)^c | (H_w^c)^c)].
/// Throws PreconditionError if P(H) = 0 (or D = 0 under allow_null_condition).
Interval conditional_interval(const ProbabilityMeasure& p, const UncertaintyDegree& r, const Event& a,
                              const Event& h, ConditionalOptions options = {});

/// Dempster-Shafer rule (nu((A n H) u H^c) - nu(H^c)) / (1 - nu(H^c)).
/// Throws PreconditionError if nu(H^c) = 1.
Rational ds_conditional(const Capacity& nu, const Event& a, const Event& h);

/// The same rule with H^c replaced by the weak complement:
/// (nu(A u H_w^c) - nu(H_w^c)) / (1 - nu(H_w^c)).
/// Throws PreconditionError if nu(H_w^c) = 1.
Rational ds_conditional_weak(const Capacity& nu, const Event& a, const Event& h);

/// The functionals behind the capacity conditionals, for a fixed (nu, r, H):
///   I(B) = integral over t of nu(B n (H u (H_ind n {r >= t}))),
///   J(B) = integral over t of nu(B n (H u H_ind) n {r >= t}).
class ConditionalFunctionals {
 public:
  /// Throws PreconditionError if nu(H) = 0.
  ConditionalFunctionals(Capacity nu, const UncertaintyDegree& r, const Event& h);

  const Capacity& capacity() const { return nu_; }
  const Event& condition() const { return h_; }

  Rational i(const Event& b) const;
  Rational j(const Event& b) const;
  /// I(Omega).
  const Rational& normalizer() const { return normalizer_; }
  /// Super-additivity of nu, when |Omega| is small enough to sweep.
  std::optional<bool> superadditive() const { return superadditive_; }

 private:
  Capacity nu_;
  Event h_;
  Mask h_bits_ = 0;
  Mask ind_bits_ = 0;
  std::vector<std::pair<Rational, Mask>> strata_;
  Rational normalizer_;
  std::optional<bool> superadditive_;
};

/// Output of the capacity conditionals. This construction is tentative: it is
/// a partial proposal rather than a settled notion of conditioning, and every
/// result says so through `provenance`.
struct TentativeInterval {
  static constexpr std::string_view provenance = "tentative";

  Interval value;
  /// The raw right endpoint exceeded 1.
  bool clamped = false;
  /// Unset when |Omega| is too large for the super-additivity sweep.
  std::optional<bool> superadditive;

  /// The capacity is known not to be super-additive, which the construction
  /// assumes.
  bool warning() const { return superadditive.has_value() && !*superadditive; }
};

/// [I(A)/I(Omega), (I(A) + J(A_ind))/I(Omega)], clamped to [0, 1].
TentativeInterval capacity_conditional(const ConditionalFunctionals& f, const Event& a);
TentativeInterval capacity_conditional(const Capacity& nu, const UncertaintyDegree& r, const Event& a,
                                       const Event& h);

/// [I(A)/I(Omega), (I(A) + I(A_ind))/I(Omega)], clamped to [0, 1]. Sits
/// between capacity_conditional and capacity_conditional_prime for
/// super-additive nu.
TentativeInterval capacity_conditional_widened(const ConditionalFunctionals& f, const Event& a);
TentativeInterval capacity_conditional_widened(const Capacity& nu, const UncertaintyDegree& r, const Event& a,
                                               const Event& h);

/// [I(A)/I(Omega), I((A_w^c)^c)/I(Omega)].
TentativeInterval capacity_conditional_prime(const ConditionalFunctionals& f, const Event& a);
TentativeInterval capacity_conditional_prime(const Capacity& nu, const UncertaintyDegree& r, const Event& a,
                                             const Event& h);

}  // namespace ipm

#endif  // IPM_CONDITIONING_HPP
