#ifndef IPM_CAPACITY_HPP
#define IPM_CAPACITY_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ipm/error.hpp"
#include "ipm/measure.hpp"
#include "ipm/random_variable.hpp"
#include "ipm/rational.hpp"
#include "ipm/space.hpp"

namespace ipm {

/// Largest |Omega| for which capacities are stored as explicit tables.
inline constexpr std::size_t kMaxCapacityOmega = 20;
/// Largest |Omega| for the 3^|Omega| disjoint-pair sweep.
inline constexpr std::size_t kMaxPairSweepOmega = 12;

/// Rejected capacity table. For a monotonicity breach, smaller is a subset of
/// larger with nu(smaller) > nu(larger); for a boundary breach both name the
/// offending event.
class CapacityError : public InputError {
 public:
  CapacityError(const std::string& what, Event smaller, Event larger)
      : InputError(what), smaller_(smaller), larger_(larger) {}

  const Event& smaller() const { return smaller_; }
  const Event& larger() const { return larger_; }

 private:
  Event smaller_;
  Event larger_;
};

/// Result of the disjoint-pair sweep. Witnesses are disjoint (A, B) breaking
/// the respective inequality.
struct AdditivityReport {
  bool superadditive = true;
  bool subadditive = true;
  std::optional<std::pair<Event, Event>> superadditivity_witness;
  std::optional<std::pair<Event, Event>> subadditivity_witness;
};

/// Monotone set function with nu(empty) = 0 and nu(Omega) = 1, stored as a
/// table indexed by event mask. Immutable; copies share the table.
class Capacity {
 public:
  /// Validates boundary values and monotonicity over every (H, H + {x}) edge.
  /// Throws CapacityError with a witness on failure, InputError on size.
  static Capacity from_table(const Space& space, std::vector<Rational> table);
  /// nu = P.
  static Capacity additive(const ProbabilityMeasure& p);

  const Space& space() const;
  const std::vector<Rational>& table() const;
  const Rational& operator()(const Event& h) const;
  const Rational& at(Mask bits) const { return table()[bits]; }

 private:
  struct State;
  explicit Capacity(std::shared_ptr<State> state) : state_(std::move(state)) {}

  std::shared_ptr<State> state_;

  friend AdditivityReport is_superadditive(const Capacity& nu);
};

Capacity capacity_from_table(const Space& space, std::vector<Rational> table);

/// nu(A) = sum of m(B) over B subset of A. Masses must be nonnegative, sum to
/// 1 and vanish on the empty event; repeated focal events accumulate.
Capacity belief_from_mass(const Space& space, const std::vector<std::pair<Event, Rational>>& masses);

/// Monotone g: [0,1] -> [0,1] with g(0) = 0 and g(1) = 1, either t^k or the
/// piecewise-linear interpolant of breakpoints.
class Distortion {
 public:
  /// t^k, k >= 1. Convex for k >= 2.
  static Distortion power(unsigned exponent);
  /// Breakpoints (x_i, y_i) with x strictly increasing from 0 to 1, y
  /// nondecreasing from 0 to 1. Throws InputError otherwise.
  static Distortion piecewise(std::vector<std::pair<Rational, Rational>> breakpoints);

  Rational operator()(const Rational& t) const;

  bool is_power() const { return breakpoints_.empty(); }
  unsigned exponent() const { return exponent_; }
  const std::vector<std::pair<Rational, Rational>>& breakpoints() const { return breakpoints_; }

 private:
  Distortion() = default;
  unsigned exponent_ = 1;
  std::vector<std::pair<Rational, Rational>> breakpoints_;
};

/// nu(A) = g(P(A)).
Capacity distort(const ProbabilityMeasure& p, const Distortion& g);

/// Choquet integral of g (values in [0,1]) with respect to nu:
/// sum_k (t_k - t_{k-1}) nu({g >= t_k}) over the distinct values of g.
Rational choquet(const Capacity& nu, const RandomVariable& g);

/// Interval together with whether the raw right endpoint exceeded 1.
struct ClampedInterval {
  Interval value;
  bool clamped = false;
};

/// [nu(H), nu(H) + Choquet(nu, r I_{H_ind})] intersected with [0, 1].
ClampedInterval capacity_interval(const Capacity& nu, const UncertaintyDegree& r, const Event& h);

/// [nu(H), integral over t of nu(H + (H_ind with r >= t))].
/// Contains capacity_interval when nu is super-additive; no such guarantee
/// otherwise, and widths need not shrink as H grows.
ClampedInterval capacity_interval_prime(const Capacity& nu, const UncertaintyDegree& r, const Event& h);

/// Sweeps every disjoint pair. Throws InputError when |Omega| >
/// kMaxPairSweepOmega. The result is cached on the capacity.
AdditivityReport is_superadditive(const Capacity& nu);

}  // namespace ipm

#endif  // IPM_CAPACITY_HPP
