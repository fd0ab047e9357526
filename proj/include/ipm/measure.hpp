#ifndef IPM_MEASURE_HPP
#define IPM_MEASURE_HPP

#include <cstddef>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "ipm/random_variable.hpp"
#include "ipm/rational.hpp"
#include "ipm/space.hpp"

namespace ipm {

/// Largest |Omega| for which functions over all 2^|Omega| events are tabulated.
inline constexpr std::size_t kMaxExhaustiveOmega = 16;

/// Probability measure on the power set of a Space, given by point masses.
class ProbabilityMeasure {
 public:
  /// Throws InputError on size mismatch, negative masses, or masses not
  /// summing to exactly 1. No normalization is performed.
  ProbabilityMeasure(Space space, std::vector<Rational> masses);

  static ProbabilityMeasure uniform(const Space& space);

  const Space& space() const { return space_; }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& mass(std::size_t index) const { return masses_[index]; }
  Rational probability(const Event& h) const;

 private:
  Space space_;
  std::vector<Rational> masses_;
};

/// E[v] = sum over eventualities of mass * value.
Rational expectation(const ProbabilityMeasure& p, const RandomVariable& v);

/// Q_r(H) = [P(H), P(H) + E[r I_{H_ind}]].
Interval interval_measure(const ProbabilityMeasure& p, const UncertaintyDegree& r, const Event& h);

/// f(w) = P(E x {w}) for a bit sequence w given as a string of length n.
Rational marginal_mass(const ProbabilityMeasure& p, std::string_view bits);
Rational marginal_mass(const ProbabilityMeasure& p, std::uint32_t pattern);

/// Outcome of checking the two axioms of an interval probability:
/// the left endpoints form a probability measure, and widths shrink as
/// events grow.
struct ValidationReport {
  bool lower_additive = true;
  bool widths_antimonotone = true;
  /// Events whose left endpoint differs from the sum over their singletons
  /// (or that break lo(empty) = 0, lo(Omega) = 1).
  std::vector<Event> additivity_violations;
  /// Pairs (H1, H2) with H1 a subset of H2 and |Q(H2)| > |Q(H1)|.
  std::vector<std::pair<Event, Event>> width_violations;
  std::size_t additivity_violation_count = 0;
  std::size_t width_violation_count = 0;

  bool ok() const { return lower_additive && widths_antimonotone; }
};

/// Stored violation lists are truncated to this many entries; the counts
/// are always complete.
inline constexpr std::size_t kMaxReportedViolations = 1024;

/// table[mask] is Q(event(mask)). Throws InputError unless the table covers all
/// 2^|Omega| events and |Omega| <= kMaxExhaustiveOmega.
ValidationReport validate_imprecise(const Space& space, const std::vector<Interval>& table);

/// Evaluates q on every event of a small space.
std::vector<Interval> tabulate(const Space& space, const std::function<Interval(const Event&)>& q);

}  // namespace ipm

#endif  // IPM_MEASURE_HPP
