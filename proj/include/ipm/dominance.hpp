#ifndef IPM_DOMINANCE_HPP
#define IPM_DOMINANCE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "ipm/measure.hpp"
#include "ipm/random_variable.hpp"
#include "ipm/rational.hpp"

namespace ipm {

/// Any event -> interval map (Q_r, a capacity interval, ...).
using IntervalMap = std::function<Interval(const Event&)>;

/// Piecewise-constant t -> Q({X <= t}). With breakpoints b_0 < ... < b_{m-1}
/// (the values X attains), segment 0 covers t < b_0, segment k covers
/// b_{k-1} <= t < b_k, and the last segment covers t >= b_{m-1}.
class IntervalCdf {
 public:
  /// Throws InputError unless breakpoints are strictly increasing and
  /// segments.size() == breakpoints.size() + 1.
  IntervalCdf(std::vector<Rational> breakpoints, std::vector<Interval> segments);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Interval>& segments() const { return segments_; }

  std::size_t segment_of(const Rational& t) const;
  const Interval& operator()(const Rational& t) const { return segments_[segment_of(t)]; }

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Interval> segments_;
};

/// F(t) = q({X <= t}).
IntervalCdf interval_cdf(const RandomVariable& x, const IntervalMap& q);
/// F(t) = Q_r({X <= t}).
IntervalCdf interval_cdf(const ProbabilityMeasure& p, const UncertaintyDegree& r, const RandomVariable& x);

enum class FailedInequality { none, left_endpoint, width };

std::string_view to_string(FailedInequality failed);

/// On failure, the first t-region [from, to) of the merged grid where an
/// inequality breaks (unset bounds are infinite), a representative t in it,
/// and which inequality broke. The left-endpoint check is reported first when
/// both break.
struct DominanceVerdict {
  bool dominates = true;
  FailedInequality failed = FailedInequality::none;
  std::optional<Rational> witness_t;
  std::optional<Rational> region_from;
  std::optional<Rational> region_to;
};

/// X (with interval CDF f) dominates Y (with g) iff for all t
/// f_lo(t) <= g_lo(t) and |g(t)| <= |f(t)|. Checked once per region of the
/// merged breakpoint grid, on which both step functions are constant.
DominanceVerdict dominates(const IntervalCdf& f, const IntervalCdf& g);
DominanceVerdict dominates(const ProbabilityMeasure& p, const UncertaintyDegree& r, const RandomVariable& x,
                           const RandomVariable& y);

/// Closed-form distribution of Y under Q_1 for the classwise construction: X
/// is t_j on class Z_j with t_j nondecreasing, and Y maps Z_j into
/// (t_{j-1}, t_j]. The closed form is [P(Y <= t), 1 - P(Z_{i*}) delta_t],
/// with t_{i*-1} <= t < t_{i*} and delta_t = 1 iff some eventuality has
/// t_{i*-1} < Y < t. The direct value Q_1({Y <= t}) is returned alongside;
/// the two are not reconciled.
struct Example1Evaluation {
  Rational closed_form_lo;
  Rational closed_form_hi;
  Interval direct;
  /// 1-based; 0 when t < t_0, class_count + 1 when t >= t_m.
  std::size_t i_star = 0;
  bool delta = false;

  bool agrees() const { return closed_form_lo == direct.lo() && closed_form_hi == direct.hi(); }
};

/// t_values holds one value per class, nondecreasing; t0 bounds class 1 from
/// below and defaults to minus infinity. Throws InputError when the inputs
/// do not have the required shape.
Example1Evaluation example1_closed_form(const ProbabilityMeasure& p, const std::vector<Rational>& t_values,
                                        const RandomVariable& y, const Rational& t,
                                        const std::optional<Rational>& t0 = std::nullopt);

/// The classwise variable X(Z_j) = t_j.
RandomVariable classwise_variable(const Space& space, const std::vector<Rational>& t_values);

}  // namespace ipm

#endif  // IPM_DOMINANCE_HPP
