#include "ipm/dominance.hpp"

#include <algorithm>

#include "ipm/error.hpp"

namespace ipm {

IntervalCdf::IntervalCdf(std::vector<Rational> breakpoints, std::vector<Interval> segments)
    : breakpoints_(std::move(breakpoints)), segments_(std::move(segments)) {
  if (segments_.size() != breakpoints_.size() + 1) throw InputError("interval CDF needs one segment per region");
  for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
    if (breakpoints_[k] <= breakpoints_[k - 1]) throw InputError("breakpoints must be strictly increasing");
  }
}

std::size_t IntervalCdf::segment_of(const Rational& t) const {
  return static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t) -
                                  breakpoints_.begin());
}

IntervalCdf interval_cdf(const RandomVariable& x, const IntervalMap& q) {
  auto breakpoints = x.attained_values();
  std::vector<Interval> segments;
  segments.reserve(breakpoints.size() + 1);
  segments.push_back(q(x.space().empty_event()));
  for (const auto& t : breakpoints) segments.push_back(q(x.at_most(t)));
  return IntervalCdf(std::move(breakpoints), std::move(segments));
}

IntervalCdf interval_cdf(const ProbabilityMeasure& p, const UncertaintyDegree& r, const RandomVariable& x) {
  if (!(x.space() == p.space())) throw InputError("measure and variable belong to different spaces");
  return interval_cdf(x, [&](const Event& h) { return interval_measure(p, r, h); });
}

std::string_view to_string(FailedInequality failed) {
  switch (failed) {
    case FailedInequality::none:
      return "none";
    case FailedInequality::left_endpoint:
      return "left_endpoint";
    case FailedInequality::width:
      return "width";
  }
  return "none";
}

DominanceVerdict dominates(const IntervalCdf& f, const IntervalCdf& g) {
  std::vector<Rational> grid = f.breakpoints();
  grid.insert(grid.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // Region 0 is (-inf, grid[0]); region k is [grid[k-1], grid[k]).
  for (std::size_t k = 0; k <= grid.size(); ++k) {
    const Rational t = grid.empty() ? Rational(0) : k == 0 ? Rational(grid.front() - 1) : grid[k - 1];
    const auto& fx = f(t);
    const auto& gy = g(t);
    FailedInequality failed = FailedInequality::none;
    if (fx.lo() > gy.lo()) {
      failed = FailedInequality::left_endpoint;
    } else if (gy.width() > fx.width()) {
      failed = FailedInequality::width;
    }
    if (failed == FailedInequality::none) continue;

    DominanceVerdict verdict;
    verdict.dominates = false;
    verdict.failed = failed;
    verdict.witness_t = t;
    if (k > 0) verdict.region_from = grid[k - 1];
    if (k < grid.size()) verdict.region_to = grid[k];
    return verdict;
  }
  return DominanceVerdict{};
}

DominanceVerdict dominates(const ProbabilityMeasure& p, const UncertaintyDegree& r, const RandomVariable& x,
                           const RandomVariable& y) {
  return dominates(interval_cdf(p, r, x), interval_cdf(p, r, y));
}

RandomVariable classwise_variable(const Space& space, const std::vector<Rational>& t_values) {
  if (t_values.size() != space.z_classes().size()) throw InputError("need one value per incompatibility class");
  std::vector<Rational> values(space.omega_size());
  for (std::size_t i = 0; i < space.omega_size(); ++i) values[i] = t_values[space.z_class_of(i)];
  return RandomVariable(space, std::move(values));
}

Example1Evaluation example1_closed_form(const ProbabilityMeasure& p, const std::vector<Rational>& t_values,
                                        const RandomVariable& y, const Rational& t,
                                        const std::optional<Rational>& t0) {
  const auto& space = p.space();
  if (!(y.space() == space)) throw InputError("measure and variable belong to different spaces");
  const auto& classes = space.z_classes();
  const std::size_t m = classes.size();
  if (t_values.size() != m) throw InputError("need one t value per incompatibility class");
  for (std::size_t j = 1; j < m; ++j) {
    if (t_values[j] < t_values[j - 1]) throw InputError("t values must be nondecreasing");
  }
  if (t0 && *t0 > t_values.front()) throw InputError("t0 must not exceed t_1");

  // Lower bound of class j (0-based); unset means minus infinity.
  auto lower_of = [&](std::size_t j) -> std::optional<Rational> {
    if (j == 0) return t0;
    return t_values[j - 1];
  };
  for (std::size_t i = 0; i < space.omega_size(); ++i) {
    const auto j = space.z_class_of(i);
    const auto lower = lower_of(j);
    if (y[i] > t_values[j] || (lower && y[i] <= *lower)) {
      throw InputError("Y(" + space.eventuality_name(i) + ") = " + to_string(y[i]) +
                       " lies outside its class range");
    }
  }

  Example1Evaluation out;
  out.closed_form_lo = p.probability(y.at_most(t));
  out.direct = interval_measure(p, UncertaintyDegree::constant(space, 1), y.at_most(t));

  if (t0 && t < *t0) {
    out.i_star = 0;
    out.delta = false;
  } else {
    const auto it = std::upper_bound(t_values.begin(), t_values.end(), t);
    out.i_star = static_cast<std::size_t>(it - t_values.begin()) + 1;
    const auto lower = out.i_star == 1 ? t0 : std::optional<Rational>(t_values[out.i_star - 2]);
    for (const auto& v : y.values()) {
      if ((!lower || *lower < v) && v < t) {
        out.delta = true;
        break;
      }
    }
  }
  out.closed_form_hi = 1;
  if (out.delta && out.i_star >= 1 && out.i_star <= m) out.closed_form_hi -= p.probability(classes[out.i_star - 1]);
  return out;
}

}  // namespace ipm
