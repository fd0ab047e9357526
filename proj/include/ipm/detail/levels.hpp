#ifndef IPM_DETAIL_LEVELS_HPP
#define IPM_DETAIL_LEVELS_HPP

#include <utility>
#include <vector>

#include "ipm/rational.hpp"
#include "ipm/space.hpp"

namespace ipm::detail {

/// Strata of t in [0, 1] for a step function g with values in [0, 1]: each
/// entry is (length of the stratum, {g >= t} on it). With 0 = t_0 < ... < t_m
/// the distinct positive values of g, the strata are (t_{k-1}, t_k] with
/// upper set {g >= t_k}, then (t_m, 1] with the empty set.
///
/// Any integral over t of f({g >= t}) is then sum_k length_k * f(upper_k).
std::vector<std::pair<Rational, Mask>> level_strata(const std::vector<Rational>& g);

template <class F>
Rational integrate_levels(const std::vector<std::pair<Rational, Mask>>& strata, F&& f) {
  Rational total = 0;
  for (const auto& [length, upper] : strata) total += length * f(upper);
  return total;
}

template <class F>
Rational integrate_levels(const std::vector<Rational>& g, F&& f) {
  return integrate_levels(level_strata(g), f);
}

}  // namespace ipm::detail

#endif  // IPM_DETAIL_LEVELS_HPP
