#include "support/searches.hpp"

#include <algorithm>

#include "ipm/capacity.hpp"

namespace ipm::testing {

Example1Fixture example1_fixture() {
  const auto s = umbrella_space();
  std::vector<Rational> y(4);
  y[s.parse_eventuality("00")] = Rational(1, 2);
  y[s.parse_eventuality("11")] = 1;
  y[s.parse_eventuality("10")] = Rational(3, 2);
  y[s.parse_eventuality("01")] = 2;
  std::vector<Rational> t_values{1, 2};
  return {s, ProbabilityMeasure::uniform(s), t_values, classwise_variable(s, t_values), RandomVariable(s, y)};
}

std::pair<RandomVariable, RandomVariable> random_ordered_pair(const Space& space, Rng& rng) {
  std::uniform_int_distribution<int> value(0, 3);
  std::vector<Rational> x(space.omega_size());
  std::vector<Rational> y(space.omega_size());
  for (std::size_t i = 0; i < space.omega_size(); ++i) {
    const int a = value(rng);
    const int b = value(rng);
    x[i] = std::max(a, b);
    y[i] = std::min(a, b);
  }
  return {RandomVariable(space, x), RandomVariable(space, y)};
}

std::optional<Rational> width_reversal_point(const IntervalCdf& f, const IntervalCdf& g) {
  std::vector<Rational> grid = f.breakpoints();
  grid.insert(grid.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<Rational> probes{grid.front() - 1};
  probes.insert(probes.end(), grid.begin(), grid.end());
  for (const auto& t : probes) {
    if (g(t).width() > f(t).width()) return t;
  }
  return std::nullopt;
}

std::optional<WidthReversal> search_subadditive_width_reversal(SubadditiveFamily family, IntervalKind kind,
                                                               int trials, unsigned seed) {
  Rng rng(seed);
  for (const auto& space : small_spaces(8)) {
    if (space.n() < 2) continue;
    for (int trial = 0; trial < trials; ++trial) {
      const auto nu = family == SubadditiveFamily::plateau ? random_plateau(space, rng)
                                                           : distort(random_measure(space, rng), random_concave(rng));
      if (!is_superadditive(nu).subadditive) continue;
      const auto r = trial % 2 == 0 ? UncertaintyDegree::constant(space, 1) : random_degree(space, rng);
      const auto [x, y] = random_ordered_pair(space, rng);
      const IntervalMap q = [&](const Event& h) {
        return kind == IntervalKind::prime ? capacity_interval_prime(nu, r, h).value : capacity_interval(nu, r, h).value;
      };
      const auto f = interval_cdf(x, q);
      const auto gy = interval_cdf(y, q);
      if (const auto t = width_reversal_point(f, gy)) {
        return WidthReversal{"n=" + std::to_string(space.n()) + ",|E|=" + std::to_string(space.labels().size()) +
                                 " trial " + std::to_string(trial),
                             x, y, *t, f(*t), gy(*t)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ipm::testing
