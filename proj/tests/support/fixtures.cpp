#include "support/fixtures.hpp"

#include <algorithm>

namespace ipm::testing {

Space umbrella_space() { return Space(2, {"x0"}); }

std::vector<Space> small_spaces(std::size_t max_omega) {
  const std::vector<std::pair<int, std::vector<std::string>>> shapes = {
      {1, {"a", "b"}},       {2, {"x0"}},        {1, {"a", "b", "c"}}, {2, {"a", "b"}},
      {3, {"x0"}},           {1, {"a", "b", "c", "d", "e"}},            {2, {"a", "b", "c"}},
  };
  std::vector<Space> out;
  for (const auto& [n, labels] : shapes) {
    if (labels.size() << n <= max_omega) out.emplace_back(n, labels);
  }
  return out;
}

Rational random_unit_rational(Rng& rng, int max_denominator) {
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(0, den);
  Rational value(num_dist(rng), den);
  value.canonicalize();
  return value;
}

ProbabilityMeasure random_measure(const Space& space, Rng& rng, bool allow_zero) {
  std::uniform_int_distribution<int> weight(allow_zero ? 0 : 1, 9);
  std::vector<int> weights(space.omega_size());
  int total = 0;
  do {
    total = 0;
    for (auto& w : weights) total += (w = weight(rng));
  } while (total == 0);
  std::vector<Rational> masses;
  for (int w : weights) masses.emplace_back(w, total);
  for (auto& m : masses) m.canonicalize();
  return ProbabilityMeasure(space, std::move(masses));
}

UncertaintyDegree random_degree(const Space& space, Rng& rng) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < space.omega_size(); ++i) values.push_back(random_unit_rational(rng));
  return UncertaintyDegree(space, std::move(values));
}

std::vector<Fixture> registered_fixtures(std::size_t max_omega) {
  Rng rng(20240917);
  std::vector<Fixture> out;
  for (const auto& space : small_spaces(max_omega)) {
    const std::string shape = "n=" + std::to_string(space.n()) + ",|E|=" + std::to_string(space.labels().size());
    out.push_back({shape + " uniform r=1", space, ProbabilityMeasure::uniform(space),
                   UncertaintyDegree::constant(space, 1)});
    out.push_back({shape + " random r=1", space, random_measure(space, rng), UncertaintyDegree::constant(space, 1)});
    out.push_back({shape + " random r", space, random_measure(space, rng, false), random_degree(space, rng)});
    out.push_back({shape + " sparse random r", space, random_measure(space, rng), random_degree(space, rng)});
  }
  return out;
}

Capacity random_belief(const Space& space, Rng& rng, int focal_sets) {
  const Mask count = Mask{1} << space.omega_size();
  std::uniform_int_distribution<Mask> focal(1, count - 1);
  std::uniform_int_distribution<int> weight(1, 5);
  std::vector<std::pair<Event, int>> picks;
  int total = 0;
  for (int k = 0; k < focal_sets; ++k) {
    picks.emplace_back(space.event(focal(rng)), weight(rng));
    total += picks.back().second;
  }
  std::vector<std::pair<Event, Rational>> masses;
  for (const auto& [e, w] : picks) {
    Rational m(w, total);
    m.canonicalize();
    masses.emplace_back(e, m);
  }
  return belief_from_mass(space, masses);
}

Capacity random_monotone(const Space& space, Rng& rng) {
  const Mask count = Mask{1} << space.omega_size();
  std::vector<Rational> table(count);
  for (auto& v : table) v = random_unit_rational(rng, 8);
  table[0] = 0;
  table[count - 1] = 1;
  // Monotone hull from below: nu(A) = max over subsets.
  for (std::size_t i = 0; i < space.omega_size(); ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask bits = 0; bits < count; ++bits) {
      if ((bits & bit) && table[bits ^ bit] > table[bits]) table[bits] = table[bits ^ bit];
    }
  }
  return Capacity::from_table(space, std::move(table));
}

Capacity random_plateau(const Space& space, Rng& rng) {
  const Mask count = Mask{1} << space.omega_size();
  std::vector<Rational> table(count);
  for (auto& v : table) v = Rational(1, 2) + random_unit_rational(rng, 4) / 2;
  for (auto& v : table) {
    if (v == 1) v = Rational(7, 8);
  }
  table[0] = 0;
  table[count - 1] = 1;
  for (std::size_t i = 0; i < space.omega_size(); ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask bits = 0; bits < count; ++bits) {
      if ((bits & bit) && (bits ^ bit) && table[bits ^ bit] > table[bits]) table[bits] = table[bits ^ bit];
    }
  }
  return Capacity::from_table(space, std::move(table));
}

Distortion random_concave(Rng& rng) {
  Rational a;
  do {
    a = random_unit_rational(rng, 5);
  } while (a == 0 || a == 1);
  std::uniform_int_distribution<int> lift(1, 4);
  // b strictly between a and 1.
  Rational b = a + (1 - a) * Rational(lift(rng), 5);
  return Distortion::piecewise({{0, 0}, {a, b}, {1, 1}});
}

oracle::Shape shape_of(const Space& space) { return {space.n(), static_cast<int>(space.labels().size())}; }

oracle::IndexList list_of(const Event& h) {
  oracle::IndexList out;
  for (auto i : h.indices()) out.push_back(static_cast<int>(i));
  return out;
}

Event event_of(const Space& space, const oracle::IndexList& h) {
  std::vector<std::size_t> indices(h.begin(), h.end());
  return space.event(indices);
}

}  // namespace ipm::testing
