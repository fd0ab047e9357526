#ifndef IPM_TESTS_FIXTURES_HPP
#define IPM_TESTS_FIXTURES_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ipm/capacity.hpp"
#include "ipm/measure.hpp"
#include "oracle/oracle.hpp"

namespace ipm::testing {

using Rng = std::mt19937_64;

struct Fixture {
  std::string name;
  Space space;
  ProbabilityMeasure p;
  UncertaintyDegree r;
};

/// n = 2, E = {x0}.
Space umbrella_space();

/// The registered space shapes with |Omega| <= max_omega.
std::vector<Space> small_spaces(std::size_t max_omega);

/// Deterministic fixture set: for each small space, uniform P with r = 1,
/// and seeded random (P, r) pairs, some with zero masses.
std::vector<Fixture> registered_fixtures(std::size_t max_omega = 8);

Rational random_unit_rational(Rng& rng, int max_denominator = 6);
ProbabilityMeasure random_measure(const Space& space, Rng& rng, bool allow_zero = true);
UncertaintyDegree random_degree(const Space& space, Rng& rng);
/// Belief function with the given number of random nonempty focal sets.
Capacity random_belief(const Space& space, Rng& rng, int focal_sets = 3);
/// Monotone, generally neither super- nor sub-additive.
Capacity random_monotone(const Space& space, Rng& rng);
/// Piecewise-linear concave distortion through (0,0), (a, b), (1,1), b > a.
/// Sub-additive capacity with values in [1/2, 1) on proper nonempty events.
Capacity random_plateau(const Space& space, Rng& rng);

Distortion random_concave(Rng& rng);

oracle::Shape shape_of(const Space& space);
oracle::IndexList list_of(const Event& h);
Event event_of(const Space& space, const oracle::IndexList& h);

}  // namespace ipm::testing

#endif  // IPM_TESTS_FIXTURES_HPP
