#include <algorithm>

#include "doctest.h"
#include "ipm/error.hpp"
#include "ipm/measure.hpp"
#include "support/fixtures.hpp"

using namespace ipm;

namespace {

Event named(const Space& s, std::vector<std::string> names) { return s.parse_event(names); }

}  // namespace

TEST_CASE("ProbabilityMeasure requires exact unit mass") {
  const auto s = testing::umbrella_space();
  CHECK_THROWS_AS(ProbabilityMeasure(s, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 5)}),
                  InputError);
  CHECK_THROWS_AS(ProbabilityMeasure(s, {Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(-1, 4)}),
                  InputError);
  CHECK_THROWS_AS(ProbabilityMeasure(s, {Rational(1)}), InputError);
  CHECK_NOTHROW(ProbabilityMeasure(s, {Rational(1), Rational(0), Rational(0), Rational(0)}));
}

TEST_CASE("expectation") {
  const auto s = testing::umbrella_space();
  const auto p = ProbabilityMeasure::uniform(s);
  CHECK(expectation(p, RandomVariable::constant(s, Rational(2, 3))) == Rational(2, 3));
  CHECK(expectation(p, RandomVariable::indicator(s, named(s, {"00", "11"}))) == Rational(1, 2));
  CHECK(expectation(p, RandomVariable::constant(s, 0)) == 0);
}

TEST_CASE("interval_measure") {
  const auto s = testing::umbrella_space();
  const auto p = ProbabilityMeasure::uniform(s);
  const auto one = UncertaintyDegree::constant(s, 1);
  CHECK(interval_measure(p, one, named(s, {"10"})) == Interval(Rational(1, 4), Rational(3, 4)));
  CHECK(interval_measure(p, one, s.full_event()) == Interval(1, 1));
  CHECK(interval_measure(p, one, s.empty_event()) == Interval(0, 1));

  testing::Rng rng(7);
  const auto r = testing::random_degree(s, rng);
  CHECK(interval_measure(p, r, s.full_event()) == Interval(1, 1));
  const auto zero = UncertaintyDegree::constant(s, 0);
  for (Mask bits = 0; bits < 16; ++bits) {
    const auto h = s.event(bits);
    CHECK(interval_measure(p, zero, h) == Interval::point(p.probability(h)));
  }
}

TEST_CASE("marginal_mass") {
  const auto single = testing::umbrella_space();
  const auto p = ProbabilityMeasure(single, {Rational(1, 8), Rational(3, 8), Rational(1, 4), Rational(1, 4)});
  CHECK(marginal_mass(p, "01") == Rational(3, 8));

  const auto s = build_space(2, {"a", "b"});
  std::vector<Rational> masses(8, Rational(0));
  masses[s.parse_eventuality("a,10")] = Rational(1, 8);
  masses[s.parse_eventuality("b,10")] = Rational(1, 8);
  masses[s.parse_eventuality("a,00")] = Rational(3, 4);
  const ProbabilityMeasure q(s, masses);
  CHECK(marginal_mass(q, "10") == Rational(1, 4));
  CHECK(marginal_mass(q, "11") == 0);
  CHECK_THROWS_AS(marginal_mass(q, "1"), InputError);
  CHECK_THROWS_AS(marginal_mass(q, "101"), InputError);
}

TEST_CASE("validate_imprecise accepts Q_r and point intervals") {
  for (const auto& f : testing::registered_fixtures(8)) {
    CAPTURE(f.name);
    const auto report =
        validate_imprecise(f.space, tabulate(f.space, [&](const Event& h) { return interval_measure(f.p, f.r, h); }));
    CHECK(report.ok());
    const auto points =
        validate_imprecise(f.space, tabulate(f.space, [&](const Event& h) { return Interval::point(f.p.probability(h)); }));
    CHECK(points.ok());
  }
}

TEST_CASE("validate_imprecise reports widening pairs") {
  const auto s = testing::umbrella_space();
  const auto p = ProbabilityMeasure::uniform(s);
  const auto k = named(s, {"00", "11"});
  auto table = tabulate(s, [&](const Event& h) { return Interval::point(p.probability(h)); });
  table[k.bits()] = Interval(Rational(1, 2), Rational(3, 4));
  const auto report = validate_imprecise(s, table);
  CHECK(report.lower_additive);
  CHECK_FALSE(report.widths_antimonotone);
  CHECK(report.width_violation_count == 3);
  const auto& pairs = report.width_violations;
  CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(named(s, {"00"}), k)) != pairs.end());
  CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(s.empty_event(), k)) != pairs.end());
}

TEST_CASE("validate_imprecise reports non-additive left endpoints") {
  const auto s = testing::umbrella_space();
  const auto p = ProbabilityMeasure::uniform(s);
  auto table = tabulate(s, [&](const Event& h) { return Interval::point(p.probability(h)); });
  table[s.full_event().bits()] = Interval(Rational(1, 2), Rational(1, 2));
  const auto report = validate_imprecise(s, table);
  CHECK_FALSE(report.lower_additive);
  CHECK(report.additivity_violations.front() == s.full_event());
  CHECK_THROWS_AS(validate_imprecise(s, std::vector<Interval>(3)), InputError);
}

TEST_CASE("width of Q_r is E[r I_ind], bounded by P(H_ind) summed over negation pairs") {
  for (const auto& f : testing::registered_fixtures(8)) {
    CAPTURE(f.name);
    const auto& s = f.space;
    const Mask count = Mask{1} << s.omega_size();
    for (Mask bits = 0; bits < count; ++bits) {
      const auto h = s.event(bits);
      const auto q = interval_measure(f.p, f.r, h);
      const auto ind = indecisive_set(s, h);
      const Rational p_ind = f.p.probability(ind);
      CHECK(q.width() <= p_ind);

      // Sum of f(w) + f(w*) over unordered negation pairs inside H^c.
      const auto hc = s.complement(h);
      Rational pair_sum = 0;
      for (std::uint32_t w = 0; w < (1U << s.n()); ++w) {
        const auto w_star = s.negate(w);
        if (w < w_star && s.pattern_event(w).subset_of(hc) && s.pattern_event(w_star).subset_of(hc)) {
          pair_sum += marginal_mass(f.p, w) + marginal_mass(f.p, w_star);
        }
      }
      CHECK(p_ind == pair_sum);

      if (p_ind > 0) {
        // Mean of r under P conditioned on H_ind.
        Rational mean = 0;
        for (auto i : ind.indices()) mean += f.p.mass(i) * f.r[i];
        mean /= p_ind;
        CHECK(q.width() == p_ind * mean);
      }
    }
  }
}

TEST_CASE("Q_1 right endpoint equals the left endpoint of the weak-complement closure") {
  for (const auto& f : testing::registered_fixtures(8)) {
    const auto& s = f.space;
    const auto one = UncertaintyDegree::constant(s, 1);
    const Mask count = Mask{1} << s.omega_size();
    for (Mask bits = 0; bits < count; ++bits) {
      const auto h = s.event(bits);
      const auto weak = weak_complement(s, h);
      const auto q = interval_measure(f.p, one, h);
      CHECK(q.hi() == 1 - f.p.probability(weak));
      CHECK(q.hi() == interval_measure(f.p, one, s.complement(weak)).lo());
    }
  }
}
