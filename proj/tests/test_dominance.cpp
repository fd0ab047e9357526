#include "doctest.h"
#include "ipm/capacity.hpp"
#include "ipm/dominance.hpp"
#include "ipm/error.hpp"
#include "support/fixtures.hpp"
#include "support/searches.hpp"

using namespace ipm;

TEST_CASE("interval_cdf of a classwise variable has right endpoint 1") {
  for (const auto& f : testing::registered_fixtures(8)) {
    const auto& s = f.space;
    if (s.n() < 2) continue;
    std::vector<Rational> t_values;
    for (std::size_t j = 0; j < s.z_classes().size(); ++j) t_values.emplace_back(static_cast<long>(j / 2 + 1));
    const auto x = classwise_variable(s, t_values);
    const auto one = UncertaintyDegree::constant(s, 1);
    const auto cdf = interval_cdf(f.p, one, x);
    CHECK(cdf.segments().front() == Interval(0, 1));
    for (const auto& t : cdf.breakpoints()) CHECK(cdf(t) == Interval(f.p.probability(x.at_most(t)), 1));
    CHECK(cdf.segments().back() == Interval(1, 1));
  }
}

TEST_CASE("interval_cdf of a constant and of the umbrella variable") {
  const auto s = testing::umbrella_space();
  const auto p = ProbabilityMeasure::uniform(s);
  testing::Rng rng(41);
  const auto r = testing::random_degree(s, rng);
  const auto cdf = interval_cdf(p, r, RandomVariable::constant(s, Rational(5, 2)));
  REQUIRE(cdf.breakpoints().size() == 1);
  CHECK(cdf.segments()[0] == Interval(0, expectation(p, r.as_variable())));
  CHECK(cdf.segments()[1] == Interval(1, 1));

  const auto ex = testing::example1_fixture();
  const auto g = interval_cdf(ex.p, UncertaintyDegree::constant(ex.space, 1), ex.y);
  CHECK(ex.y.at_most(Rational(7, 10)) == ex.space.parse_event({"00"}));
  CHECK(g(Rational(7, 10)) == Interval(Rational(1, 4), Rational(3, 4)));
}

TEST_CASE("stored segments equal direct evaluation between breakpoints") {
  testing::Rng rng(43);
  for (const auto& f : testing::registered_fixtures(8)) {
    const auto [x, y] = testing::random_ordered_pair(f.space, rng);
    const auto cdf = interval_cdf(f.p, f.r, x);
    for (int k = 0; k < 40; ++k) {
      const Rational t = Rational(static_cast<long>(rng() % 50), 10) - 1;
      CHECK(cdf(t) == interval_measure(f.p, f.r, x.at_most(t)));
    }
  }
}

TEST_CASE("example1_closed_form against direct evaluation") {
  const auto ex = testing::example1_fixture();
  const auto at = [&](const Rational& t) { return example1_closed_form(ex.p, ex.t_values, ex.y, t); };

  const auto low = at(Rational(1, 4));
  CHECK_FALSE(low.delta);
  CHECK(low.closed_form_lo == 0);
  CHECK(low.closed_form_hi == 1);
  CHECK(low.agrees());

  const auto boundary = at(Rational(1));
  CHECK(boundary.i_star == 2);
  CHECK_FALSE(boundary.delta);
  CHECK(boundary.closed_form_hi == 1);
  CHECK(boundary.direct.hi() == 1);

  const auto inside = at(Rational(7, 10));
  CHECK(inside.i_star == 1);
  CHECK(inside.delta);
  CHECK(inside.closed_form_lo == Rational(1, 4));
  CHECK(inside.closed_form_hi == Rational(1, 2));
  CHECK(inside.direct == Interval(Rational(1, 4), Rational(3, 4)));
  CHECK_FALSE(inside.agrees());

  const auto beyond = at(Rational(5));
  CHECK(beyond.i_star == 3);
  CHECK(beyond.closed_form_lo == 1);
  CHECK(beyond.closed_form_hi == 1);

  const auto bounded = example1_closed_form(ex.p, ex.t_values, ex.y, Rational(-1), Rational(0));
  CHECK(bounded.i_star == 0);
  CHECK(bounded.closed_form_hi == 1);
}

TEST_CASE("example1_closed_form rejects malformed inputs") {
  const auto ex = testing::example1_fixture();
  CHECK_THROWS_AS(example1_closed_form(ex.p, {2, 1}, ex.y, 0), InputError);
  CHECK_THROWS_AS(example1_closed_form(ex.p, {1}, ex.y, 0), InputError);
  // Y(00) = 1/2 is not above t_0 = 1/2.
  CHECK_THROWS_AS(example1_closed_form(ex.p, ex.t_values, ex.y, 0, Rational(1, 2)), InputError);
  // Y(10) = 3/2 is not in (t_1, t_2] when t_1 = 3/2.
  CHECK_THROWS_AS(example1_closed_form(ex.p, {Rational(3, 2), 2}, ex.y, 0), InputError);
}

TEST_CASE("dominates") {
  const auto ex = testing::example1_fixture();
  const auto one = UncertaintyDegree::constant(ex.space, 1);
  CHECK(dominates(ex.p, one, ex.x, ex.x).dominates);
  CHECK(dominates(ex.p, one, ex.x, ex.y).dominates);

  const auto zero = RandomVariable::constant(ex.space, 0);
  const auto unit = RandomVariable::constant(ex.space, 1);
  const auto verdict = dominates(ex.p, one, zero, unit);
  CHECK_FALSE(verdict.dominates);
  CHECK(verdict.failed == FailedInequality::left_endpoint);
  REQUIRE(verdict.witness_t.has_value());
  CHECK(*verdict.witness_t >= 0);
  CHECK(*verdict.witness_t < 1);
  CHECK(verdict.region_from == Rational(0));
  CHECK(verdict.region_to == Rational(1));
  CHECK(dominates(ex.p, one, unit, zero).dominates);
}

TEST_CASE("classwise construction: P(X<=t) <= P(Y<=t), |F_1| >= |G_1|, right endpoint of G_1 not monotone") {
  const auto ex = testing::example1_fixture();
  const auto one = UncertaintyDegree::constant(ex.space, 1);
  const auto f = interval_cdf(ex.p, one, ex.x);
  const auto g = interval_cdf(ex.p, one, ex.y);
  bool rises = false;
  bool falls = false;
  for (std::size_t k = 1; k < g.segments().size(); ++k) {
    rises = rises || g.segments()[k].hi() > g.segments()[k - 1].hi();
    falls = falls || g.segments()[k].hi() < g.segments()[k - 1].hi();
  }
  CHECK(rises);
  CHECK(falls);
  for (int k = -4; k <= 12; ++k) {
    const Rational t(k, 4);
    CHECK(f(t).lo() <= g(t).lo());
    CHECK(f(t).width() >= g(t).width());
  }
}

TEST_CASE("pointwise order implies dominance; dominance is transitive") {
  testing::Rng rng(47);
  for (const auto& f : testing::registered_fixtures(8)) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto [x, y] = testing::random_ordered_pair(f.space, rng);
      CHECK(dominates(f.p, f.r, x, y).dominates);
      const auto [y2, z] = testing::random_ordered_pair(f.space, rng);
      const auto xy = dominates(f.p, f.r, x, y2).dominates;
      const auto yz = dominates(f.p, f.r, y2, z).dominates;
      if (xy && yz) CHECK(dominates(f.p, f.r, x, z).dominates);
    }
  }
}

TEST_CASE("super-additive capacity intervals keep |G| <= |F| for X >= Y") {
  testing::Rng rng(53);
  for (const auto& s : testing::small_spaces(8)) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto nu = trial % 2 ? testing::random_belief(s, rng, 3)
                                : distort(testing::random_measure(s, rng), Distortion::power(2));
      const auto r = testing::random_degree(s, rng);
      const auto [x, y] = testing::random_ordered_pair(s, rng);
      const IntervalMap q = [&](const Event& h) { return capacity_interval(nu, r, h).value; };
      CHECK_FALSE(testing::width_reversal_point(interval_cdf(x, q), interval_cdf(y, q)).has_value());
    }
  }
}

TEST_CASE("plateau sub-additive capacities reverse the width order under Q'") {
  const auto found = testing::search_subadditive_width_reversal(testing::SubadditiveFamily::plateau,
                                                                testing::IntervalKind::prime, 200, 59);
  REQUIRE(found.has_value());
  CHECK(found->g_t.width() > found->f_t.width());
  for (std::size_t i = 0; i < found->x.values().size(); ++i) CHECK(found->x[i] >= found->y[i]);
}

TEST_CASE("concave distortions never reverse the width order") {
  using testing::IntervalKind;
  using testing::SubadditiveFamily;
  for (const auto kind : {IntervalKind::capacity, IntervalKind::prime}) {
    CHECK_FALSE(testing::search_subadditive_width_reversal(SubadditiveFamily::concave_distortion, kind, 200, 61));
  }
  CHECK_FALSE(testing::search_subadditive_width_reversal(SubadditiveFamily::plateau, IntervalKind::capacity, 200, 67));
}
