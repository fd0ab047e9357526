#include "ipm/capacity.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "ipm/detail/levels.hpp"

namespace ipm {

namespace detail {

std::vector<std::pair<Rational, Mask>> level_strata(const std::vector<Rational>& g) {
  std::vector<Rational> levels;
  for (const auto& v : g) {
    if (v > 0) levels.push_back(v);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<std::pair<Rational, Mask>> strata;
  Rational previous = 0;
  for (const auto& level : levels) {
    Mask upper = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] >= level) upper |= Mask{1} << i;
    }
    strata.emplace_back(level - previous, upper);
    previous = level;
  }
  if (previous < 1) strata.emplace_back(1 - previous, Mask{0});
  return strata;
}

}  // namespace detail

struct Capacity::State {
  State(Space s, std::vector<Rational> t) : space(std::move(s)), table(std::move(t)) {}

  Space space;
  std::vector<Rational> table;
  std::once_flag sweep_once;
  AdditivityReport sweep;
};

Capacity Capacity::from_table(const Space& space, std::vector<Rational> table) {
  const auto omega = space.omega_size();
  if (omega > kMaxCapacityOmega) throw InputError("space too large for a capacity table");
  const Mask count = Mask{1} << omega;
  if (table.size() != count) {
    throw InputError("capacity table needs " + std::to_string(count) + " entries, got " +
                     std::to_string(table.size()));
  }
  const Mask full = count - 1;
  if (table[0] != 0) throw CapacityError("nu(empty) must be 0", space.empty_event(), space.empty_event());
  if (table[full] != 1) throw CapacityError("nu(Omega) must be 1", space.full_event(), space.full_event());
  for (Mask bits = 0; bits < count; ++bits) {
    for (std::size_t i = 0; i < omega; ++i) {
      const Mask bigger = bits | (Mask{1} << i);
      if (bigger != bits && table[bits] > table[bigger]) {
        throw CapacityError("capacity is not monotone: nu(" + space.format_event(space.event(bits)) + ") = " +
                                to_string(table[bits]) + " > nu(" + space.format_event(space.event(bigger)) +
                                ") = " + to_string(table[bigger]),
                            space.event(bits), space.event(bigger));
      }
    }
  }
  return Capacity(std::make_shared<State>(space, std::move(table)));
}

Capacity capacity_from_table(const Space& space, std::vector<Rational> table) {
  return Capacity::from_table(space, std::move(table));
}

namespace {

// P(A) for every mask A.
std::vector<Rational> probability_table(const ProbabilityMeasure& p) {
  const auto omega = p.space().omega_size();
  if (omega > kMaxCapacityOmega) throw InputError("space too large for a capacity table");
  const Mask count = Mask{1} << omega;
  std::vector<Rational> table(count, Rational(0));
  for (Mask bits = 1; bits < count; ++bits) {
    const auto lowest = static_cast<std::size_t>(std::countr_zero(bits));
    table[bits] = table[bits & (bits - 1)] + p.mass(lowest);
  }
  return table;
}

}  // namespace

Capacity Capacity::additive(const ProbabilityMeasure& p) { return from_table(p.space(), probability_table(p)); }

const Space& Capacity::space() const { return state_->space; }
const std::vector<Rational>& Capacity::table() const { return state_->table; }

const Rational& Capacity::operator()(const Event& h) const {
  state_->space.check(h);
  return state_->table[h.bits()];
}

Capacity belief_from_mass(const Space& space, const std::vector<std::pair<Event, Rational>>& masses) {
  const auto omega = space.omega_size();
  if (omega > kMaxCapacityOmega) throw InputError("space too large for a capacity table");
  const Mask count = Mask{1} << omega;
  std::vector<Rational> table(count, Rational(0));
  Rational total = 0;
  for (const auto& [focal, m] : masses) {
    space.check(focal);
    if (m < 0) throw InputError("negative belief mass " + to_string(m));
    if (focal.empty() && m != 0) throw InputError("belief mass on the empty event must be 0");
    table[focal.bits()] += m;
    total += m;
  }
  if (total != 1) throw InputError("belief masses sum to " + to_string(total) + ", not 1");
  // Zeta transform: table[A] becomes the sum over subsets of A.
  for (std::size_t i = 0; i < omega; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask bits = 0; bits < count; ++bits) {
      if (bits & bit) table[bits] += table[bits ^ bit];
    }
  }
  return Capacity::from_table(space, std::move(table));
}

Distortion Distortion::power(unsigned exponent) {
  if (exponent < 1) throw InputError("distortion exponent must be at least 1");
  Distortion g;
  g.exponent_ = exponent;
  return g;
}

Distortion Distortion::piecewise(std::vector<std::pair<Rational, Rational>> breakpoints) {
  if (breakpoints.size() < 2) throw InputError("distortion needs at least two breakpoints");
  if (breakpoints.front() != std::pair<Rational, Rational>(0, 0) ||
      breakpoints.back() != std::pair<Rational, Rational>(1, 1)) {
    throw InputError("distortion must map 0 to 0 and 1 to 1");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i].first <= breakpoints[i - 1].first) {
      throw InputError("distortion breakpoints must be strictly increasing");
    }
    if (breakpoints[i].second < breakpoints[i - 1].second) throw InputError("distortion is not monotone");
  }
  Distortion g;
  g.breakpoints_ = std::move(breakpoints);
  return g;
}

Rational Distortion::operator()(const Rational& t) const {
  if (!in_unit_range(t)) throw InputError("distortion argument outside [0, 1]");
  if (is_power()) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), t.get_num_mpz_t(), exponent_);
    mpz_pow_ui(den.get_mpz_t(), t.get_den_mpz_t(), exponent_);
    return Rational(num, den);
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    const auto& [x1, y1] = breakpoints_[i];
    if (t <= x1) {
      const auto& [x0, y0] = breakpoints_[i - 1];
      return Rational(y0 + (t - x0) * (y1 - y0) / (x1 - x0));
    }
  }
  return 1;
}

Capacity distort(const ProbabilityMeasure& p, const Distortion& g) {
  auto table = probability_table(p);
  for (auto& value : table) value = g(value);
  return Capacity::from_table(p.space(), std::move(table));
}

Rational choquet(const Capacity& nu, const RandomVariable& g) {
  if (!(g.space() == nu.space())) throw InputError("capacity and variable belong to different spaces");
  for (const auto& v : g.values()) {
    if (!in_unit_range(v)) throw InputError("Choquet integrand value " + to_string(v) + " outside [0, 1]");
  }
  return detail::integrate_levels(g.values(), [&](Mask upper) { return nu.at(upper); });
}

namespace {

void check_same_space(const Capacity& nu, const UncertaintyDegree& r, const Event& h) {
  nu.space().check(h);
  if (!(r.space() == nu.space())) throw InputError("capacity and uncertainty degree belong to different spaces");
}

ClampedInterval clamp_to_unit(Rational lo, Rational hi) {
  ClampedInterval out;
  if (hi > 1) {
    hi = 1;
    out.clamped = true;
  }
  out.value = Interval(std::move(lo), std::move(hi));
  return out;
}

}  // namespace

ClampedInterval capacity_interval(const Capacity& nu, const UncertaintyDegree& r, const Event& h) {
  check_same_space(nu, r, h);
  Rational lo = nu(h);
  Rational hi = lo + choquet(nu, uncertainty_variable(nu.space(), h, r));
  return clamp_to_unit(std::move(lo), std::move(hi));
}

ClampedInterval capacity_interval_prime(const Capacity& nu, const UncertaintyDegree& r, const Event& h) {
  check_same_space(nu, r, h);
  const Mask base = h.bits();
  const Mask ind = indecisive_set(nu.space(), h).bits();
  Rational hi = detail::integrate_levels(r.values(), [&](Mask upper) { return nu.at(base | (ind & upper)); });
  return clamp_to_unit(nu(h), std::move(hi));
}

AdditivityReport is_superadditive(const Capacity& nu) {
  const auto& space = nu.space();
  const auto omega = space.omega_size();
  if (omega > kMaxPairSweepOmega) throw InputError("space too large for the disjoint-pair sweep");
  auto& state = *nu.state_;
  std::call_once(state.sweep_once, [&] {
    const auto& table = state.table;
    const Mask count = Mask{1} << omega;
    AdditivityReport report;
    Rational sum;
    for (Mask both = 1; both < count; ++both) {
      // Each unordered split {a, b} of `both` with a, b nonempty, visited once
      // by requiring a to hold the lowest element.
      const Mask lowest = both & (~both + 1);
      const Mask rest = both ^ lowest;
      for (Mask sub = rest;; sub = (sub - 1) & rest) {
        const Mask a = lowest | sub;
        const Mask b = both ^ a;
        if (b != 0) {
          sum = table[a] + table[b];
          if (report.superadditive && sum > table[both]) {
            report.superadditive = false;
            report.superadditivity_witness.emplace(space.event(a), space.event(b));
          }
          if (report.subadditive && sum < table[both]) {
            report.subadditive = false;
            report.subadditivity_witness.emplace(space.event(a), space.event(b));
          }
        }
        if (sub == 0) break;
      }
      if (!report.superadditive && !report.subadditive) break;
    }
    state.sweep = std::move(report);
  });
  return state.sweep;
}

}  // namespace ipm
