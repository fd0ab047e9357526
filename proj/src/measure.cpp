#include "ipm/measure.hpp"

#include <algorithm>

#include "ipm/error.hpp"

namespace ipm {

// RandomVariable / UncertaintyDegree

RandomVariable::RandomVariable(Space space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.omega_size()) throw InputError("random variable must have one value per eventuality");
}

RandomVariable RandomVariable::constant(const Space& space, const Rational& value) {
  return RandomVariable(space, std::vector<Rational>(space.omega_size(), value));
}

RandomVariable RandomVariable::indicator(const Space& space, const Event& h) {
  space.check(h);
  std::vector<Rational> values(space.omega_size(), Rational(0));
  for (auto i : h.indices()) values[i] = 1;
  return RandomVariable(space, std::move(values));
}

Event RandomVariable::at_most(const Rational& t) const {
  Mask bits = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] <= t) bits |= Mask{1} << i;
  }
  return space_.event(bits);
}

std::vector<Rational> RandomVariable::attained_values() const {
  std::vector<Rational> out = values_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UncertaintyDegree::UncertaintyDegree(Space space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.omega_size()) throw InputError("uncertainty degree must have one value per eventuality");
  for (const auto& v : values_) {
    if (!in_unit_range(v)) throw InputError("uncertainty degree " + to_string(v) + " outside [0, 1]");
  }
}

UncertaintyDegree UncertaintyDegree::constant(const Space& space, const Rational& value) {
  return UncertaintyDegree(space, std::vector<Rational>(space.omega_size(), value));
}

bool UncertaintyDegree::is_constant_one() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 1; });
}

// ProbabilityMeasure

ProbabilityMeasure::ProbabilityMeasure(Space space, std::vector<Rational> masses)
    : space_(std::move(space)), masses_(std::move(masses)) {
  if (masses_.size() != space_.omega_size()) throw InputError("measure must have one mass per eventuality");
  Rational total = 0;
  for (const auto& m : masses_) {
    if (m < 0) throw InputError("negative mass " + to_string(m));
    total += m;
  }
  if (total != 1) throw InputError("masses sum to " + to_string(total) + ", not 1");
}

ProbabilityMeasure ProbabilityMeasure::uniform(const Space& space) {
  return ProbabilityMeasure(space,
                            std::vector<Rational>(space.omega_size(), Rational(1, space.omega_size())));
}

Rational ProbabilityMeasure::probability(const Event& h) const {
  space_.check(h);
  Rational total = 0;
  for (auto i : h.indices()) total += masses_[i];
  return total;
}

Rational expectation(const ProbabilityMeasure& p, const RandomVariable& v) {
  if (!(p.space() == v.space())) throw InputError("measure and variable belong to different spaces");
  Rational total = 0;
  for (std::size_t i = 0; i < v.values().size(); ++i) total += p.mass(i) * v[i];
  return total;
}

Interval interval_measure(const ProbabilityMeasure& p, const UncertaintyDegree& r, const Event& h) {
  const auto& space = p.space();
  if (!(r.space() == space)) throw InputError("measure and uncertainty degree belong to different spaces");
  Rational lo = p.probability(h);
  Rational hi = lo + expectation(p, uncertainty_variable(space, h, r));
  return Interval(std::move(lo), std::move(hi));
}

Rational marginal_mass(const ProbabilityMeasure& p, std::uint32_t pattern) {
  const auto& space = p.space();
  if (pattern >= (1U << space.n())) throw InputError("bit pattern out of range");
  return p.probability(space.pattern_event(pattern));
}

Rational marginal_mass(const ProbabilityMeasure& p, std::string_view bits) {
  return marginal_mass(p, p.space().parse_pattern(bits));
}

std::vector<Interval> tabulate(const Space& space, const std::function<Interval(const Event&)>& q) {
  if (space.omega_size() > kMaxExhaustiveOmega) throw InputError("space too large for exhaustive tabulation");
  const Mask count = Mask{1} << space.omega_size();
  std::vector<Interval> table;
  table.reserve(count);
  for (Mask bits = 0; bits < count; ++bits) table.push_back(q(space.event(bits)));
  return table;
}

ValidationReport validate_imprecise(const Space& space, const std::vector<Interval>& table) {
  const auto omega = space.omega_size();
  if (omega > kMaxExhaustiveOmega) throw InputError("space too large for exhaustive validation");
  const Mask count = Mask{1} << omega;
  if (table.size() != count) throw InputError("interval table must cover every event of the space");

  ValidationReport report;
  auto flag_additivity = [&](Mask bits) {
    report.lower_additive = false;
    ++report.additivity_violation_count;
    if (report.additivity_violations.size() < kMaxReportedViolations) {
      report.additivity_violations.push_back(space.event(bits));
    }
  };

  // Finite additivity on a finite space: lo(H) is the sum of lo over H's
  // singletons, lo(empty) = 0 and lo(Omega) = 1.
  if (table[0].lo() != 0) flag_additivity(0);
  for (Mask bits = 1; bits < count; ++bits) {
    const Mask rest = bits & (bits - 1);
    if (rest == 0) continue;
    const Mask lowest = bits & ~rest;
    if (table[bits].lo() != table[rest].lo() + table[lowest].lo()) flag_additivity(bits);
  }
  if (table[count - 1].lo() != 1) flag_additivity(count - 1);

  std::vector<Rational> widths;
  widths.reserve(count);
  for (const auto& q : table) widths.push_back(q.width());

  // Inclusion is generated by single-element extensions, so a clean sweep of
  // those edges settles every pair.
  bool edge_violation = false;
  for (Mask bits = 0; bits < count && !edge_violation; ++bits) {
    for (std::size_t i = 0; i < omega; ++i) {
      const Mask bigger = bits | (Mask{1} << i);
      if (bigger != bits && widths[bigger] > widths[bits]) {
        edge_violation = true;
        break;
      }
    }
  }
  if (!edge_violation) return report;

  report.widths_antimonotone = false;
  for (Mask big = 0; big < count; ++big) {
    for (Mask small = big;; small = (small - 1) & big) {
      if (widths[big] > widths[small]) {
        ++report.width_violation_count;
        if (report.width_violations.size() < kMaxReportedViolations) {
          report.width_violations.emplace_back(space.event(small), space.event(big));
        }
      }
      if (small == 0) break;
    }
  }
  return report;
}

}  // namespace ipm
