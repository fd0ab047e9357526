#ifndef IPM_SCENARIO_HPP
#define IPM_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ipm/capacity.hpp"
#include "ipm/measure.hpp"
#include "ipm/random_variable.hpp"
#include "ipm/rational.hpp"
#include "ipm/space.hpp"

namespace ipm {

/// One entry of a scenario's "capacities" object. Exactly one form is set.
struct CapacitySpec {
  /// {"table": ["p/q", ...]}, indexed by event mask.
  std::optional<std::vector<Rational>> table;
  /// {"belief_mass": [{"event": [...], "mass": "p/q"}, ...]}.
  std::optional<std::vector<std::pair<std::vector<std::string>, Rational>>> belief_mass;
  /// {"distortion": {"power": k}} applied to the scenario's mass.
  std::optional<unsigned> power;
  /// {"distortion": {"breakpoints": [["x", "y"], ...]}}.
  std::optional<std::vector<std::pair<Rational, Rational>>> breakpoints;

  friend bool operator==(const CapacitySpec&, const CapacitySpec&) = default;
};

/// A scenario document as written, before resolution against its space.
/// Eventuality keys are stored in canonical "label,bits" form.
struct Scenario {
  int n = 1;
  std::vector<std::string> e_labels;
  /// Missing eventualities carry mass 0.
  std::map<std::string, Rational> mass;
  /// Absent means r = 1 everywhere; present must cover every eventuality.
  std::optional<std::map<std::string, Rational>> r;
  std::map<std::string, std::vector<std::string>> events;
  /// Each variable must cover every eventuality.
  std::map<std::string, std::map<std::string, Rational>> variables;
  std::map<std::string, CapacitySpec> capacities;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses a scenario from JSON text. Throws InputError on malformed
/// documents or on eventuality strings outside the declared space.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
/// Pretty-printed JSON with rationals as canonical "p/q" strings.
std::string serialize_scenario(const Scenario& scenario);

/// The objects a scenario describes.
struct Model {
  Space space;
  ProbabilityMeasure p;
  UncertaintyDegree r;
  std::map<std::string, Event> events;
  std::map<std::string, RandomVariable> variables;
  std::map<std::string, Capacity> capacities;
};

/// Builds the space, measure, degree, events, variables and capacities.
/// Throws InputError (CapacityError for bad tables) on invariant violations.
Model resolve(const Scenario& scenario);

/// A named event of the model, or else a ';'-separated eventuality list
/// ("x0,10;x0,01"). "{}" is the empty event.
Event lookup_event(const Model& model, const std::string& text);

}  // namespace ipm

#endif  // IPM_SCENARIO_HPP
