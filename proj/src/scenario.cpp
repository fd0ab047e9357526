#include "ipm/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ipm/error.hpp"

namespace ipm {

namespace {

using nlohmann::json;

const json& member(const json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) throw InputError(std::string("scenario is missing \"") + key + "\"");
  return *it;
}

void expect(bool condition, const std::string& message) {
  if (!condition) throw InputError(message);
}

Rational rational_of(const json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw InputError(where + ": rationals are written as \"p/q\" strings");
}

std::string canonical(const Space& space, const json& value, const std::string& where) {
  expect(value.is_string(), where + ": eventualities are strings");
  return space.eventuality_name(space.parse_eventuality(value.get<std::string>()));
}

std::map<std::string, Rational> eventuality_map(const Space& space, const json& object, const std::string& where) {
  expect(object.is_object(), where + " must be an object");
  std::map<std::string, Rational> out;
  for (const auto& [key, value] : object.items()) {
    const auto name = canonical(space, key, where);
    expect(!out.contains(name), where + ": eventuality " + name + " given twice");
    out.emplace(name, rational_of(value, where + "." + key));
  }
  return out;
}

std::vector<std::string> eventuality_list(const Space& space, const json& array, const std::string& where) {
  expect(array.is_array(), where + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : array) out.push_back(canonical(space, item, where));
  return out;
}

CapacitySpec capacity_spec(const Space& space, const json& object, const std::string& where) {
  expect(object.is_object() && object.size() == 1,
         where + " must have exactly one of \"table\", \"belief_mass\", \"distortion\"");
  CapacitySpec spec;
  if (const auto it = object.find("table"); it != object.end()) {
    expect(it->is_array(), where + ".table must be an array");
    std::vector<Rational> table;
    for (const auto& v : *it) table.push_back(rational_of(v, where + ".table"));
    spec.table = std::move(table);
  } else if (const auto it = object.find("belief_mass"); it != object.end()) {
    expect(it->is_array(), where + ".belief_mass must be an array");
    std::vector<std::pair<std::vector<std::string>, Rational>> masses;
    for (const auto& focal : *it) {
      expect(focal.is_object(), where + ".belief_mass entries are objects");
      masses.emplace_back(eventuality_list(space, member(focal, "event"), where + ".belief_mass.event"),
                          rational_of(member(focal, "mass"), where + ".belief_mass.mass"));
    }
    spec.belief_mass = std::move(masses);
  } else if (const auto it = object.find("distortion"); it != object.end()) {
    expect(it->is_object() && it->size() == 1, where + ".distortion needs one of \"power\", \"breakpoints\"");
    if (const auto k = it->find("power"); k != it->end()) {
      expect(k->is_number_unsigned(), where + ".distortion.power must be a positive integer");
      spec.power = k->get<unsigned>();
    } else if (const auto b = it->find("breakpoints"); b != it->end()) {
      expect(b->is_array(), where + ".distortion.breakpoints must be an array");
      std::vector<std::pair<Rational, Rational>> points;
      for (const auto& point : *b) {
        expect(point.is_array() && point.size() == 2, where + ".distortion.breakpoints entries are [x, y]");
        points.emplace_back(rational_of(point[0], where), rational_of(point[1], where));
      }
      spec.breakpoints = std::move(points);
    } else {
      throw InputError(where + ".distortion needs one of \"power\", \"breakpoints\"");
    }
  } else {
    throw InputError(where + " must have exactly one of \"table\", \"belief_mass\", \"distortion\"");
  }
  return spec;
}

json rational_map_json(const std::map<std::string, Rational>& values) {
  json out = json::object();
  for (const auto& [name, value] : values) out[name] = to_string(value);
  return out;
}

Space space_of(const Scenario& scenario) { return Space(scenario.n, scenario.e_labels); }

std::vector<Rational> dense(const Space& space, const std::map<std::string, Rational>& values, bool total,
                            const Rational& fill, const std::string& what) {
  std::vector<Rational> out(space.omega_size(), fill);
  for (const auto& [name, value] : values) out[space.parse_eventuality(name)] = value;
  if (total) expect(values.size() == space.omega_size(), what + " must give a value for every eventuality");
  return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scenario is not valid JSON: ") + e.what());
  }
  expect(doc.is_object(), "scenario must be a JSON object");
  static const std::set<std::string> known = {"n", "e_labels", "mass", "r", "events", "variables", "capacities"};
  for (const auto& [key, value] : doc.items()) expect(known.contains(key), "unknown scenario field \"" + key + "\"");

  Scenario s;
  const auto& n = member(doc, "n");
  expect(n.is_number_integer(), "\"n\" must be an integer");
  s.n = n.get<int>();
  const auto& labels = member(doc, "e_labels");
  expect(labels.is_array(), "\"e_labels\" must be an array");
  for (const auto& label : labels) {
    expect(label.is_string(), "\"e_labels\" entries are strings");
    s.e_labels.push_back(label.get<std::string>());
  }
  const Space space = space_of(s);

  s.mass = eventuality_map(space, member(doc, "mass"), "mass");
  if (const auto it = doc.find("r"); it != doc.end()) s.r = eventuality_map(space, *it, "r");
  if (const auto it = doc.find("events"); it != doc.end()) {
    expect(it->is_object(), "\"events\" must be an object");
    for (const auto& [name, list] : it->items()) s.events[name] = eventuality_list(space, list, "events." + name);
  }
  if (const auto it = doc.find("variables"); it != doc.end()) {
    expect(it->is_object(), "\"variables\" must be an object");
    for (const auto& [name, values] : it->items()) {
      s.variables[name] = eventuality_map(space, values, "variables." + name);
    }
  }
  if (const auto it = doc.find("capacities"); it != doc.end()) {
    expect(it->is_object(), "\"capacities\" must be an object");
    for (const auto& [name, spec] : it->items()) {
      s.capacities[name] = capacity_spec(space, spec, "capacities." + name);
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read scenario file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

std::string serialize_scenario(const Scenario& s) {
  json doc = json::object();
  doc["n"] = s.n;
  doc["e_labels"] = s.e_labels;
  doc["mass"] = rational_map_json(s.mass);
  if (s.r) doc["r"] = rational_map_json(*s.r);
  if (!s.events.empty()) doc["events"] = s.events;
  if (!s.variables.empty()) {
    json variables = json::object();
    for (const auto& [name, values] : s.variables) variables[name] = rational_map_json(values);
    doc["variables"] = variables;
  }
  if (!s.capacities.empty()) {
    json capacities = json::object();
    for (const auto& [name, spec] : s.capacities) {
      json entry = json::object();
      if (spec.table) {
        json table = json::array();
        for (const auto& v : *spec.table) table.push_back(to_string(v));
        entry["table"] = table;
      } else if (spec.belief_mass) {
        json masses = json::array();
        for (const auto& [event, mass] : *spec.belief_mass) masses.push_back({{"event", event}, {"mass", to_string(mass)}});
        entry["belief_mass"] = masses;
      } else if (spec.power) {
        entry["distortion"] = {{"power", *spec.power}};
      } else if (spec.breakpoints) {
        json points = json::array();
        for (const auto& [x, y] : *spec.breakpoints) points.push_back({to_string(x), to_string(y)});
        entry["distortion"] = {{"breakpoints", points}};
      }
      capacities[name] = entry;
    }
    doc["capacities"] = capacities;
  }
  return doc.dump(2) + "\n";
}

Model resolve(const Scenario& s) {
  const Space space = space_of(s);
  const ProbabilityMeasure p(space, dense(space, s.mass, false, Rational(0), "mass"));
  const UncertaintyDegree r = s.r ? UncertaintyDegree(space, dense(space, *s.r, true, Rational(0), "r"))
                                  : UncertaintyDegree::constant(space, 1);
  Model model{space, p, r, {}, {}, {}};
  for (const auto& [name, list] : s.events) model.events.emplace(name, space.parse_event(list));
  for (const auto& [name, values] : s.variables) {
    model.variables.emplace(name, RandomVariable(space, dense(space, values, true, Rational(0), "variable " + name)));
  }
  for (const auto& [name, spec] : s.capacities) {
    if (spec.table) {
      model.capacities.emplace(name, Capacity::from_table(space, *spec.table));
    } else if (spec.belief_mass) {
      std::vector<std::pair<Event, Rational>> masses;
      for (const auto& [list, mass] : *spec.belief_mass) masses.emplace_back(space.parse_event(list), mass);
      model.capacities.emplace(name, belief_from_mass(space, masses));
    } else if (spec.power) {
      model.capacities.emplace(name, distort(p, Distortion::power(*spec.power)));
    } else {
      model.capacities.emplace(name, distort(p, Distortion::piecewise(*spec.breakpoints)));
    }
  }
  return model;
}

Event lookup_event(const Model& model, const std::string& text) {
  if (const auto it = model.events.find(text); it != model.events.end()) return it->second;
  if (text == "{}") return model.space.empty_event();
  std::vector<std::string> names;
  std::string::size_type start = 0;
  while (true) {
    const auto end = text.find(';', start);
    names.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return model.space.parse_event(names);
}

}  // namespace ipm
