#include "ipm/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ipm/capacity.hpp"
#include "ipm/conditioning.hpp"
#include "ipm/dominance.hpp"
#include "ipm/error.hpp"
#include "ipm/measure.hpp"
#include "ipm/product.hpp"
#include "ipm/scenario.hpp"
#include "json.hpp"

namespace ipm::cli {

namespace {

using nlohmann::json;

/// An InputError that carries extra fields for the error record.
class RecordedError : public InputError {
 public:
  RecordedError(const std::string& what, json fields) : InputError(what), fields_(std::move(fields)) {}
  const json& fields() const { return fields_; }

 private:
  json fields_;
};

std::string exact(const Rational& v) { return to_string(v) + " (approx " + to_decimal(v) + ")"; }
std::string exact(const Interval& q) { return to_string(q) + " (approx " + to_decimal(q) + ")"; }

std::vector<std::string> names_of(const Space& space, const Event& h) {
  std::vector<std::string> out;
  for (const auto i : h.indices()) out.push_back(space.eventuality_name(i));
  return out;
}

Model resolve_checked(const Scenario& scenario) {
  try {
    return resolve(scenario);
  } catch (const CapacityError& e) {
    const Space space(scenario.n, scenario.e_labels);
    throw RecordedError(e.what(), {{"witness",
                                    {{"smaller", names_of(space, e.smaller())},
                                     {"larger", names_of(space, e.larger())}}}});
  }
}

Model load_model(const std::string& path) { return resolve_checked(load_scenario(path)); }

const RandomVariable& variable(const Model& model, const std::string& name) {
  const auto it = model.variables.find(name);
  if (it == model.variables.end()) throw InputError("unknown variable \"" + name + "\"");
  return it->second;
}

std::string tentative_line(const std::string& label, const TentativeInterval& q) {
  std::string line = "  " + label + " = " + exact(q.value) + " " + std::string(TentativeInterval::provenance);
  if (q.clamped) line += ", clamped";
  if (q.warning()) line += ", capacity is not super-additive";
  return line;
}

/// Evaluates a capacity-level quantity, reporting undefined cases inline.
void guarded(std::ostream& out, const std::string& label, const std::function<std::string()>& value) {
  try {
    out << value() << "\n";
  } catch (const PreconditionError& e) {
    out << "  " << label << " = undefined (" << e.what() << ")\n";
  }
}

void interval_command(std::ostream& out, const std::string& path, const std::string& event) {
  const auto model = load_model(path);
  const auto h = lookup_event(model, event);
  out << "H = " << model.space.format_event(h) << "\n";
  out << "Q_r(H) = " << exact(interval_measure(model.p, model.r, h)) << "\n";
  for (const auto& [name, nu] : model.capacities) {
    out << "capacity " << name << "\n";
    const auto q = capacity_interval(nu, model.r, h);
    out << "  Q_r^nu(H) = " << exact(q.value) << (q.clamped ? " clamped" : "") << "\n";
    const auto prime = capacity_interval_prime(nu, model.r, h);
    out << "  Q'_r(H) = " << exact(prime.value) << (prime.clamped ? " clamped" : "") << "\n";
  }
}

void condition_command(std::ostream& out, const std::string& path, const std::string& a_text,
                       const std::string& h_text, bool allow_null) {
  const auto model = load_model(path);
  const auto a = lookup_event(model, a_text);
  const auto h = lookup_event(model, h_text);
  out << "A = " << model.space.format_event(a) << "\n";
  out << "H = " << model.space.format_event(h) << "\n";
  const auto q = conditional_interval(model.p, model.r, a, h, {.allow_null_condition = allow_null});
  out << "Q_r(A|H) = " << exact(q) << "\n";
  for (const auto& [name, nu] : model.capacities) {
    out << "capacity " << name << "\n";
    guarded(out, "DS(A|H)", [&] { return "  DS(A|H) = " + exact(ds_conditional(nu, a, h)); });
    guarded(out, "DS_w(A|H)", [&] { return "  DS_w(A|H) = " + exact(ds_conditional_weak(nu, a, h)); });
    std::optional<ConditionalFunctionals> f;
    try {
      f.emplace(nu, model.r, h);
    } catch (const PreconditionError& e) {
      for (const char* label : {"Q_r^nu(A|H)", "Q_r^nu,widened(A|H)", "Q'_r(A|H)"}) {
        out << "  " << label << " = undefined (" << e.what() << ")\n";
      }
      continue;
    }
    out << tentative_line("Q_r^nu(A|H)", capacity_conditional(*f, a)) << "\n";
    out << tentative_line("Q_r^nu,widened(A|H)", capacity_conditional_widened(*f, a)) << "\n";
    out << tentative_line("Q'_r(A|H)", capacity_conditional_prime(*f, a)) << "\n";
  }
}

void print_cdf(std::ostream& out, const IntervalCdf& f) {
  const auto& b = f.breakpoints();
  const auto& segments = f.segments();
  for (std::size_t k = 0; k < segments.size(); ++k) {
    std::string range;
    if (b.empty()) {
      range = "all t";
    } else if (k == 0) {
      range = "t < " + to_string(b[0]);
    } else if (k == b.size()) {
      range = "t >= " + to_string(b[k - 1]);
    } else {
      range = to_string(b[k - 1]) + " <= t < " + to_string(b[k]);
    }
    out << range << ": " << exact(segments[k]) << "\n";
  }
}

void cdf_command(std::ostream& out, const std::string& path, const std::string& name) {
  const auto model = load_model(path);
  out << "F(t) = Q_r(" << name << " <= t)\n";
  print_cdf(out, interval_cdf(model.p, model.r, variable(model, name)));
}

void dominate_command(std::ostream& out, const std::string& path, const std::string& x_name,
                      const std::string& y_name) {
  const auto model = load_model(path);
  const auto verdict = dominates(model.p, model.r, variable(model, x_name), variable(model, y_name));
  out << x_name << " dominates " << y_name << ": " << (verdict.dominates ? "yes" : "no") << "\n";
  if (verdict.dominates) return;
  out << "failed inequality: " << to_string(verdict.failed) << "\n";
  out << "region: " << (verdict.region_from ? "[" + to_string(*verdict.region_from) : "(-inf") << ", "
      << (verdict.region_to ? to_string(*verdict.region_to) : "+inf") << ")\n";
  out << "witness t = " << exact(*verdict.witness_t) << "\n";
}

void product_command(std::ostream& out, const std::string& left_path, const std::string& right_path,
                     const std::string& event) {
  const auto left = load_model(left_path);
  const auto right = load_model(right_path);
  const auto ps = product_space(left.space, right.space);
  const Model flat{ps.flat(), product_measure(ps, left.p, right.p), UncertaintyDegree::constant(ps.flat(), 1),
                   {}, {}, {}};
  const auto h = lookup_event(flat, event);
  out << "H = " << ps.flat().format_event(h) << "\n";
  out << "Q_1 x Q_1(H) = " << exact(product_interval(ps, left.p, right.p, h)) << "\n";
  out << "Q'_1(H) = " << exact(native_interval(ps, left.p, right.p, h)) << "\n";
}

void validate_command(std::ostream& out, const std::string& path) {
  const auto model = load_model(path);
  const auto report =
      validate_imprecise(model.space, tabulate(model.space, [&](const Event& h) {
                           return interval_measure(model.p, model.r, h);
                         }));
  out << "Q_r: left endpoint additive: " << (report.lower_additive ? "yes" : "no")
      << "; widths anti-monotone: " << (report.widths_antimonotone ? "yes" : "no") << "\n";
  for (const auto& [name, nu] : model.capacities) {
    out << "capacity " << name << ": monotone, nu(empty) = 0, nu(Omega) = 1\n";
    if (model.space.omega_size() > kMaxPairSweepOmega) {
      out << "  additivity sweep skipped (|Omega| > " << kMaxPairSweepOmega << ")\n";
      continue;
    }
    const auto sweep = is_superadditive(nu);
    const auto describe = [&](const char* label, bool holds, const std::optional<std::pair<Event, Event>>& w) {
      out << "  " << label << ": " << (holds ? "yes" : "no");
      if (w) out << " (A = " << model.space.format_event(w->first) << ", B = " << model.space.format_event(w->second) << ")";
      out << "\n";
    };
    describe("super-additive", sweep.superadditive, sweep.superadditivity_witness);
    describe("sub-additive", sweep.subadditive, sweep.subadditivity_witness);
  }
  if (!report.ok()) throw RecordedError("interval measure breaks the imprecise-probability axioms", json::object());
}

void error_record(std::ostream& err, const char* kind, const std::string& message, const json& fields = json::object()) {
  json record = {{"error", kind}, {"message", message}};
  record.update(fields);
  err << record.dump() << "\n";
}

}  // namespace

std::string umbrella_demo() {
  const Space space(2, {"x0"});
  const auto p = ProbabilityMeasure::uniform(space);
  const auto h = space.parse_event({"10"});
  std::ostringstream out;
  out << "umbrella: n = 2, E = {x0}, uniform P, r = 1\n";
  out << "H = " << space.format_event(h) << "\n";
  out << "H_ind = " << space.format_event(indecisive_set(space, h)) << "\n";
  out << "H_w^c = " << space.format_event(weak_complement(space, h)) << "\n";
  out << "Q_1(H) = " << exact(interval_measure(p, UncertaintyDegree::constant(space, 1), h)) << "\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact interval probabilities on E x {0,1}^n", "ipm"};
  app.require_subcommand(1);

  std::string scenario, right, first, second;
  bool allow_null = false;
  std::function<void(std::ostream&)> action;

  auto* interval = app.add_subcommand("interval", "Q_r(H), and Q_r^nu(H), Q'_r(H) for each capacity");
  interval->add_option("scenario", scenario)->required();
  interval->add_option("event", first, "event name or ';'-separated eventualities")->required();
  interval->callback([&] { action = [&](std::ostream& out) { interval_command(out, scenario, first); }; });

  auto* condition = app.add_subcommand("condition", "Q_r(A|H) and the capacity conditionals");
  condition->add_option("scenario", scenario)->required();
  condition->add_option("A", first)->required();
  condition->add_option("H", second)->required();
  condition->add_flag("--allow-null-condition", allow_null, "accept P(H) = 0 when P(H) + E[r I_{H_ind}] > 0");
  condition->callback([&] { action = [&](std::ostream& out) { condition_command(out, scenario, first, second, allow_null); }; });

  auto* cdf = app.add_subcommand("cdf", "interval distribution function of a variable");
  cdf->add_option("scenario", scenario)->required();
  cdf->add_option("X", first)->required();
  cdf->callback([&] { action = [&](std::ostream& out) { cdf_command(out, scenario, first); }; });

  auto* dominate = app.add_subcommand("dominate", "interval stochastic dominance of X over Y");
  dominate->add_option("scenario", scenario)->required();
  dominate->add_option("X", first)->required();
  dominate->add_option("Y", second)->required();
  dominate->callback([&] { action = [&](std::ostream& out) { dominate_command(out, scenario, first, second); }; });

  auto* product = app.add_subcommand("product", "Q_1 x Q_1 and Q'_1 on the product space");
  product->add_option("left", scenario)->required();
  product->add_option("right", right)->required();
  product->add_option("event", first, "';'-separated flat eventualities such as \"x0*x0,1010\"")->required();
  product->callback([&] { action = [&](std::ostream& out) { product_command(out, scenario, right, first); }; });

  auto* validate = app.add_subcommand("validate", "axiom sweep of Q_r and capacity checks");
  validate->add_option("scenario", scenario)->required();
  validate->callback([&] { action = [&](std::ostream& out) { validate_command(out, scenario); }; });

  auto* demo = app.add_subcommand("demo", "bundled fixtures");
  demo->add_option("name", first)->required()->check(CLI::IsMember({"umbrella"}));
  demo->callback([&] { action = [&](std::ostream& out) { out << umbrella_demo(); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error_record(err, "input", e.what());
    return kExitInput;
  }

  std::ostringstream result;
  try {
    action(result);
  } catch (const RecordedError& e) {
    error_record(err, "input", e.what(), e.fields());
    return kExitInput;
  } catch (const InputError& e) {
    error_record(err, "input", e.what());
    return kExitInput;
  } catch (const PreconditionError& e) {
    error_record(err, "precondition", e.what());
    return kExitPrecondition;
  }
  out << result.str();
  return kExitOk;
}

}  // namespace ipm::cli
