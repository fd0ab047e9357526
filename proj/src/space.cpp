#include "ipm/space.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>

#include "ipm/error.hpp"
#include "ipm/random_variable.hpp"

namespace ipm {

namespace {

std::uint64_t next_space_id() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

void require_same_space(const Event& a, const Event& b) {
  if (a.space_id() != b.space_id()) throw InputError("events belong to different spaces");
}

}  // namespace

std::size_t Event::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

bool Event::subset_of(const Event& other) const {
  require_same_space(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

bool Event::disjoint_from(const Event& other) const {
  require_same_space(*this, other);
  return (bits_ & other.bits_) == 0;
}

std::vector<std::size_t> Event::indices() const {
  std::vector<std::size_t> out;
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

Event operator|(const Event& a, const Event& b) {
  require_same_space(a, b);
  return Event(a.space_id(), a.bits() | b.bits());
}

Event operator&(const Event& a, const Event& b) {
  require_same_space(a, b);
  return Event(a.space_id(), a.bits() & b.bits());
}

Event operator-(const Event& a, const Event& b) {
  require_same_space(a, b);
  return Event(a.space_id(), a.bits() & ~b.bits());
}

struct Space::Impl {
  std::uint64_t id;
  int n;
  std::vector<std::string> labels;
  std::size_t omega_size;
  Mask full;
  std::vector<Event> z_classes;
};

Space::Space(int n, std::vector<std::string> labels) {
  if (n < 1) throw InputError("n must be at least 1");
  if (labels.empty()) throw InputError("label set E must be nonempty");
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw InputError("empty label");
    if (label.find(',') != std::string::npos) throw InputError("label '" + label + "' contains ','");
    if (!seen.insert(label).second) throw InputError("duplicate label '" + label + "'");
  }
  if (n > 6 || labels.size() * (std::size_t{1} << n) > kMaxOmegaSize) {
    throw InputError("|E| * 2^n exceeds " + std::to_string(kMaxOmegaSize));
  }

  auto impl = std::make_shared<Impl>();
  impl->id = next_space_id();
  impl->n = n;
  impl->omega_size = labels.size() << n;
  impl->labels = std::move(labels);
  impl->full = impl->omega_size == 64 ? ~Mask{0} : (Mask{1} << impl->omega_size) - 1;

  const std::uint32_t patterns = 1U << n;
  const std::uint32_t all_ones = patterns - 1;
  for (std::uint32_t rep = 0; rep < patterns / 2; ++rep) {
    Mask bits = 0;
    for (std::size_t x = 0; x < impl->labels.size(); ++x) {
      bits |= Mask{1} << (x * patterns + rep);
      bits |= Mask{1} << (x * patterns + (rep ^ all_ones));
    }
    impl->z_classes.emplace_back(impl->id, bits);
  }
  impl_ = std::move(impl);
}

Space build_space(int n, std::vector<std::string> labels) { return Space(n, std::move(labels)); }

std::uint64_t Space::id() const { return impl_->id; }
int Space::n() const { return impl_->n; }
const std::vector<std::string>& Space::labels() const { return impl_->labels; }
std::size_t Space::omega_size() const { return impl_->omega_size; }

std::size_t Space::index(std::size_t label_index, std::uint32_t pattern) const {
  return (label_index << impl_->n) + pattern;
}

std::size_t Space::label_index(std::size_t index) const { return index >> impl_->n; }

std::uint32_t Space::pattern(std::size_t index) const {
  return static_cast<std::uint32_t>(index & ((std::size_t{1} << impl_->n) - 1));
}

std::uint32_t Space::negate(std::uint32_t pattern) const { return pattern ^ ((1U << impl_->n) - 1); }

std::size_t Space::negation(std::size_t index) const {
  return this->index(label_index(index), negate(pattern(index)));
}

const std::vector<Event>& Space::z_classes() const { return impl_->z_classes; }

std::size_t Space::z_class_of(std::size_t index) const {
  const auto p = pattern(index);
  return std::min(p, negate(p));
}

Event Space::full_event() const { return Event(id(), impl_->full); }

Event Space::event(Mask bits) const {
  if ((bits & ~impl_->full) != 0) throw InputError("event mask outside Omega");
  return Event(id(), bits);
}

Event Space::event(const std::vector<std::size_t>& indices) const {
  Mask bits = 0;
  for (auto i : indices) {
    if (i >= omega_size()) throw InputError("eventuality index " + std::to_string(i) + " outside Omega");
    bits |= Mask{1} << i;
  }
  return Event(id(), bits);
}

Event Space::singleton(std::size_t index) const { return event(std::vector<std::size_t>{index}); }

Event Space::complement(const Event& h) const {
  check(h);
  return Event(id(), impl_->full & ~h.bits());
}

Event Space::pattern_event(std::uint32_t pattern) const {
  Mask bits = 0;
  for (std::size_t x = 0; x < labels().size(); ++x) bits |= Mask{1} << index(x, pattern);
  return Event(id(), bits);
}

bool Space::owns(const Event& h) const { return h.space_id() == id() && (h.bits() & ~impl_->full) == 0; }

void Space::check(const Event& h) const {
  if (!owns(h)) throw InputError("event does not belong to this space");
}

std::string Space::pattern_string(std::uint32_t pattern) const {
  std::string out(static_cast<std::size_t>(impl_->n), '0');
  for (int i = 0; i < impl_->n; ++i) {
    if ((pattern >> (impl_->n - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::string Space::eventuality_name(std::size_t index) const {
  return labels()[label_index(index)] + "," + pattern_string(pattern(index));
}

std::uint32_t Space::parse_pattern(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(impl_->n)) {
    throw InputError("bit sequence '" + std::string(bits) + "' must have length " + std::to_string(impl_->n));
  }
  std::uint32_t pattern = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InputError("bit sequence '" + std::string(bits) + "' must contain only 0/1");
    pattern = (pattern << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return pattern;
}

std::size_t Space::parse_eventuality(std::string_view text) const {
  const auto comma = text.rfind(',');
  if (comma == std::string_view::npos) {
    if (labels().size() != 1) throw InputError("eventuality '" + std::string(text) + "' needs the form label,bits");
    return index(0, parse_pattern(text));
  }
  const auto label = text.substr(0, comma);
  const auto it = std::find(labels().begin(), labels().end(), label);
  if (it == labels().end()) throw InputError("unknown label '" + std::string(label) + "'");
  return index(static_cast<std::size_t>(it - labels().begin()), parse_pattern(text.substr(comma + 1)));
}

Event Space::parse_event(const std::vector<std::string>& names) const {
  std::vector<std::size_t> indices;
  indices.reserve(names.size());
  for (const auto& name : names) indices.push_back(parse_eventuality(name));
  return event(indices);
}

std::vector<std::string> Space::event_names(const Event& h) const {
  check(h);
  std::vector<std::string> out;
  for (auto i : h.indices()) out.push_back(eventuality_name(i));
  return out;
}

std::string Space::format_event(const Event& h) const {
  std::string out = "{";
  bool first = true;
  for (const auto& name : event_names(h)) {
    if (!first) out += ", ";
    out += name;
    first = false;
  }
  return out + "}";
}

Event indecisive_set(const Space& space, const Event& h) {
  space.check(h);
  Mask bits = 0;
  for (const auto& z : space.z_classes()) {
    if ((z.bits() & h.bits()) == 0) bits |= z.bits();
  }
  return Event(space.id(), bits);
}

Event weak_complement(const Space& space, const Event& h) {
  return space.complement(h) - indecisive_set(space, h);
}

RandomVariable uncertainty_variable(const Space& space, const Event& h, const UncertaintyDegree& r) {
  if (!(r.space() == space)) throw InputError("uncertainty degree belongs to a different space");
  const auto ind = indecisive_set(space, h);
  std::vector<Rational> values(space.omega_size(), Rational(0));
  for (auto i : ind.indices()) values[i] = r[i];
  return RandomVariable(space, std::move(values));
}

}  // namespace ipm
