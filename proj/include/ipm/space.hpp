#ifndef IPM_SPACE_HPP
#define IPM_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ipm {

using Mask = std::uint64_t;

/// Largest supported |Omega|; events are 64-bit masks.
inline constexpr std::size_t kMaxOmegaSize = 64;

/// A set of eventualities of one Space, stored as a bitmask over the space's
/// canonical eventuality index.
class Event {
 public:
  Event() = default;
  Event(std::uint64_t space_id, Mask bits) : space_id_(space_id), bits_(bits) {}

  std::uint64_t space_id() const { return space_id_; }
  Mask bits() const { return bits_; }

  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool contains(std::size_t index) const { return index < 64 && ((bits_ >> index) & 1U) != 0; }
  bool subset_of(const Event& other) const;
  bool disjoint_from(const Event& other) const;
  /// Member indices in increasing order.
  std::vector<std::size_t> indices() const;

  friend Event operator|(const Event& a, const Event& b);
  friend Event operator&(const Event& a, const Event& b);
  /// Set difference a \ b.
  friend Event operator-(const Event& a, const Event& b);
  friend bool operator==(const Event& a, const Event& b) = default;

 private:
  std::uint64_t space_id_ = 0;
  Mask bits_ = 0;
};

/// The product space Omega = E x {0,1}^n with its partition into
/// incompatibility classes Z_j = E x {w, w*}, w* the bitwise negation of w.
///
/// Eventuality (x, w) has canonical index e_index(x) * 2^n + value(w), where
/// the bit sequence w is read most-significant-first. Class j is represented by
/// its member sequence starting with 0, and classes are ordered by that
/// representative, so the class of w has index value(w) or value(w*),
/// whichever is below 2^(n-1).
///
/// Space is a cheap handle to immutable shared state; copies compare equal.
class Space {
 public:
  /// Throws InputError for n == 0, empty or duplicate labels, or
  /// |E| * 2^n > kMaxOmegaSize.
  Space(int n, std::vector<std::string> labels);

  std::uint64_t id() const;
  int n() const;
  const std::vector<std::string>& labels() const;
  std::size_t omega_size() const;

  std::size_t index(std::size_t label_index, std::uint32_t pattern) const;
  std::size_t label_index(std::size_t index) const;
  std::uint32_t pattern(std::size_t index) const;
  std::uint32_t negate(std::uint32_t pattern) const;
  /// The eventuality (x, w*) for index (x, w).
  std::size_t negation(std::size_t index) const;

  const std::vector<Event>& z_classes() const;
  std::size_t z_class_of(std::size_t index) const;

  Event empty_event() const { return Event(id(), 0); }
  Event full_event() const;
  /// Throws InputError if bits mention indices outside Omega.
  Event event(Mask bits) const;
  Event event(const std::vector<std::size_t>& indices) const;
  Event singleton(std::size_t index) const;
  Event complement(const Event& h) const;
  /// E x {pattern}.
  Event pattern_event(std::uint32_t pattern) const;

  /// Throws InputError unless h belongs to this space.
  void check(const Event& h) const;
  bool owns(const Event& h) const;

  /// "label,bits", e.g. "x0,10".
  std::string eventuality_name(std::size_t index) const;
  std::string pattern_string(std::uint32_t pattern) const;
  /// Parses a bit string of length n; throws InputError otherwise.
  std::uint32_t parse_pattern(std::string_view bits) const;
  /// Accepts "label,bits"; when |E| == 1 the bare bit string is accepted too.
  std::size_t parse_eventuality(std::string_view text) const;
  Event parse_event(const std::vector<std::string>& names) const;
  std::vector<std::string> event_names(const Event& h) const;
  /// "{x0,00, x0,11}".
  std::string format_event(const Event& h) const;

  friend bool operator==(const Space& a, const Space& b) { return a.id() == b.id(); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

Space build_space(int n, std::vector<std::string> labels);

/// H_ind: union of the incompatibility classes disjoint from h.
Event indecisive_set(const Space& space, const Event& h);

/// H^c \ H_ind: the eventualities incompatible with every member of h.
Event weak_complement(const Space& space, const Event& h);

}  // namespace ipm

#endif  // IPM_SPACE_HPP
