#ifndef IPM_RANDOM_VARIABLE_HPP
#define IPM_RANDOM_VARIABLE_HPP

#include <cstddef>
#include <vector>

#include "ipm/rational.hpp"
#include "ipm/space.hpp"

namespace ipm {

/// A real-valued map on the eventualities of a Space.
class RandomVariable {
 public:
  /// Throws InputError if values.size() != space.omega_size().
  RandomVariable(Space space, std::vector<Rational> values);

  static RandomVariable constant(const Space& space, const Rational& value);
  static RandomVariable indicator(const Space& space, const Event& h);

  const Space& space() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t index) const { return values_[index]; }

  /// {X <= t}.
  Event at_most(const Rational& t) const;
  /// Sorted distinct values.
  std::vector<Rational> attained_values() const;

  friend bool operator==(const RandomVariable& a, const RandomVariable& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  Space space_;
  std::vector<Rational> values_;
};

/// Degree of uncertainty r: Omega -> [0, 1].
class UncertaintyDegree {
 public:
  /// Throws InputError on size mismatch or values outside [0, 1].
  UncertaintyDegree(Space space, std::vector<Rational> values);

  static UncertaintyDegree constant(const Space& space, const Rational& value);

  const Space& space() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t index) const { return values_[index]; }
  bool is_constant_one() const;

  RandomVariable as_variable() const { return RandomVariable(space_, values_); }

 private:
  Space space_;
  std::vector<Rational> values_;
};

/// Y_H = I_{H_ind} * r, the r-uncertainty of h; zero when H_ind is empty.
RandomVariable uncertainty_variable(const Space& space, const Event& h, const UncertaintyDegree& r);

}  // namespace ipm

#endif  // IPM_RANDOM_VARIABLE_HPP
