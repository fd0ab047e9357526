#ifndef IPM_PRODUCT_HPP
#define IPM_PRODUCT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ipm/measure.hpp"
#include "ipm/rational.hpp"
#include "ipm/space.hpp"

namespace ipm {

/// Product of two spaces, flattened to a single space over
/// E_left x E_right (labels "left*right") and {0,1}^(n_left + n_right) (left
/// bits first), together with the coarse partition W_{ij} = Z_i x Z_j of the
/// flat space. Each W class is the union of two native classes of the flat
/// space.
class ProductSpace {
 public:
  /// Throws InputError if the flat space exceeds kMaxOmegaSize.
  ProductSpace(Space left, Space right);

  const Space& left() const { return left_; }
  const Space& right() const { return right_; }
  const Space& flat() const { return flat_; }
  /// Ordered with the left class index major: W_{ij} at i * (#right classes) + j.
  const std::vector<Event>& w_classes() const { return w_classes_; }

  std::size_t flat_index(std::size_t left_index, std::size_t right_index) const;
  /// h_left x h_right as a flat event.
  Event rectangle(const Event& h_left, const Event& h_right) const;
  /// H'_ind: union of the W classes disjoint from h.
  Event w_indecisive_set(const Event& h) const;

 private:
  Space left_;
  Space right_;
  Space flat_;
  std::vector<Event> w_classes_;
};

ProductSpace product_space(const Space& left, const Space& right);

/// P_left (x) P_right on the flat space.
ProbabilityMeasure product_measure(const ProductSpace& ps, const ProbabilityMeasure& p_left,
                                   const ProbabilityMeasure& p_right);

/// Q_1 (x) Q_1(H) = [PxP(H), PxP(H) + PxP(H'_ind)], with H'_ind taken over the
/// W classes.
Interval product_interval(const ProductSpace& ps, const ProbabilityMeasure& p_left,
                          const ProbabilityMeasure& p_right, const Event& h);

/// Q_1 of the product measure on the flat space, using its native classes.
Interval native_interval(const ProductSpace& ps, const ProbabilityMeasure& p_left,
                         const ProbabilityMeasure& p_right, const Event& h);

}  // namespace ipm

#endif  // IPM_PRODUCT_HPP
