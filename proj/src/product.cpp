#include "ipm/product.hpp"

#include "ipm/error.hpp"

namespace ipm {

namespace {

Space make_flat(const Space& left, const Space& right) {
  if (left.omega_size() * right.omega_size() > kMaxOmegaSize) {
    throw InputError("flat product space exceeds " + std::to_string(kMaxOmegaSize) + " eventualities");
  }
  std::vector<std::string> labels;
  for (const auto& l : left.labels()) {
    for (const auto& r : right.labels()) labels.push_back(l + "*" + r);
  }
  return Space(left.n() + right.n(), std::move(labels));
}

}  // namespace

ProductSpace::ProductSpace(Space left, Space right)
    : left_(std::move(left)), right_(std::move(right)), flat_(make_flat(left_, right_)) {
  for (const auto& zl : left_.z_classes()) {
    for (const auto& zr : right_.z_classes()) w_classes_.push_back(rectangle(zl, zr));
  }
}

ProductSpace product_space(const Space& left, const Space& right) { return ProductSpace(left, right); }

std::size_t ProductSpace::flat_index(std::size_t left_index, std::size_t right_index) const {
  const auto label = left_.label_index(left_index) * right_.labels().size() + right_.label_index(right_index);
  const auto pattern = (left_.pattern(left_index) << right_.n()) | right_.pattern(right_index);
  return flat_.index(label, pattern);
}

Event ProductSpace::rectangle(const Event& h_left, const Event& h_right) const {
  left_.check(h_left);
  right_.check(h_right);
  Mask bits = 0;
  for (auto i : h_left.indices()) {
    for (auto j : h_right.indices()) bits |= Mask{1} << flat_index(i, j);
  }
  return flat_.event(bits);
}

Event ProductSpace::w_indecisive_set(const Event& h) const {
  flat_.check(h);
  Mask bits = 0;
  for (const auto& w : w_classes_) {
    if ((w.bits() & h.bits()) == 0) bits |= w.bits();
  }
  return flat_.event(bits);
}

ProbabilityMeasure product_measure(const ProductSpace& ps, const ProbabilityMeasure& p_left,
                                   const ProbabilityMeasure& p_right) {
  if (!(p_left.space() == ps.left()) || !(p_right.space() == ps.right())) {
    throw InputError("factor measures do not match the product's factor spaces");
  }
  std::vector<Rational> masses(ps.flat().omega_size(), Rational(0));
  for (std::size_t i = 0; i < ps.left().omega_size(); ++i) {
    for (std::size_t j = 0; j < ps.right().omega_size(); ++j) {
      masses[ps.flat_index(i, j)] = p_left.mass(i) * p_right.mass(j);
    }
  }
  return ProbabilityMeasure(ps.flat(), std::move(masses));
}

Interval product_interval(const ProductSpace& ps, const ProbabilityMeasure& p_left,
                          const ProbabilityMeasure& p_right, const Event& h) {
  const auto pp = product_measure(ps, p_left, p_right);
  Rational lo = pp.probability(h);
  Rational hi = lo + pp.probability(ps.w_indecisive_set(h));
  return Interval(std::move(lo), std::move(hi));
}

Interval native_interval(const ProductSpace& ps, const ProbabilityMeasure& p_left,
                         const ProbabilityMeasure& p_right, const Event& h) {
  const auto pp = product_measure(ps, p_left, p_right);
  return interval_measure(pp, UncertaintyDegree::constant(ps.flat(), 1), h);
}

}  // namespace ipm
