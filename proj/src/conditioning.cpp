#include "ipm/conditioning.hpp"

#include "ipm/detail/levels.hpp"
#include "ipm/error.hpp"

namespace ipm {

Interval conditional_interval(const ProbabilityMeasure& p, const UncertaintyDegree& r, const Event& a,
                              const Event& h, ConditionalOptions options) {
  const auto& space = p.space();
  space.check(a);
  space.check(h);
  if (!(r.space() == space)) throw InputError("measure and uncertainty degree belong to different spaces");

  const Rational p_h = p.probability(h);
  if (p_h == 0 && !options.allow_null_condition) throw PreconditionError("P(H) = 0: cannot condition on H");

  const auto h_ind = indecisive_set(space, h);
  const auto a_ind = indecisive_set(space, a);

  Rational normalizer = 0;
  Rational lower = 0;
  Rational upper = 0;
  Rational weight_h;
  Rational weight_a;
  for (std::size_t i = 0; i < space.omega_size(); ++i) {
    weight_h = h.contains(i) ? Rational(1) : h_ind.contains(i) ? r[i] : Rational(0);
    if (weight_h == 0) continue;
    const auto& m = p.mass(i);
    normalizer += m * weight_h;
    if (a.contains(i)) lower += m * weight_h;
    weight_a = a.contains(i) ? Rational(1) : a_ind.contains(i) ? r[i] : Rational(0);
    upper += m * weight_a * weight_h;
  }
  if (normalizer == 0) throw PreconditionError("P(H) + E[r I_{H_ind}] = 0: cannot condition on H");
  return Interval(lower / normalizer, upper / normalizer);
}

namespace {

Rational ds_rule(const Capacity& nu, const Event& a_part, const Event& outside) {
  const auto& nu_out = nu(outside);
  if (nu_out == 1) throw PreconditionError("conditioning event has zero plausibility");
  return (nu(a_part | outside) - nu_out) / (1 - nu_out);
}

}  // namespace

Rational ds_conditional(const Capacity& nu, const Event& a, const Event& h) {
  const auto& space = nu.space();
  space.check(a);
  return ds_rule(nu, a & h, space.complement(h));
}

Rational ds_conditional_weak(const Capacity& nu, const Event& a, const Event& h) {
  const auto& space = nu.space();
  space.check(a);
  return ds_rule(nu, a, weak_complement(space, h));
}

ConditionalFunctionals::ConditionalFunctionals(Capacity nu, const UncertaintyDegree& r, const Event& h)
    : nu_(std::move(nu)), h_(h) {
  const auto& space = nu_.space();
  space.check(h);
  if (!(r.space() == space)) throw InputError("capacity and uncertainty degree belong to different spaces");
  if (nu_(h) == 0) throw PreconditionError("nu(H) = 0: cannot condition on H");
  h_bits_ = h.bits();
  ind_bits_ = indecisive_set(space, h).bits();
  strata_ = detail::level_strata(r.values());
  normalizer_ = i(space.full_event());
  if (space.omega_size() <= kMaxPairSweepOmega) superadditive_ = is_superadditive(nu_).superadditive;
}

Rational ConditionalFunctionals::i(const Event& b) const {
  nu_.space().check(b);
  const Mask bits = b.bits();
  return detail::integrate_levels(strata_,
                                  [&](Mask upper) { return nu_.at(bits & (h_bits_ | (ind_bits_ & upper))); });
}

Rational ConditionalFunctionals::j(const Event& b) const {
  nu_.space().check(b);
  const Mask bits = b.bits() & (h_bits_ | ind_bits_);
  return detail::integrate_levels(strata_, [&](Mask upper) { return nu_.at(bits & upper); });
}

namespace {

TentativeInterval tentative(const ConditionalFunctionals& f, Rational lo_numerator, Rational hi_numerator) {
  TentativeInterval out;
  Rational lo = lo_numerator / f.normalizer();
  Rational hi = hi_numerator / f.normalizer();
  if (hi > 1) {
    hi = 1;
    out.clamped = true;
  }
  out.value = Interval(std::move(lo), std::move(hi));
  out.superadditive = f.superadditive();
  return out;
}

}  // namespace

TentativeInterval capacity_conditional(const ConditionalFunctionals& f, const Event& a) {
  const auto a_ind = indecisive_set(f.capacity().space(), a);
  Rational base = f.i(a);
  Rational upper = base + f.j(a_ind);
  return tentative(f, std::move(base), std::move(upper));
}

TentativeInterval capacity_conditional_widened(const ConditionalFunctionals& f, const Event& a) {
  const auto a_ind = indecisive_set(f.capacity().space(), a);
  Rational base = f.i(a);
  Rational upper = base + f.i(a_ind);
  return tentative(f, std::move(base), std::move(upper));
}

TentativeInterval capacity_conditional_prime(const ConditionalFunctionals& f, const Event& a) {
  const auto& space = f.capacity().space();
  return tentative(f, f.i(a), f.i(space.complement(weak_complement(space, a))));
}

TentativeInterval capacity_conditional(const Capacity& nu, const UncertaintyDegree& r, const Event& a,
                                       const Event& h) {
  return capacity_conditional(ConditionalFunctionals(nu, r, h), a);
}

TentativeInterval capacity_conditional_widened(const Capacity& nu, const UncertaintyDegree& r, const Event& a,
                                               const Event& h) {
  return capacity_conditional_widened(ConditionalFunctionals(nu, r, h), a);
}

TentativeInterval capacity_conditional_prime(const Capacity& nu, const UncertaintyDegree& r, const Event& a,
                                             const Event& h) {
  return capacity_conditional_prime(ConditionalFunctionals(nu, r, h), a);
}

}  // namespace ipm
