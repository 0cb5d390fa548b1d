#pragma once

#include <array>
#include <cstddef>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace mrig::detail {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

inline constexpr std::size_t kMaxNesting = 8;

// Double-exponential rules from Boost.Math.  exp_sinh handles [a, inf) with
// an integrable singularity at a; tanh_sinh handles [a, b] with integrable
// endpoint singularities.  Nested integrals use one rule object per depth and
// thread, so an inner integration never re-enters the rule of its caller.
inline boost::math::quadrature::exp_sinh<double>& half_line_rule(std::size_t depth) {
  thread_local std::array<boost::math::quadrature::exp_sinh<double>, kMaxNesting> rules;
  return rules.at(depth);
}

inline boost::math::quadrature::tanh_sinh<double>& interval_rule(std::size_t depth) {
  thread_local std::array<boost::math::quadrature::tanh_sinh<double>, kMaxNesting> rules;
  return rules.at(depth);
}

template <class F>
QuadResult integrate_half_line(const F& f, double lower, double tol, std::size_t depth = 0) {
  QuadResult r;
  double l1 = 0.0;
  r.value = half_line_rule(depth).integrate(f, lower, std::numeric_limits<double>::infinity(), tol, &r.error, &l1);
  return r;
}

// f(x, xc) where xc = a - x on the left half and b - x on the right half.
template <class F>
QuadResult integrate_interval(const F& f, double a, double b, double tol, std::size_t depth = 0) {
  QuadResult r;
  if (!(b > a)) return r;
  double l1 = 0.0;
  r.value = interval_rule(depth).integrate(f, a, b, tol, &r.error, &l1);
  return r;
}

}  // namespace mrig::detail
