#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>
#include <vector>

#include "mrig/bessel.hpp"
#include "mrig/errors.hpp"
#include "mrig/integrals.hpp"
#include "mrig/special_graphs.hpp"
#include "oracles.hpp"

using namespace mrig;
using std::numbers::pi;

namespace {

WeightMatrix edge(double w) {
  const Edge e[] = {{0, 1, w}};
  return WeightMatrix::build(2, e);
}

WeightMatrix path3(double w12 = 1.0, double w23 = 1.0) {
  const Edge e[] = {{0, 1, w12}, {1, 2, w23}};
  return WeightMatrix::build(3, e);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void check_brackets(const Estimate& e, double target, double tol) {
  CAPTURE(e.value);
  CAPTURE(target);
  CHECK(e.error >= 0.0);
  CHECK(e.evals >= 1);
  CHECK(std::abs(e.value - target) <= std::max(e.error, tol * std::abs(target)));
}

}  // namespace

TEST_CASE("stz_rhs and gstz_rhs") {
  const std::vector<double> y11{1, 1}, y14{1, 4};
  CHECK(stz_rhs(edge(1), y11) == doctest::Approx(pi / 2 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(stz_rhs(edge(1), y14) == doctest::Approx(pi / 4 * std::exp(-2.0)).epsilon(1e-15));
  const std::vector<double> a{1, 1}, b{1, 1};
  CHECK(gstz_rhs(a, b) == doctest::Approx(pi / 2 * std::exp(-2.0)).epsilon(1e-15));
}

TEST_CASE("quad_stz_lhs") {
  const std::vector<double> y1{1};
  check_brackets(quad_stz_lhs(WeightMatrix::zero(1), y1), std::sqrt(pi / 2), 1e-8);
  const std::vector<double> y11{1, 1}, y14{1, 4};
  check_brackets(quad_stz_lhs(edge(1), y11), 0.5778636748954609, 5e-3);
  check_brackets(quad_stz_lhs(edge(1), y14), pi / 4 * std::exp(-2.0), 5e-3);
  CHECK(std::abs(quad_stz_lhs(edge(1), y14).value - 0.1062963) < 5e-3 * 0.1062963);
  const std::vector<double> y3{0.5, 2, 1.5};
  check_brackets(quad_stz_lhs(complete_graph(3, 0.7), y3), stz_rhs(complete_graph(3, 0.7), y3), 5e-3);
}

TEST_CASE("Schur coordinates agree with x coordinates") {
  const std::vector<double> y{1.3, 0.6};
  const Estimate t = quad_stz_lhs(edge(0.8), y);
  const Estimate x = quad_stz_lhs_direct(edge(0.8), y);
  CHECK(rel(t.value, x.value) < 1e-4);
  // independent Gauss-Kronrod route in x coordinates
  const double gk = testing::cone_integral_2d(0.8, [&](double x1, double x2, double sd) {
    return std::exp(-y[0] * x1 - y[1] * x2) / sd;
  });
  CHECK(rel(t.value, gk) < 1e-8);
}

TEST_CASE("quad_gstz_lhs") {
  const std::vector<double> a1{1}, b0{0};
  check_brackets(quad_gstz_lhs(WeightMatrix::zero(1), a1, b0), std::sqrt(pi / 2), 1e-8);
  const std::vector<double> a{1, 1}, z{0, 0}, b{1, 1};
  check_brackets(quad_gstz_lhs(edge(1), a, z), pi / 2 * std::exp(-1.0) * std::exp(1.0), 5e-3);
  const Estimate e = quad_gstz_lhs(edge(1), a, b);
  CHECK(std::abs(e.value / gstz_rhs(a, b) - 1.0) < 5e-3);
  const std::vector<double> a3{1, 0.5, 2}, b3{0.5, 0, 1};
  check_brackets(quad_gstz_lhs(path3(), a3, b3), gstz_rhs(a3, b3), 5e-3);
}

TEST_CASE("mc_gstz_lhs agrees within three standard errors") {
  const std::vector<double> a{1, 0.5, 2}, b{0.5, 0, 1};
  const Estimate e = mc_gstz_lhs(path3(), a, b, {31, 200000, 2});
  CHECK(e.method == EstimateMethod::MonteCarlo);
  CHECK(std::abs(e.value - gstz_rhs(a, b)) < 3 * e.error);
  const Estimate again = mc_gstz_lhs(path3(), a, b, {31, 200000, 1});
  CHECK(again.value == e.value);
  CHECK(again.error == e.error);
}

TEST_CASE("quadrature is limited to n <= 3") {
  const std::vector<double> y(4, 1.0);
  CHECK_THROWS_AS(quad_stz_lhs(WeightMatrix::zero(4), y), DimensionError);
  const std::vector<double> y2{1, 1, 1};
  CHECK_THROWS_AS(quad_stz_lhs(edge(1), y2), DimensionError);
}

TEST_CASE("tree integral: closed forms") {
  // q = 3/2, a = (1, 1), w = 1: (pi/2) prod a_i^{-3} (1 + a_1 a_2 w) = pi
  const std::vector<double> a{1, 1};
  CHECK(tree_integral_closed(edge(1), a, 1.5) == doctest::Approx(pi).epsilon(1e-13));
  // q = 1/2 reproduces the STZ value on any tree
  const std::vector<double> a3{1, 0.5, 2};
  const std::vector<double> y3{1, 0.25, 4};
  CHECK(rel(tree_integral_closed_y(path3(0.7, 1.2), y3, 0.5), stz_rhs(path3(0.7, 1.2), y3)) < 1e-13);
  // n = 1: int_0^inf e^{-a^2 x} (2x)^{q-1} dx
  for (double q : {0.3, 1.0, 2.5}) {
    const std::vector<double> a1{1.7};
    const double direct = std::pow(2.0, q - 1) * std::tgamma(q) / std::pow(1.7, 2 * q);
    CHECK(rel(tree_integral_closed(WeightMatrix::zero(1), a1, q), direct) < 1e-13);
  }
}

TEST_CASE("tree integral: quadrature") {
  const std::vector<double> y2{1, 1};
  for (double q : {0.5, 1.0, 1.5}) {
    CAPTURE(q);
    check_brackets(quad_tree_integral(edge(1), y2, q), tree_integral_closed_y(edge(1), y2, q), 5e-3);
  }
  // q = 1 removes the determinant; the K_1 closed form
  const double k1 = testing::gk([](double x) { return std::exp(-x - 0.25 / x); }, 0.0,
                                 std::numeric_limits<double>::infinity());
  CHECK(rel(tree_integral_closed_y(edge(1), y2, 1.0), k1) < 1e-10);
  CHECK(rel(k1, bessel_k(1.0, 1.0)) < 1e-10);
  CHECK(rel(quad_tree_integral(edge(1), y2, 0.5).value, quad_stz_lhs(edge(1), y2).value) < 1e-12);
  const std::vector<double> y3{1, 0.25, 4};
  check_brackets(quad_tree_integral(path3(), y3, 1.0), tree_integral_closed_y(path3(), y3, 1.0), 5e-3);
}

TEST_CASE("tree integral: preconditions") {
  const std::vector<double> y3{1, 1, 1};
  CHECK_THROWS_AS(tree_integral_closed_y(complete_graph(3, 1), y3, 1.0), std::invalid_argument);
  const Edge forest[] = {{0, 1, 1.0}};
  CHECK_THROWS_AS(tree_integral_closed_y(WeightMatrix::build(3, forest), y3, 1.0), std::invalid_argument);
  const std::vector<double> y2{1, 1};
  CHECK_THROWS_AS(tree_integral_closed_y(edge(1), y2, 0.0), std::domain_error);
  CHECK_THROWS_AS(quad_tree_integral(edge(1), y2, -1.0), std::domain_error);
}

TEST_CASE("orthant: n = 1 is one half") {
  const std::vector<double> x{0.8};
  const ConePoint p = ConePoint::make(WeightMatrix::zero(1), x);
  CHECK(orthant_via_convolution(WeightMatrix::zero(1), p).value == doctest::Approx(0.5).epsilon(1e-10));
  const Estimate mc = orthant_mc(WeightMatrix::zero(1), p, {5, 100000, 1});
  CHECK(std::abs(mc.value - 0.5) < 3 * mc.error);
}

TEST_CASE("orthant: n = 2 arccos identity") {
  for (const auto& [w, x1, x2] : {std::tuple{1.0, 1.0, 1.0}, std::tuple{0.5, 0.3, 2.0}, std::tuple{1.9, 1.0, 1.0},
                                   std::tuple{0.1, 4.0, 0.2}}) {
    const std::vector<double> x{x1, x2};
    const ConePoint p = ConePoint::make(edge(w), x);
    const double ref = std::acos(w / (2 * std::sqrt(x1 * x2))) / (2 * pi);
    CHECK(orthant_arccos(edge(w), p) == doctest::Approx(ref).epsilon(1e-15));
    CHECK(std::abs(orthant_via_convolution(edge(w), p).value - ref) < 1e-8);
  }
}

TEST_CASE("orthant: W = 0 gives 2^-n") {
  const std::vector<double> x{0.5, 1.5, 3.0};
  const ConePoint p = ConePoint::make(WeightMatrix::zero(3), x);
  CHECK(orthant_via_convolution(WeightMatrix::zero(3), p).value == doctest::Approx(0.125).epsilon(1e-8));
  const Estimate mc = orthant_mc(WeightMatrix::zero(3), p, {6, 200000, 1});
  CHECK(std::abs(mc.value - 0.125) < 3 * mc.error);
}

TEST_CASE("orthant: n = 2 at unit variances") {
  // 2x = 1 gives unit variances and correlation cos(beta); Pr = (pi - beta) / (2 pi) with beta = arccos(-rho).
  const double beta = 1.1;
  const WeightMatrix g = edge(std::cos(beta));
  const std::vector<double> x{0.5, 0.5};
  const ConePoint p = ConePoint::make(g, x);
  const Estimate mc = orthant_mc(g, p, {7, 400000, 1});
  CHECK(std::abs(mc.value - beta / (2 * pi)) < 3 * mc.error);
  CHECK(std::abs(orthant_via_convolution(g, p).value - beta / (2 * pi)) < 1e-8);
}

TEST_CASE("orthant: n = 3 convolution against direct Gaussian Monte Carlo") {
  const std::vector<double> x{1, 1, 1};
  const ConePoint p = ConePoint::make(path3(), x);
  const Estimate conv = orthant_via_convolution(path3(), p);
  const Estimate mc = orthant_mc(path3(), p, {8, 400000, 2});
  CHECK(std::abs(conv.value - mc.value) < 3 * std::hypot(conv.error, mc.error));
}

TEST_CASE("orthant probability decreases as a weight grows") {
  const std::vector<double> x{1, 1, 1};
  double prev = 1.0;
  for (double w : {0.1, 0.4, 0.8, 1.2}) {
    const WeightMatrix g = path3(w, 0.5);
    const double f = orthant_via_convolution(g, ConePoint::make(g, x)).value;
    CHECK(f < prev);
    prev = f;
  }
}

TEST_CASE("orthant Laplace check") {
  const std::vector<double> y{1}, th0{0}, th3{3};
  LaplaceCheck c = orthant_laplace_check(WeightMatrix::zero(1), y, th0, {});
  CHECK(c.rhs == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(c.lhs.value - 0.5) < 1e-8 * 0.5);
  c = orthant_laplace_check(WeightMatrix::zero(1), y, th3, {});
  CHECK(c.rhs == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(std::abs(c.lhs.value - c.rhs) < 1e-8 * c.rhs);
  // closed-form inner expectation e^{theta^2 x} erfc(theta sqrt x) / 2 with B ~ N(0, 2x)
  const double independent = testing::gk(
      [](double x) { return x > 0 ? std::exp(-x) * 0.5 * std::exp(9 * x) * std::erfc(3 * std::sqrt(x)) : 0.0; }, 0.0,
      40.0);
  CHECK(rel(independent, 0.125) < 1e-10);

  const std::vector<double> y2{1, 1}, th2{1, 1};
  const LaplaceCheck c2 = orthant_laplace_check(edge(1), y2, th2, {9, 1000000, 2});
  CHECK(c2.rhs == doctest::Approx(std::exp(-1.0) / 16).epsilon(1e-15));
  CHECK(std::abs(c2.lhs.value - c2.rhs) < 3 * c2.lhs.error);
  CHECK(c2.lhs.error < 0.02 * c2.rhs);

  const std::vector<double> y3{1, 1, 1};
  CHECK_THROWS_AS(orthant_laplace_check(path3(), y3, y3, {}), DimensionError);
}

TEST_CASE("mc_laplace matches the closed form") {
  const GstzParams p({1, 0.5, 2}, {0.5, 0, 1}, path3());
  const std::vector<double> s{0.3, 1.0, -0.5};
  const Estimate e = mc_laplace(p, s, {10, 200000, 2});
  CHECK(std::abs(e.value - laplace(p, s)) < 3 * e.error);
}
