#include <doctest.h>

#include <cmath>
#include <vector>

#include "mrig/cone.hpp"
#include "mrig/errors.hpp"
#include "mrig/special_graphs.hpp"
#include "mrig/weight_matrix.hpp"
#include "oracles.hpp"

using namespace mrig;

namespace {

WeightMatrix single_edge() {
  const Edge e[] = {{0, 1, 1.0}};
  return WeightMatrix::build(2, e);
}

WeightMatrix unit_path3() {
  const Edge e[] = {{0, 1, 1.0}, {1, 2, 1.0}};
  return WeightMatrix::build(3, e);
}

GraphError::Kind build_error(std::size_t n, std::vector<Edge> edges) {
  try {
    WeightMatrix::build(n, edges);
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("expected GraphError");
  return GraphError::Kind::InvalidWeight;
}

}  // namespace

TEST_CASE("build: single edge") {
  const WeightMatrix w = single_edge();
  CHECK(w.size() == 2);
  CHECK(w(0, 1) == 1.0);
  CHECK(w(1, 0) == 1.0);
  CHECK(w(0, 0) == 0.0);
  CHECK(w.connected());
  CHECK(w.is_tree());
  CHECK(w.degrees() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("build: empty graph on three vertices") {
  const WeightMatrix w = WeightMatrix::build(3, {});
  CHECK_FALSE(w.connected());
  CHECK_FALSE(w.is_tree());
  CHECK(w.degrees() == std::vector<std::size_t>{0, 0, 0});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(w(i, j) == 0.0);
}

TEST_CASE("build: star is a tree with center degree 3") {
  const Edge e[] = {{0, 1, 0.5}, {0, 2, 1.5}, {0, 3, 2.0}};
  const WeightMatrix w = WeightMatrix::build(4, e);
  CHECK(w.is_tree());
  CHECK(w.degrees() == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK(max_abs_diff(w.dense(), daisy(std::vector<double>{0.5, 1.5, 2.0}).dense()) == 0.0);
}

TEST_CASE("build: each malformed input has its own rejection") {
  CHECK(build_error(3, {{0, 1, 1.0}, {0, 1, 2.0}}) == GraphError::Kind::DuplicateEdge);
  CHECK(build_error(3, {{0, 1, -1.0}}) == GraphError::Kind::InvalidWeight);
  CHECK(build_error(3, {{0, 1, 0.0}}) == GraphError::Kind::InvalidWeight);
  CHECK(build_error(3, {{0, 1, NAN}}) == GraphError::Kind::InvalidWeight);
  CHECK(build_error(3, {{0, 3, 1.0}}) == GraphError::Kind::IndexOutOfRange);
  CHECK(build_error(3, {{1, 0, 1.0}}) == GraphError::Kind::IndexOutOfRange);
  CHECK(build_error(3, {{1, 1, 1.0}}) == GraphError::Kind::IndexOutOfRange);
}

TEST_CASE("from_dense validates symmetry and diagonal") {
  CHECK_THROWS_AS(WeightMatrix::from_dense(Matrix{{0, 1}, {2, 0}}), GraphError);
  CHECK_THROWS_AS(WeightMatrix::from_dense(Matrix{{1, 1}, {1, 0}}), GraphError);
  const WeightMatrix w = WeightMatrix::from_dense(Matrix{{0, 0, 2}, {0, 0, 0}, {2, 0, 0}});
  CHECK(w.edges().size() == 1);
  CHECK_FALSE(w.connected());
}

TEST_CASE("a forest is not a tree") {
  const Edge e[] = {{0, 1, 1.0}, {2, 3, 1.0}};
  const WeightMatrix w = WeightMatrix::build(4, e);
  CHECK_FALSE(w.connected());
  CHECK_FALSE(w.is_tree());
}

TEST_CASE("m_matrix") {
  const std::vector<double> x12{1, 2};
  const Matrix m0 = m_matrix(WeightMatrix::zero(2), x12);
  CHECK(m0 == Matrix{{2, 0}, {0, 4}});
  const std::vector<double> x11{1, 1};
  CHECK(m_matrix(single_edge(), x11) == Matrix{{2, -1}, {-1, 2}});

  const WeightMatrix d = daisy(std::vector<double>{1, 1});
  const std::vector<double> x{1, 1, 1};
  const Matrix m = m_matrix(d, x);
  CHECK(testing::det3(m(0, 0), m(0, 1), m(0, 2), m(1, 1), m(1, 2), m(2, 2)) == doctest::Approx(4.0));
  // 8 x0 x1 x2 - 2 x2 c1^2 - 2 x1 c2^2
  CHECK(8.0 * x[0] * x[1] * x[2] - 2.0 * x[2] - 2.0 * x[1] == doctest::Approx(4.0));
  CHECK_THROWS_AS(m_matrix(d, x12), DimensionError);
}

TEST_CASE("cone membership on the hyperbola") {
  const WeightMatrix w = single_edge();
  const std::vector<double> inside{1, 1};
  const ConePoint p = ConePoint::make(w, inside);
  CHECK(std::exp(p.log_det()) == doctest::Approx(3.0).epsilon(1e-14));

  const std::vector<double> boundary{0.25, 1};
  auto r = ConePoint::test(w, boundary);
  REQUIRE(std::holds_alternative<ConeRejection>(r));
  CHECK(std::get<ConeRejection>(r).pivot == 1);
  CHECK_FALSE(in_cone(w, boundary));
  CHECK_THROWS_AS(ConePoint::make(w, boundary), NotInConeError);

  const std::vector<double> negative{-1, 1};
  auto r2 = ConePoint::test(w, negative);
  REQUIRE(std::holds_alternative<ConeRejection>(r2));
  CHECK(std::get<ConeRejection>(r2).pivot == 0);
}

TEST_CASE("cone membership: complete graph") {
  const WeightMatrix w = complete_graph(3, 1.0);
  const std::vector<double> x{1, 1, 2};
  const ConePoint p = ConePoint::make(w, x);
  const Matrix m = m_matrix(w, x);
  const double direct = testing::det3(m(0, 0), m(0, 1), m(0, 2), m(1, 1), m(1, 2), m(2, 2));
  CHECK(direct == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(std::exp(p.log_det()) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(closed_form_det(CompleteGraph{1.0}, x) == doctest::Approx(6.0).epsilon(1e-14));

  const std::vector<double> boundary{1, 1, 1};
  CHECK(closed_form_det(CompleteGraph{1.0}, boundary) == doctest::Approx(0.0));
  CHECK_FALSE(in_cone(w, boundary));
}

TEST_CASE("closed_form_det: daisy") {
  const std::vector<double> x{1, 1, 1};
  CHECK(closed_form_det(Daisy{{1, 1}}, x) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("cone tolerance is relative to the diagonal scale") {
  const WeightMatrix w = single_edge();
  // 4 x1 x2 - 1 = 4e-13 relative to scale 2e3: below the floor.
  const double x2 = (1.0 + 4e-13) / (4.0 * 1e3);
  const std::vector<double> x{1e3, x2};
  CHECK_FALSE(in_cone(w, x));
  CHECK(in_cone(w, x, 1e-20));
  CHECK_THROWS_AS(ConePoint::test(w, x, 0.0), std::invalid_argument);
}

TEST_CASE("schur_split") {
  SUBCASE("no coupling") {
    const std::vector<double> x{0.5, 2, 3};
    const ConePoint p = ConePoint::make(WeightMatrix::zero(3), x);
    const SchurSplit s = schur_split(p, WeightMatrix::zero(3), 1);
    CHECK(s.schur == Matrix{{4, 0}, {0, 6}});
  }
  SUBCASE("single edge") {
    const std::vector<double> x{1, 1};
    const ConePoint p = ConePoint::make(single_edge(), x);
    const SchurSplit s = schur_split(p, single_edge(), 1);
    CHECK(s.schur(0, 0) == doctest::Approx(1.5).epsilon(1e-15));
  }
  SUBCASE("path") {
    const std::vector<double> x{1, 1, 1};
    const ConePoint p = ConePoint::make(unit_path3(), x);
    const SchurSplit s = schur_split(p, unit_path3(), 2);
    CHECK(s.schur(0, 0) == doctest::Approx(2.0 - 2.0 / 3.0).epsilon(1e-15));
    CHECK(s.cross == Matrix{{0}, {1}});
  }
  SUBCASE("k out of range") {
    const std::vector<double> x{1, 1};
    const ConePoint p = ConePoint::make(single_edge(), x);
    CHECK_THROWS_AS(schur_split(p, single_edge(), 0), std::out_of_range);
    CHECK_THROWS_AS(schur_split(p, single_edge(), 2), std::out_of_range);
  }
}

TEST_CASE("Cholesky solve and inverse") {
  const Matrix a{{4, -1, 0.5}, {-1, 3, -0.25}, {0.5, -0.25, 2}};
  auto f = Cholesky::factor(a);
  REQUIRE(std::holds_alternative<Cholesky>(f));
  const Cholesky& c = std::get<Cholesky>(f);
  const std::vector<double> b{1, -2, 3};
  const Vector x = c.solve(b);
  const Vector back = a * x;
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(b[i]).epsilon(1e-14));
  const Matrix id = a * c.inverse();
  CHECK(max_abs_diff(id, Matrix::identity(3)) < 1e-14);
  CHECK(std::exp(c.log_det()) == doctest::Approx(cofactor_det(a)).epsilon(1e-13));
}

TEST_CASE("principal submatrix and half_form") {
  const Edge e[] = {{0, 1, 1.0}, {1, 2, 2.0}, {0, 3, 0.5}};
  const WeightMatrix w = WeightMatrix::build(4, e);
  const std::vector<std::size_t> idx{2, 1};
  const WeightMatrix s = w.principal(idx);
  CHECK(s(0, 1) == 2.0);
  CHECK(w.leading(2).dense() == Matrix{{0, 1}, {1, 0}});
  const std::vector<double> u{1, 2, 3, 4};
  // sum_{i<j} w_ij u_i u_j
  CHECK(w.half_form(u, u) == doctest::Approx(1.0 * 2 + 2.0 * 6 + 0.5 * 4));
}
