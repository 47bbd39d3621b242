#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stwave/geometry.hpp"

using namespace stwave;

TEST_CASE("time slice count on reference inputs") {
  CHECK(time_slice_count(3.0, 6.0) == 2);
  CHECK(time_slice_count(1.0, 1.0) == 1);
  CHECK(time_slice_count(1.0, 5.5) == 6);
  CHECK_THROWS_AS(time_slice_count(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(time_slice_count(1.0, -1.0), std::domain_error);
}

TEST_CASE("time slice count brackets the horizon") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.1, 10.0);
  for (int it = 0; it < 2000; ++it) {
    double length = unif(rng), horizon = unif(rng);
    int n = time_slice_count(length, horizon);
    CHECK(n >= 1);
    CHECK(horizon <= n * length);
    if (n > 1) CHECK((n - 1) * length < horizon);
  }
}

TEST_CASE("uniform meshes") {
  ProblemGeometry geometry(3.0, 6.0);
  LateralMesh mesh = LateralMesh::uniform(geometry, 4, 4);
  const std::vector<double>& nodes = mesh.nodes(Side::zero);
  REQUIRE(nodes.size() == 5);
  CHECK(nodes[0] == 0.0);
  CHECK(nodes[1] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(nodes[2] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(nodes[4] == 6.0);
  CHECK(mesh.total_elements() == 8);
  CHECK(mesh.mesh_size() == doctest::Approx(1.5));

  // level-style refinement: the 2^(l+1) convention gives 16 per side at l=3
  LateralMesh fine = LateralMesh::uniform(geometry, 1 << 4, 1 << 4);
  CHECK(fine.element_count(Side::zero) == 16);
  CHECK(fine.total_elements() == 32);

  // two refinements quarter the mesh size
  LateralMesh coarse = LateralMesh::uniform(geometry, 4, 4);
  LateralMesh refined = LateralMesh::uniform(geometry, 16, 16);
  CHECK(refined.mesh_size() == doctest::Approx(coarse.mesh_size() / 4.0));

  CHECK_THROWS_AS(LateralMesh::uniform(geometry, 0, 4), std::domain_error);
}

TEST_CASE("element lengths sum to the horizon") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> count(1, 300);
  for (int it = 0; it < 50; ++it) {
    ProblemGeometry geometry(2.0, 7.3);
    LateralMesh mesh = LateralMesh::uniform(geometry, count(rng), count(rng));
    for (Side s : {Side::zero, Side::ell}) {
      double sum = 0.0;
      for (int e = 0; e < mesh.element_count(s); ++e) {
        sum += mesh.element_length(s, e);
      }
      CHECK(std::abs(sum - geometry.horizon) <= 1e-13 * geometry.horizon);
    }
  }
}

namespace {

DensityPair constant_density(const MeshPtr& mesh, double v0, double vl) {
  return {PiecewiseConstant(mesh, Side::zero,
                            std::vector<double>(mesh->element_count(Side::zero), v0)),
          PiecewiseConstant(mesh, Side::ell,
                            std::vector<double>(mesh->element_count(Side::ell), vl))};
}

}  // namespace

TEST_CASE("boundary L2 norm") {
  auto mesh = std::make_shared<const LateralMesh>(
      LateralMesh::uniform(ProblemGeometry(3.0, 6.0), 4, 4));

  CHECK(l2_norm_sigma(constant_density(mesh, 1.0, 1.0)) ==
        doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
  CHECK(l2_norm_sigma(constant_density(mesh, 0.0, 0.0)) == 0.0);

  DensityPair single = constant_density(mesh, 0.0, 0.0);
  single.zero.values[2] = 2.0;  // one element of length 1.5 with value 2
  CHECK(l2_norm_sigma(single) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
}

TEST_CASE("norm properties on random data") {
  auto mesh = std::make_shared<const LateralMesh>(
      LateralMesh::uniform(ProblemGeometry(3.0, 6.0), 7, 13));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int it = 0; it < 100; ++it) {
    DensityPair a = constant_density(mesh, 0.0, 0.0);
    DensityPair b = constant_density(mesh, 0.0, 0.0);
    for (Side s : {Side::zero, Side::ell}) {
      for (double& v : a.component(s).values) v = unif(rng);
      for (double& v : b.component(s).values) v = unif(rng);
    }
    DensityPair sum = a;
    for (Side s : {Side::zero, Side::ell}) {
      for (std::size_t e = 0; e < sum.component(s).values.size(); ++e) {
        sum.component(s).values[e] += b.component(s).values[e];
      }
    }
    CHECK(l2_norm_sigma(sum) <= l2_norm_sigma(a) + l2_norm_sigma(b) + 1e-12);
    DensityPair scaled = a;
    for (Side s : {Side::zero, Side::ell}) {
      for (double& v : scaled.component(s).values) v *= -3.0;
    }
    CHECK(l2_norm_sigma(scaled) ==
          doctest::Approx(3.0 * l2_norm_sigma(a)).epsilon(1e-13));
  }
}

TEST_CASE("typed wrappers validate their invariants") {
  auto mesh = std::make_shared<const LateralMesh>(
      LateralMesh::uniform(ProblemGeometry(3.0, 6.0), 4, 4));
  CHECK_THROWS_AS(PiecewiseConstant(mesh, Side::zero, {1.0, 2.0}),
                  std::domain_error);
  CHECK_THROWS_AS(PiecewiseLinear(mesh, Side::zero, {1.0, 0.0, 0.0, 0.0, 0.0}, true),
                  std::domain_error);
  CHECK_NOTHROW(PiecewiseLinear(mesh, Side::zero, {0.0, 1.0, 2.0, 1.0, 0.5}, true));
}
