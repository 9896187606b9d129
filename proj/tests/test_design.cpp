#include <doctest.h>

#include <numbers>

#include "polaris/design.hpp"
#include "polaris/fixtures.hpp"
#include "test_util.hpp"

using namespace polaris;

namespace {

std::vector<SpherePoint> rotated(const std::vector<SpherePoint>& pts, const Eigen::Matrix3d& m) {
  std::vector<SpherePoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_sphere_point(m * to_unit_vector(p)));
  return out;
}

}  // namespace

TEST_CASE("spherical harmonic reference values") {
  CHECK(std::abs(spherical_harmonic(0, 0, 0.3, 1.0) -
                 Complex(1.0 / std::sqrt(4 * std::numbers::pi), 0)) < 1e-15);
  const double th = 0.9;
  CHECK(std::abs(spherical_harmonic(1, 0, th, 0.0) -
                 Complex(std::sqrt(3 / (4 * std::numbers::pi)) * std::cos(th), 0)) < 1e-14);
  // Condon-Shortley: Y_1^1 = -sqrt(3/8pi) sin(theta) e^{i phi}
  const Complex y11 = spherical_harmonic(1, 1, th, 0.4);
  const Complex expect =
      -std::sqrt(3 / (8 * std::numbers::pi)) * std::sin(th) * std::exp(Complex(0, 0.4));
  CHECK(std::abs(y11 - expect) < 1e-14);
  // conjugation symmetry
  const Complex ym = spherical_harmonic(3, -2, th, 0.4);
  const Complex yp = spherical_harmonic(3, 2, th, 0.4);
  CHECK(std::abs(ym - std::conj(yp)) < 1e-14);
  CHECK_THROWS_AS(spherical_harmonic(1, 2, 0.0, 0.0), std::domain_error);
}

TEST_CASE("harmonic orthonormality on a Gauss-Legendre grid") {
  // nodes/weights by Newton iteration on P_n
  constexpr int n = 24;
  std::array<double, n> x{}, w{};
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (t * p1 - p0) / (t * t - 1);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (t * p1 - p0) / (t * t - 1);
    x[i] = t;
    w[i] = 2.0 / ((1 - t * t) * dp * dp);
  }
  constexpr int nphi = 20;  // enough for l <= 8 azimuthal modes
  for (int l = 0; l <= 8; l += 2) {
    for (int lp = l; lp <= 8; lp += 3) {
      for (int m = -std::min(l, lp); m <= std::min(l, lp); m += 2) {
        Complex acc = 0.0;
        for (int i = 0; i < n; ++i) {
          const double th = std::acos(x[i]);
          for (int j = 0; j < nphi; ++j) {
            const double ph = 2 * std::numbers::pi * j / nphi;
            acc += w[i] * (2 * std::numbers::pi / nphi) * spherical_harmonic(l, m, th, ph) *
                   std::conj(spherical_harmonic(lp, m, th, ph));
          }
        }
        const double expect = (l == lp) ? 1.0 : 0.0;
        CHECK(std::abs(acc - expect) < 1e-10);
      }
    }
  }
}

TEST_CASE("design orders of the Platonic vertex sets") {
  CHECK(design_order(tetrahedron_points(), 8) == 2);
  CHECK(design_order(octahedron_points(), 8) == 3);
  CHECK(design_order(cube_points(), 8) == 3);
  CHECK(design_order(icosahedron_points(), 8) == 5);
  CHECK(design_order(dodecahedron_points(), 8) == 5);
  CHECK(design_order({SpherePoint{0.7, 0.1}}, 4) == 0);
}

TEST_CASE("design order is rotation invariant") {
  std::mt19937_64 rng(41);
  const std::vector<std::pair<std::vector<SpherePoint>, int>> cases = {
      {tetrahedron_points(), 2}, {icosahedron_points(), 5}};
  for (const auto& [pts, expect] : cases) {
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Matrix3d m = rotation_matrix(testutil::random_rotation(rng));
      CHECK(design_order(rotated(pts, m), 8) == expect);
    }
  }
}

TEST_CASE("sphere monomial averages") {
  CHECK(sphere_monomial_average(0, 0, 0) == doctest::Approx(1.0));
  CHECK(sphere_monomial_average(2, 0, 0) == doctest::Approx(1.0 / 3));
  CHECK(sphere_monomial_average(4, 0, 0) == doctest::Approx(1.0 / 5));
  CHECK(sphere_monomial_average(2, 2, 0) == doctest::Approx(1.0 / 15));
  CHECK(sphere_monomial_average(1, 0, 0) == 0.0);
  CHECK(sphere_monomial_average(1, 1, 2) == 0.0);
}

TEST_CASE("polynomial averages witness the design order") {
  CHECK(polynomial_average_check(tetrahedron_points(), 2, 100, 7) < 1e-10);
  CHECK(polynomial_average_check(tetrahedron_points(), 3, 100, 7) > 1e-3);
  CHECK(polynomial_average_check(tetrahedron_points(), 0, 10, 7) == 0.0);
  CHECK(polynomial_average_check(icosahedron_points(), 5, 100, 7) < 1e-8);
}

TEST_CASE("moment residuals line up with the order decision") {
  const auto res = moment_residuals(cube_points(), 6);
  for (int l = 1; l <= 3; ++l) CHECK(res[l - 1] < 1e-8 * 8);
  CHECK(res[3] > 1e-3);  // l = 4 fails for the cube
}
