#include <doctest.h>

#include <numbers>

#include "polaris/fixtures.hpp"
#include "polaris/metrology.hpp"
#include "test_util.hpp"

using namespace polaris;

namespace {
const Eigen::Vector3d kZ{0, 0, 1};
const Eigen::Vector3d kX{1, 0, 0};
}  // namespace

TEST_CASE("rotation overlap basics") {
  std::mt19937_64 rng(51);
  const SpinState psi = testutil::random_state(HalfInt(3), rng);
  CHECK(rotation_overlap(psi, {kZ, 0.0}) == doctest::Approx(1.0));
  // noon state about z is orthogonal at pi/(2S)
  for (int s : {1, 2, 3, 5}) {
    const SpinState noon = noon_state(HalfInt(s));
    CHECK(rotation_overlap(noon, {kZ, std::numbers::pi / (2 * s)}) < 1e-12);
  }
  // coherent state about its own Bloch axis only picks up a phase
  const double th = 1.0, ph = 0.5;
  const SpinState coh = coherent_state(HalfInt(2), th, ph);
  const Eigen::Vector3d axis(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                             -std::cos(th));
  for (double ang : {0.3, 1.7, 4.0}) {
    CHECK(rotation_overlap(coh, {axis, ang}) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(rotation_overlap(psi, {Eigen::Vector3d(0, 0, 2), 1.0}), std::invalid_argument);
}

TEST_CASE("overlap symmetries") {
  std::mt19937_64 rng(52);
  const SpinState psi = testutil::random_state(HalfInt::from_twice(5), rng);
  const Eigen::Vector3d n = Eigen::Vector3d(0.3, -0.4, 0.8).normalized();
  CHECK(rotation_overlap(psi, {n, 0.9}) == rotation_overlap(psi, {-n, -0.9}));
  const EulerAngles R = testutil::random_rotation(rng);
  const double a = rotation_overlap(psi, {n, 0.9});
  const double b = rotation_overlap(rotate(psi, R), {rotation_matrix(R) * n, 0.9});
  CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("orthogonality angle") {
  CHECK(*orthogonality_angle(noon_state(HalfInt(2)), kZ, 1e-9) ==
        doctest::Approx(std::numbers::pi / 4).epsilon(1e-9));
  CHECK_FALSE(orthogonality_angle(basis_state(HalfInt(3), HalfInt(3)), kZ, 1e-9).has_value());
  // cube state has a finite orthogonality angle about x
  CHECK(orthogonality_angle(table1_state(HalfInt(3)), kX, 1e-6).has_value());
  CHECK_THROWS_AS(orthogonality_angle(noon_state(HalfInt(2)), kZ, 0.0), std::domain_error);
}

TEST_CASE("sensitivity values and identities") {
  // noon: Var(S_z) = S^2, x-axis strictly smaller
  for (int s : {1, 2, 3}) {
    const SpinState noon = noon_state(HalfInt(s));
    CHECK(sensitivity(noon, kZ) == doctest::Approx(double(s) * s).epsilon(1e-12));
    CHECK(sensitivity(noon, kX) < double(s) * s - 0.1);
  }
  // trace identity over the coordinate axes
  std::mt19937_64 rng(53);
  for (int ts : {2, 3, 7}) {
    const SpinState psi = testutil::random_state(HalfInt::from_twice(ts), rng);
    const double s = 0.5 * ts;
    const double avg = (sensitivity(psi, kX) + sensitivity(psi, {0, 1, 0}) + sensitivity(psi, kZ)) / 3;
    const double expect = (s * (s + 1) - stokes_expectation(psi).squaredNorm()) / 3;
    CHECK(std::abs(avg - expect) < 1e-12);
  }
}

TEST_CASE("second-order unpolarized states are isotropic sensors") {
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SpinState psi = table1_state(HalfInt(2));
  const double ref = sensitivity(psi, kZ);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Vector3d n(u(rng) - 0.5, u(rng) - 0.5, u(rng) - 0.5);
    n.normalize();
    CHECK(std::abs(sensitivity(psi, n) - ref) < 1e-10);
  }
}

TEST_CASE("sensitivity scans") {
  const SpinState psi = table1_state(HalfInt(6));
  const auto st = sensitivity_scan(psi, 500, 9);
  CHECK(st.max - st.min < 1e-9);
  const double s = 6.0;
  CHECK(std::abs(st.mean - (s * (s + 1) - stokes_expectation(psi).squaredNorm()) / 3) < 1e-6);
  const auto noon = sensitivity_scan(noon_state(HalfInt(3)), 2000, 9);
  CHECK(noon.max / noon.min > 1.5);
  // seed only reorients the lattice; the mean stays put
  const auto st2 = sensitivity_scan(psi, 500, 12345);
  CHECK(std::abs(st.mean - st2.mean) < 1e-9);
}

TEST_CASE("small-angle law: curvature equals the variance") {
  std::mt19937_64 rng(55);
  const SpinState psi = testutil::random_state(HalfInt::from_twice(7), rng);
  const Eigen::Vector3d n = Eigen::Vector3d(1, 2, -1).normalized();
  const double var = sensitivity(psi, n);
  double prev_err = 0.0;
  for (double th : {1e-2, 1e-3}) {
    const double err = std::abs((1 - rotation_overlap(psi, {n, th})) - th * th * var);
    if (prev_err > 0) {
      // O(theta^4): shrinking theta by 10 shrinks the error by ~1e4
      CHECK(prev_err / err > 1e3);
    }
    prev_err = err;
  }
}
