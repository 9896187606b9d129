#include "polaris/metrology.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace polaris {

namespace {

OperatorMatrix axis_generator(HalfInt S, const Eigen::Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("axis must be a unit vector");
  }
  const auto ops = stokes_matrices(S);
  return axis.x() * ops[0] + axis.y() * ops[1] + axis.z() * ops[2];
}

// Symmetrized covariance C_ab = <{S_a,S_b}/2> - <S_a><S_b>; Var(n.S) = n^T C n.
Eigen::Matrix3d spin_covariance(const SpinState& state) {
  const auto ops = stokes_matrices(state.spin());
  const Eigen::VectorXcd& psi = state.amps();
  Eigen::Vector3d mean;
  std::array<Eigen::VectorXcd, 3> applied;
  for (int a = 0; a < 3; ++a) {
    applied[a] = ops[a] * psi;
    mean[a] = psi.dot(applied[a]).real();
  }
  Eigen::Matrix3d c;
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) {
      const double sym = applied[a].dot(applied[b]).real();
      c(a, b) = c(b, a) = sym - mean[a] * mean[b];
    }
  }
  return c;
}

}  // namespace

double rotation_overlap(const SpinState& state, const AxisAngle& r) {
  // (n, angle) and (-n, -angle) are the same rotation; canonicalize so they
  // give bitwise-identical results.
  AxisAngle rr = r;
  if (rr.angle < 0.0) {
    rr.angle = -rr.angle;
    rr.axis = -rr.axis;
  }
  const OperatorMatrix g = axis_generator(state.spin(), rr.axis);
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(g);
  const Eigen::VectorXcd proj = es.eigenvectors().adjoint() * state.amps();
  Complex amp = 0.0;
  for (Eigen::Index k = 0; k < proj.size(); ++k) {
    amp += std::norm(proj[k]) * std::exp(Complex(0.0, -rr.angle * es.eigenvalues()[k]));
  }
  return std::norm(amp);
}

std::optional<double> orthogonality_angle(const SpinState& state, const Eigen::Vector3d& axis,
                                          double eps) {
  if (eps <= 0) throw std::domain_error("orthogonality_angle: eps must be positive");
  const OperatorMatrix g = axis_generator(state.spin(), axis);
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(g);
  const Eigen::VectorXcd proj = es.eigenvectors().adjoint() * state.amps();
  auto overlap = [&](double th) {
    Complex amp = 0.0;
    for (Eigen::Index k = 0; k < proj.size(); ++k) {
      amp += std::norm(proj[k]) * std::exp(Complex(0.0, -th * es.eigenvalues()[k]));
    }
    return std::norm(amp);
  };

  // Sample, then refine every local minimum of the sampled curve in order of
  // increasing angle; a dip can be far narrower than the grid spacing, so the
  // eps test is applied only to the refined minimum.
  constexpr int kGrid = 20000;
  const double h = 2 * std::numbers::pi / kGrid;
  std::vector<double> sample(kGrid + 2);
  for (int i = 0; i <= kGrid + 1; ++i) sample[i] = overlap(i * h);
  for (int i = 1; i <= kGrid; ++i) {
    if (sample[i] > sample[i - 1] || sample[i] > sample[i + 1]) continue;
    double a = (i - 1) * h, b = (i + 1) * h;
    while (b - a > 1e-13) {
      const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
      if (overlap(m1) < overlap(m2)) b = m2;
      else a = m1;
    }
    const double th = (a + b) / 2;
    if (th > 0 && th <= 2 * std::numbers::pi && overlap(th) < eps) return th;
  }
  return std::nullopt;
}

double sensitivity(const SpinState& state, const Eigen::Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("sensitivity: axis must be a unit vector");
  }
  const Eigen::Matrix3d c = spin_covariance(state);
  return axis.dot(c * axis);
}

std::vector<Eigen::Vector3d> fibonacci_axes(int n_axes, std::uint64_t seed) {
  if (n_axes < 1) throw std::domain_error("fibonacci_axes: need n_axes >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
  // Random rotation of the lattice from a uniform quaternion.
  Eigen::Vector4d qv;
  double n2;
  do {
    for (int i = 0; i < 4; ++i) qv[i] = 2 * uniform() - 1;
    n2 = qv.squaredNorm();
  } while (n2 < 1e-6 || n2 > 1.0);
  const Eigen::Quaterniond q(qv[0], qv[1], qv[2], qv[3]);
  const Eigen::Matrix3d rot = q.normalized().toRotationMatrix();

  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Eigen::Vector3d> axes;
  axes.reserve(n_axes);
  for (int i = 0; i < n_axes; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n_axes;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    axes.push_back(rot * Eigen::Vector3d(r * std::cos(phi), r * std::sin(phi), z));
  }
  return axes;
}

SensitivityStats sensitivity_scan(const SpinState& state, int n_axes, std::uint64_t seed) {
  const Eigen::Matrix3d c = spin_covariance(state);
  SensitivityStats st;
  st.min = std::numeric_limits<double>::infinity();
  st.max = -st.min;
  double acc = 0.0;
  for (const Eigen::Vector3d& n : fibonacci_axes(n_axes, seed)) {
    const double v = n.dot(c * n);
    st.min = std::min(st.min, v);
    st.max = std::max(st.max, v);
    acc += v;
  }
  st.mean = acc / n_axes;
  return st;
}

}  // namespace polaris
