#include "polaris/spin_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polaris {

SpinState::SpinState(HalfInt S, Eigen::VectorXcd amps) : S_(S), amps_(std::move(amps)) {
  if (S.twice() < 0) throw std::invalid_argument("SpinState: negative spin");
  if (amps_.size() != S.twice() + 1) {
    throw std::invalid_argument("SpinState: amplitude vector must have length 2S+1");
  }
  const double n = amps_.norm();
  if (n < 1e-300) throw std::invalid_argument("SpinState: zero amplitude vector");
  amps_ /= n;
}

int SpinState::index_of(HalfInt m) const {
  if (!valid_projection(S_, m)) throw std::domain_error("SpinState: invalid projection " + m.str());
  return (m.twice() + S_.twice()) / 2;
}

Complex inner(const SpinState& a, const SpinState& b) {
  if (a.spin() != b.spin()) throw std::invalid_argument("inner: spin mismatch");
  return a.amps().dot(b.amps());  // Eigen's dot conjugates the left argument
}

double fidelity(const SpinState& a, const SpinState& b) { return std::abs(inner(a, b)); }

SpinState basis_state(HalfInt S, HalfInt m) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(S.twice() + 1);
  if (!valid_projection(S, m)) throw std::domain_error("basis_state: invalid projection");
  v[(m.twice() + S.twice()) / 2] = 1.0;
  return SpinState(S, std::move(v));
}

std::array<OperatorMatrix, 3> stokes_matrices(HalfInt S) {
  const int dim = S.twice() + 1;
  const double s = S.value();
  OperatorMatrix sp = OperatorMatrix::Zero(dim, dim);
  OperatorMatrix sz = OperatorMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double m = -s + i;
    sz(i, i) = m;
    if (i + 1 < dim) sp(i + 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  OperatorMatrix sm = sp.adjoint();
  OperatorMatrix sx = (sp + sm) / 2.0;
  OperatorMatrix sy = (sp - sm) / Complex(0.0, 2.0);
  return {sx, sy, sz};
}

SpinState coherent_state(HalfInt S, double theta, double phi) {
  if (theta < 0.0 || theta > std::numbers::pi + 1e-12) {
    throw std::domain_error("coherent_state: theta outside [0, pi]");
  }
  const int dim = S.twice() + 1;
  const double ch = std::cos(theta / 2), sh = std::sin(theta / 2);
  Eigen::VectorXcd v(dim);
  double log_binom = 0.0;  // log C(2S, k) built up incrementally
  for (int k = 0; k < dim; ++k) {
    if (k > 0) log_binom += std::log(double(dim - k)) - std::log(double(k));
    const double mag = std::exp(0.5 * log_binom) * std::pow(ch, dim - 1 - k) * std::pow(sh, k);
    v[k] = mag * std::exp(Complex(0.0, -k * phi));
  }
  return SpinState(S, std::move(v));
}

SpinState noon_state(HalfInt S) {
  if (S.twice() < 1) throw std::domain_error("noon_state: S must be >= 1/2");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(S.twice() + 1);
  v[0] = -1.0 / std::numbers::sqrt2;
  v[S.twice()] = 1.0 / std::numbers::sqrt2;
  return SpinState(S, std::move(v));
}

SpinState rotate(const SpinState& state, const EulerAngles& R) {
  const HalfInt S = state.spin();
  const int dim = state.dim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (int ip = 0; ip < dim; ++ip) {
    const HalfInt mp = state.m_of(ip);
    Complex acc = 0.0;
    for (int i = 0; i < dim; ++i) {
      acc += wigner_D(S, mp, state.m_of(i), R) * state.amps()[i];
    }
    out[ip] = acc;
  }
  return SpinState(S, std::move(out));
}

Eigen::Vector3d stokes_expectation(const SpinState& state) {
  const auto ops = stokes_matrices(state.spin());
  Eigen::Vector3d r;
  for (int k = 0; k < 3; ++k) {
    r[k] = (state.amps().adjoint() * ops[k] * state.amps())(0).real();
  }
  return r;
}

}  // namespace polaris
