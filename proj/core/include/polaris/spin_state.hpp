#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "polaris/angular.hpp"
#include "polaris/half_int.hpp"

namespace polaris {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;

/// Normalized pure state of spin S; amps[i] is the amplitude of |S, m> with
/// m = -S + i. Immutable after construction.
class SpinState {
 public:
  /// Normalizes on construction; throws std::invalid_argument on a zero
  /// vector or a length mismatch.
  SpinState(HalfInt S, Eigen::VectorXcd amps);

  [[nodiscard]] HalfInt spin() const { return S_; }
  [[nodiscard]] int dim() const { return static_cast<int>(amps_.size()); }
  [[nodiscard]] const Eigen::VectorXcd& amps() const { return amps_; }

  /// Amplitude of |S, m>.
  [[nodiscard]] Complex amp(HalfInt m) const { return amps_[index_of(m)]; }

  /// Vector index of projection m; throws on invalid m.
  [[nodiscard]] int index_of(HalfInt m) const;
  /// Projection m of vector index i.
  [[nodiscard]] HalfInt m_of(int i) const { return HalfInt::from_twice(-S_.twice() + 2 * i); }

 private:
  HalfInt S_;
  Eigen::VectorXcd amps_;
};

/// <a|b>; spins must agree.
Complex inner(const SpinState& a, const SpinState& b);

/// |<a|b>| — equality measure that ignores the global phase.
double fidelity(const SpinState& a, const SpinState& b);

SpinState basis_state(HalfInt S, HalfInt m);

/// Matrices of (Sx, Sy, Sz) in the |S,m> basis, built from the ladder
/// elements <S,m+-1|S+-|S,m> = sqrt(S(S+1) - m(m+-1)).
std::array<OperatorMatrix, 3> stokes_matrices(HalfInt S);

/// SU(2) coherent state (1+|a|^2)^{-S} exp(a S+) |S,-S>, a = tan(theta/2) e^{-i phi},
/// evaluated through its closed-form binomial amplitudes (finite at theta = pi).
SpinState coherent_state(HalfInt S, double theta, double phi);

/// (|S,S> - |S,-S>)/sqrt(2).
SpinState noon_state(HalfInt S);

/// amps'_{m'} = sum_m D^S_{m',m}(R) Psi_m.
SpinState rotate(const SpinState& state, const EulerAngles& R);

/// (<Sx>, <Sy>, <Sz>).
Eigen::Vector3d stokes_expectation(const SpinState& state);

}  // namespace polaris
