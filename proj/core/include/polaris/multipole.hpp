#pragma once

#include <vector>

#include "polaris/spin_state.hpp"

namespace polaris {

/// State multipoles rho_{Kq} of a spin-S density matrix, K = 0..2S, |q| <= K.
/// Stored densely per K shell.
class MultipoleSpectrum {
 public:
  MultipoleSpectrum(HalfInt S, std::vector<std::vector<Complex>> shells);

  [[nodiscard]] HalfInt spin() const { return S_; }
  [[nodiscard]] int max_order() const { return S_.twice(); }

  /// rho_{Kq}; throws std::out_of_range for K or q outside the table.
  [[nodiscard]] Complex rho(int K, int q) const;

 private:
  HalfInt S_;
  std::vector<std::vector<Complex>> shells_;  // shells_[K][q + K]
};

/// Irreducible tensor operator T_{Kq}: entries sqrt((2K+1)/(2S+1)) C^{S m'}_{S m, K q}
/// at row m', column m.
OperatorMatrix tensor_operator(HalfInt S, int K, int q);

/// rho_{Kq} = <Psi| T+_{Kq} |Psi> for all K, q.
MultipoleSpectrum multipoles(const SpinState& state);

/// Multipoles of an explicit density matrix (used for mixed-state references).
MultipoleSpectrum multipoles_of_density(HalfInt S, const OperatorMatrix& rho);

/// Cumulative distribution sum_{K=1..M} sum_q |rho_{Kq}|^2.
double cumulative(const MultipoleSpectrum& spec, int M);

/// Same quantity evaluated directly from the Clebsch-Gordan double sum over
/// the state amplitudes, bypassing the operator matrices.
double cumulative_pure(const SpinState& state, int M);

/// Closed-form maximum of the cumulative distribution over pure states,
/// attained by |S,+-S> and every SU(2) coherent state:
///   2S/(2S+1) - Gamma(2S+1)^2 / (Gamma(2S-M) Gamma(2S+M+2)),
/// with the M = 2S endpoint taken as the limit 2S/(2S+1).
double max_value(HalfInt S, int M);

/// Time-reversal companion: amplitudes (-1)^{S+m} conj(Psi_{-m}).
SpinState tilde_state(const SpinState& state);

/// Third route to the cumulative distribution: bilinear form of
/// |Psi> (x) |tilde Psi> with the projectors onto the total-spin-K subspaces
/// of the (2S+1)^2-dimensional product space.
double cumulative_projector(const SpinState& state, int M);

/// Largest M with cumulative_pure(state, M) < eps; 0 if none.
int unpolarization_order(const SpinState& state, double eps);

}  // namespace polaris
