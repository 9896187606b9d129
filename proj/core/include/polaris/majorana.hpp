#pragma once

#include <optional>
#include <vector>

#include "polaris/spin_state.hpp"

namespace polaris {

/// Coefficients c_k = sqrt((2S)!/((S-m)!(S+m)!)) Psi_m with k = S+m, so the
/// polynomial is sum_k c_k z^k of degree at most 2S.
struct MajoranaPolynomial {
  HalfInt S;
  Eigen::VectorXcd coeffs;  // length 2S+1
};

struct SpherePoint {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2pi)
};

/// Multiset of 2S points on the unit sphere; multiplicity by repetition.
struct Constellation {
  HalfInt S;
  std::vector<SpherePoint> points;
};

MajoranaPolynomial state_to_polynomial(const SpinState& state);

/// Roots via a balanced companion matrix with one Newton polish per root,
/// then the inverse stereographic map theta = 2 atan(1/|z|), phi = arg(-z).
/// Degree deficiency contributes points at theta = 0; roots at the origin
/// map to theta = pi. With this convention the constellation of
/// coherent_state(S, theta, phi) collapses onto (theta, phi) itself.
Constellation polynomial_to_constellation(const MajoranaPolynomial& p);

Constellation constellation(const SpinState& state);

/// Inverse map: rebuild the polynomial from the 2S points and normalize.
SpinState constellation_to_state(const Constellation& c);

/// Husimi Q(theta, phi) = |<theta, phi | Psi>|^2 in [0, 1].
double q_function(const SpinState& state, double theta, double phi);

/// Q sampled at theta_j = pi (j+0.5)/n_theta, phi_k = 2 pi k / n_phi.
Eigen::MatrixXd q_grid(const SpinState& state, int n_theta, int n_phi);

/// Rotation carrying constellation a onto b as multisets within angular
/// distance tol per point, found by aligning candidate point pairs and
/// greedily assigning the rest; nullopt when no alignment fits.
std::optional<EulerAngles> constellation_match(const Constellation& a, const Constellation& b,
                                               double tol = 1e-6);

/// Point set of a rotated state: constellation points transform by
/// Rz(alpha) Ry(-beta) Rz(gamma) when the state is rotated by (alpha, beta,
/// gamma). (The flipped beta comes from the antipodal twist of the
/// stereographic convention above.)
Eigen::Matrix3d constellation_rotation(const EulerAngles& R);

Eigen::Vector3d to_unit_vector(const SpherePoint& p);
SpherePoint to_sphere_point(const Eigen::Vector3d& v);

}  // namespace polaris
