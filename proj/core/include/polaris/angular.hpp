#pragma once

#include <Eigen/Dense>
#include <complex>

#include "polaris/half_int.hpp"

namespace polaris {

/// zyz Euler angles of an active rotation U = exp(-i a Sz) exp(-i b Sy) exp(-i g Sz).
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  /// Canonical form with beta in [0, pi] and alpha, gamma in [0, 2pi).
  [[nodiscard]] EulerAngles normalized() const;
};

/// Clebsch-Gordan coefficient C^{JM}_{j1 m1, j2 m2}, evaluated from the Racah
/// sum with exact big-integer factorials and rounded to double at the end.
/// Selection-rule failures (M != m1+m2, triangle violation) give exact zero.
/// Throws std::domain_error for invalid projections.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// Wigner small-d matrix element d^j_{mp,m}(beta) via the factorial sum.
double wigner_d_small(HalfInt j, HalfInt mp, HalfInt m, double beta);

/// Full Wigner D: e^{-i mp alpha} d^j_{mp,m}(beta) e^{-i m gamma}.
std::complex<double> wigner_D(HalfInt j, HalfInt mp, HalfInt m, const EulerAngles& R);

/// 3x3 rotation matrix Rz(alpha) Ry(beta) Rz(gamma); this is how expectation
/// values of the spin vector transform under the unitary above.
Eigen::Matrix3d rotation_matrix(const EulerAngles& R);

/// Inverse of rotation_matrix: zyz Euler angles of an orthogonal matrix.
EulerAngles euler_from_matrix(const Eigen::Matrix3d& rot);

/// Composition R1 after R2 (matrix product of the 3x3 representations).
EulerAngles compose(const EulerAngles& r1, const EulerAngles& r2);

}  // namespace polaris
