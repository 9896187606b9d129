#pragma once

#include <cstdint>
#include <optional>

#include "polaris/spin_state.hpp"

namespace polaris {

/// Rotation by angle about a unit axis; the unitary is U = exp(-i angle n.S).
struct AxisAngle {
  Eigen::Vector3d axis{0, 0, 1};
  double angle = 0.0;
};

/// |<Psi| exp(-i angle n.S) |Psi>|^2 via eigendecomposition of n.S.
double rotation_overlap(const SpinState& state, const AxisAngle& r);

/// Smallest angle in (0, 2pi] where the overlap drops below eps (scan over a
/// fine grid, then bisection); nullopt when the overlap never goes that low.
std::optional<double> orthogonality_angle(const SpinState& state, const Eigen::Vector3d& axis,
                                          double eps);

/// Var(n.S) = <(n.S)^2> - <n.S>^2, the small-angle curvature of the overlap.
double sensitivity(const SpinState& state, const Eigen::Vector3d& axis);

struct SensitivityStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

/// Sensitivity statistics over a Fibonacci-sphere set of axes; the seed only
/// rotates the lattice, so the coverage is quasi-uniform for any seed.
SensitivityStats sensitivity_scan(const SpinState& state, int n_axes, std::uint64_t seed);

/// The n_axes quasi-uniform axes used by sensitivity_scan.
std::vector<Eigen::Vector3d> fibonacci_axes(int n_axes, std::uint64_t seed);

}  // namespace polaris
