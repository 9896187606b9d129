#pragma once

#include <cstdint>
#include <vector>

#include "polaris/majorana.hpp"

namespace polaris {

/// Orthonormalized Y_l^m with the Condon-Shortley phase.
Complex spherical_harmonic(int l, int m, double theta, double phi);

/// Largest t <= t_max such that every harmonic moment sum_i Y_l^m(p_i)
/// vanishes (|.| < eps * N) for all 1 <= l <= t, |m| <= l. This is the
/// standard complete criterion for a spherical t-design.
int design_order(const std::vector<SpherePoint>& points, int t_max, double eps = 1e-8);
int design_order(const Constellation& c, int t_max, double eps = 1e-8);

/// Max moment magnitude per shell l = 1..t_max (for reporting).
std::vector<double> moment_residuals(const std::vector<SpherePoint>& points, int t_max);

/// Secondary witness: |point average - sphere average| of random real
/// polynomials in (x, y, z) of total degree <= degree, maximised over trials.
double polynomial_average_check(const std::vector<SpherePoint>& points, int degree, int trials,
                                std::uint64_t seed);

/// Exact average of x^a y^b z^c over the unit sphere.
double sphere_monomial_average(int a, int b, int c);

// Vertex sets of the Platonic solids, as unit vectors in a fixed canonical
// orientation (not the z-ring orientation the tabulated states produce).
std::vector<SpherePoint> tetrahedron_points();
std::vector<SpherePoint> octahedron_points();
std::vector<SpherePoint> cube_points();
std::vector<SpherePoint> icosahedron_points();
std::vector<SpherePoint> dodecahedron_points();

}  // namespace polaris
