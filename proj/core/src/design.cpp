#include "polaris/design.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace polaris {

Complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw std::domain_error("spherical_harmonic: need |m| <= l");
  const int am = std::abs(m);
  const double leg = std::sph_legendre(l, am, theta);  // Y_l^{|m|}(theta, 0), CS phase included
  Complex y = leg * std::exp(Complex(0.0, am * phi));
  if (m < 0) {
    y = std::conj(y);
    if (am % 2 != 0) y = -y;
  }
  return y;
}

std::vector<double> moment_residuals(const std::vector<SpherePoint>& points, int t_max) {
  std::vector<double> res;
  res.reserve(t_max);
  for (int l = 1; l <= t_max; ++l) {
    double worst = 0.0;
    for (int m = -l; m <= l; ++m) {
      Complex acc = 0.0;
      for (const SpherePoint& p : points) acc += spherical_harmonic(l, m, p.theta, p.phi);
      worst = std::max(worst, std::abs(acc));
    }
    res.push_back(worst);
  }
  return res;
}

int design_order(const std::vector<SpherePoint>& points, int t_max, double eps) {
  if (points.empty()) throw std::invalid_argument("design_order: empty point set");
  const double bound = eps * static_cast<double>(points.size());
  const std::vector<double> res = moment_residuals(points, t_max);
  int t = 0;
  for (int l = 1; l <= t_max; ++l) {
    if (res[l - 1] >= bound) break;
    t = l;
  }
  return t;
}

int design_order(const Constellation& c, int t_max, double eps) {
  return design_order(c.points, t_max, eps);
}

double sphere_monomial_average(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::domain_error("sphere_monomial_average: negative power");
  if (a % 2 || b % 2 || c % 2) return 0.0;
  auto dfact = [](int n) {  // (n)!! with (-1)!! = 1
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
  };
  return dfact(a - 1) * dfact(b - 1) * dfact(c - 1) / dfact(a + b + c + 1);
}

double polynomial_average_check(const std::vector<SpherePoint>& points, int degree, int trials,
                                std::uint64_t seed) {
  if (degree < 0) throw std::domain_error("polynomial_average_check: negative degree");
  if (points.empty()) throw std::invalid_argument("polynomial_average_check: empty point set");
  struct Mono {
    int a, b, c;
  };
  std::vector<Mono> monos;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c) monos.push_back({a, b, c});

  // Precompute per-monomial point averages once.
  std::vector<double> point_avg(monos.size(), 0.0), sphere_avg(monos.size(), 0.0);
  for (std::size_t k = 0; k < monos.size(); ++k) {
    double acc = 0.0;
    for (const SpherePoint& p : points) {
      const Eigen::Vector3d v = to_unit_vector(p);
      acc += std::pow(v.x(), monos[k].a) * std::pow(v.y(), monos[k].b) * std::pow(v.z(), monos[k].c);
    }
    point_avg[k] = acc / static_cast<double>(points.size());
    sphere_avg[k] = sphere_monomial_average(monos[k].a, monos[k].b, monos[k].c);
  }

  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    double diff = 0.0;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const double coef = uniform();
      diff += coef * (point_avg[k] - sphere_avg[k]);
    }
    worst = std::max(worst, std::abs(diff));
  }
  return worst;
}

namespace {

std::vector<SpherePoint> from_vectors(const std::vector<Eigen::Vector3d>& vs) {
  std::vector<SpherePoint> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_sphere_point(v));
  return out;
}

}  // namespace

std::vector<SpherePoint> tetrahedron_points() {
  return from_vectors({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
}

std::vector<SpherePoint> octahedron_points() {
  return from_vectors({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

std::vector<SpherePoint> cube_points() {
  std::vector<Eigen::Vector3d> vs;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) vs.emplace_back(sx, sy, sz);
  return from_vectors(vs);
}

std::vector<SpherePoint> icosahedron_points() {
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> vs;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      vs.emplace_back(0.0, s1 * 1.0, s2 * g);
      vs.emplace_back(s1 * 1.0, s2 * g, 0.0);
      vs.emplace_back(s2 * g, 0.0, s1 * 1.0);
    }
  return from_vectors(vs);
}

std::vector<SpherePoint> dodecahedron_points() {
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> vs;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) vs.emplace_back(sx, sy, sz);
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      vs.emplace_back(0.0, s1 / g, s2 * g);
      vs.emplace_back(s1 / g, s2 * g, 0.0);
      vs.emplace_back(s2 * g, 0.0, s1 / g);
    }
  return from_vectors(vs);
}

}  // namespace polaris
