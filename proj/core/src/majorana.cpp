#include "polaris/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polaris {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_phi(double phi) {
  phi = std::fmod(phi, kTwoPi);
  return phi < 0 ? phi + kTwoPi : phi;
}

// log of binomial C(n, k)
double log_binom(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

Complex poly_eval(const Eigen::VectorXcd& c, Complex z) {
  Complex acc = 0.0;
  for (Eigen::Index i = c.size() - 1; i >= 0; --i) acc = acc * z + c[i];
  return acc;
}

Eigen::VectorXcd poly_derivative(const Eigen::VectorXcd& c) {
  if (c.size() <= 1) return Eigen::VectorXcd::Zero(1);
  Eigen::VectorXcd d(c.size() - 1);
  for (Eigen::Index i = 1; i < c.size(); ++i) d[i - 1] = double(i) * c[i];
  return d;
}

// Taylor coefficients p^(j)(z0)/j! via repeated in-place synthetic division.
Eigen::VectorXcd taylor_shift(Eigen::VectorXcd c, Complex z0) {
  const Eigen::Index n = c.size();
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    for (Eigen::Index i = n - 2; i >= j; --i) c[i] += z0 * c[i + 1];
  }
  return c;
}

}  // namespace

MajoranaPolynomial state_to_polynomial(const SpinState& state) {
  const int n = state.spin().twice();
  Eigen::VectorXcd c(n + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = std::exp(0.5 * log_binom(n, k)) * state.amps()[k];
  }
  return {state.spin(), std::move(c)};
}

Constellation polynomial_to_constellation(const MajoranaPolynomial& p) {
  const int n = p.S.twice();
  if (p.coeffs.size() != n + 1) throw std::invalid_argument("polynomial: length mismatch");
  const double cmax = p.coeffs.cwiseAbs().maxCoeff();
  if (cmax <= 0.0) throw std::invalid_argument("polynomial_to_constellation: zero polynomial");

  // Degree deficiency -> roots at infinity -> theta = 0. Only coefficients
  // that are zero for all practical purposes are trimmed: a merely small
  // leading coefficient is relatively exact and encodes a far (but finite)
  // root, which the variable rescale below handles fine.
  int deg = n;
  while (deg > 0 && std::abs(p.coeffs[deg]) < 1e-250 * cmax) --deg;
  int low = 0;
  while (low < deg && std::abs(p.coeffs[low]) < 1e-300) ++low;  // exact zeros at the origin

  Constellation out;
  out.S = p.S;
  for (int i = deg; i < n; ++i) out.points.push_back({0.0, 0.0});
  for (int i = 0; i < low; ++i) out.points.push_back({std::numbers::pi, 0.0});
  if (deg == low) return out;

  Eigen::VectorXcd c = p.coeffs.segment(low, deg - low + 1) / cmax;
  const int d = deg - low;

  // Rescale the variable so the root magnitudes cluster near 1.
  double scale = std::pow(std::abs(c[0] / c[d]), 1.0 / d);
  scale = std::clamp(scale, 1e-8, 1e8);
  Eigen::VectorXcd cs(d + 1);
  double pw = 1.0;
  for (int i = 0; i <= d; ++i) {
    cs[i] = c[i] * pw;
    pw *= scale;
  }
  cs /= cs.cwiseAbs().maxCoeff();

  // Companion matrix eigenvalues.
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    comp(i, d - 1) = -cs[i] / cs[d];
    if (i + 1 < d) comp(i + 1, i) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<Complex> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()[i];

  // Newton polish (helps simple roots; harmless on multiple ones).
  const Eigen::VectorXcd dcs = poly_derivative(cs);
  for (auto& z : roots) {
    for (int it = 0; it < 2; ++it) {
      const Complex pv = poly_eval(cs, z);
      const Complex dv = poly_eval(dcs, z);
      if (std::abs(dv) < 1e-300) break;
      const Complex step = pv / dv;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(z))) break;
      z -= step;
    }
  }

  // Single-linkage clustering; a cluster of k roots is collapsed to its
  // centroid only when the polynomial is consistent with a k-fold root there
  // (all lower Taylor coefficients at the centroid negligibly small),
  // otherwise it is split at its widest internal gap. This recovers exact
  // multiple roots (which raw eigenvalues scatter over a wide disk) without
  // gluing genuinely distinct nearby roots.
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return std::arg(a) != std::arg(b) ? std::arg(a) < std::arg(b) : std::abs(a) < std::abs(b); });
  std::vector<std::vector<Complex>> clusters;
  {
    // Eigenvalues of a k-fold root scatter over a disk of radius roughly
    // |c|^(1/k) * eps^(1/k), which for k ~ 20 approaches 0.4 even in double
    // precision; gather generously and let the consistency check below split
    // clusters that glued genuinely distinct roots.
    const double gather = 0.4;
    std::vector<bool> used(d, false);
    for (int i = 0; i < d; ++i) {
      if (used[i]) continue;
      std::vector<Complex> cl{roots[i]};
      used[i] = true;
      bool grew = true;
      while (grew) {
        grew = false;
        for (int j = 0; j < d; ++j) {
          if (used[j]) continue;
          for (const Complex& z : cl) {
            if (std::abs(roots[j] - z) < gather * (1.0 + std::abs(z))) {
              cl.push_back(roots[j]);
              used[j] = true;
              grew = true;
              break;
            }
          }
        }
      }
      clusters.push_back(std::move(cl));
    }
  }

  std::vector<Complex> final_roots;
  // Recursively validate clusters.
  std::vector<std::vector<Complex>> work = std::move(clusters);
  while (!work.empty()) {
    std::vector<Complex> cl = std::move(work.back());
    work.pop_back();
    const int k = static_cast<int>(cl.size());
    if (k == 1) {
      final_roots.push_back(cl[0]);
      continue;
    }
    Complex centroid = 0.0;
    for (const Complex& z : cl) centroid += z;
    centroid /= double(k);
    Eigen::VectorXcd local = taylor_shift(cs, centroid);
    // A k-fold root at distance delta from the centroid makes |local[j]| of
    // order C(k,j) |local[k]| delta^(k-j). Accept only when every coefficient
    // is explained by a delta much smaller than the cluster's own radius --
    // i.e. a single k-fold root fits the cluster far better than k separate
    // roots would -- or by Taylor-shift rounding noise, which accumulates
    // like (1 + |centroid|)^(d-j) * machine-eps.
    double radius = 0.0;
    for (const Complex& z : cl) radius = std::max(radius, std::abs(z - centroid));
    const double delta = std::max(1e-7, 0.1 * radius);
    const double base = 1.0 + std::abs(centroid);
    bool consistent = std::abs(local[k]) > 1e-250;
    for (int j = 0; j < k && consistent; ++j) {
      const double noise = 1e-12 * std::pow(base, d - j);
      const double bound =
          noise + std::abs(local[k]) * std::exp(log_binom(k, j)) * std::pow(delta, k - j);
      if (std::abs(local[j]) > bound) consistent = false;
    }
    if (consistent) {
      // Refine: Newton on the (k-1)-th derivative, whose simple root is the
      // k-fold root location.
      Complex zc = centroid;
      Eigen::VectorXcd dk = cs;
      for (int j = 0; j < k - 1; ++j) dk = poly_derivative(dk);
      const Eigen::VectorXcd ddk = poly_derivative(dk);
      for (int it = 0; it < 3; ++it) {
        const Complex dv = poly_eval(ddk, zc);
        if (std::abs(dv) < 1e-300) break;
        zc -= poly_eval(dk, zc) / dv;
      }
      for (int j = 0; j < k; ++j) final_roots.push_back(zc);
    } else {
      // Split at the widest gap between angularly sorted members.
      std::sort(cl.begin(), cl.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
      });
      // Find the pair with maximum nearest-neighbour separation along the sort.
      int cut = 1;
      double best = -1.0;
      for (int j = 1; j < k; ++j) {
        const double gap = std::abs(cl[j] - cl[j - 1]);
        if (gap > best) {
          best = gap;
          cut = j;
        }
      }
      work.emplace_back(cl.begin(), cl.begin() + cut);
      work.emplace_back(cl.begin() + cut, cl.end());
    }
  }

  for (Complex z : final_roots) {
    z *= scale;  // undo the variable rescale
    const double r = std::abs(z);
    SpherePoint pt;
    if (r < 1e-300) {
      pt = {std::numbers::pi, 0.0};
    } else {
      pt.theta = 2.0 * std::atan2(1.0, r);
      pt.phi = wrap_phi(std::arg(-z));
    }
    out.points.push_back(pt);
  }
  return out;
}

Constellation constellation(const SpinState& state) {
  return polynomial_to_constellation(state_to_polynomial(state));
}

SpinState constellation_to_state(const Constellation& c) {
  const int n = c.S.twice();
  if (static_cast<int>(c.points.size()) != n) {
    throw std::invalid_argument("constellation_to_state: need exactly 2S points");
  }
  std::vector<Complex> roots;
  int n_inf = 0;
  for (const SpherePoint& pt : c.points) {
    if (pt.theta < 1e-12) {
      ++n_inf;
    } else {
      const double r = 1.0 / std::tan(pt.theta / 2);
      roots.push_back(-r * std::exp(Complex(0.0, pt.phi)));
    }
  }
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(n + 1);
  coeffs[0] = 1.0;
  int deg = 0;
  for (const Complex& z : roots) {
    for (int i = deg + 1; i > 0; --i) coeffs[i] = coeffs[i - 1] - z * coeffs[i];
    coeffs[0] = -z * coeffs[0];
    ++deg;
    // keep magnitudes tame; overall scale is irrelevant
    const double mx = coeffs.head(deg + 1).cwiseAbs().maxCoeff();
    if (mx > 1e100) coeffs.head(deg + 1) /= mx;
  }
  Eigen::VectorXcd amps(n + 1);
  for (int k = 0; k <= n; ++k) {
    amps[k] = coeffs[k] * std::exp(-0.5 * log_binom(n, k));
  }
  return SpinState(c.S, std::move(amps));
}

double q_function(const SpinState& state, double theta, double phi) {
  const SpinState coh = coherent_state(state.spin(), theta, phi);
  const double q = std::norm(inner(coh, state));
  return q;
}

Eigen::MatrixXd q_grid(const SpinState& state, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) throw std::domain_error("q_grid: grid sizes must be >= 2");
  Eigen::MatrixXd g(n_theta, n_phi);
  for (int j = 0; j < n_theta; ++j) {
    const double theta = std::numbers::pi * (j + 0.5) / n_theta;
    for (int k = 0; k < n_phi; ++k) {
      g(j, k) = q_function(state, theta, kTwoPi * k / n_phi);
    }
  }
  return g;
}

Eigen::Vector3d to_unit_vector(const SpherePoint& p) {
  return {std::sin(p.theta) * std::cos(p.phi), std::sin(p.theta) * std::sin(p.phi),
          std::cos(p.theta)};
}

SpherePoint to_sphere_point(const Eigen::Vector3d& v) {
  Eigen::Vector3d u = v.normalized();
  return {std::acos(std::clamp(u.z(), -1.0, 1.0)), wrap_phi(std::atan2(u.y(), u.x()))};
}

Eigen::Matrix3d constellation_rotation(const EulerAngles& R) {
  return rotation_matrix({R.alpha, -R.beta, R.gamma});
}

namespace {

// Max residual of the greedy assignment of R*a onto b; returns infinity when
// some point has no partner within slack.
double greedy_residual(const std::vector<Eigen::Vector3d>& a, const std::vector<Eigen::Vector3d>& b,
                       const Eigen::Matrix3d& R) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> used(n, false);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d ra = R * a[i];
    int best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double dist = (ra - b[j]).norm();
      if (dist < bd) {
        bd = dist;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, bd);
  }
  return worst;
}

Eigen::Matrix3d frame_from_pair(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2) {
  Eigen::Vector3d e1 = p1.normalized();
  Eigen::Vector3d e3 = p1.cross(p2);
  if (e3.norm() < 1e-12) {
    // collinear pair: any orthogonal completion
    e3 = e1.unitOrthogonal();
  }
  e3.normalize();
  Eigen::Vector3d e2 = e3.cross(e1);
  Eigen::Matrix3d f;
  f.col(0) = e1;
  f.col(1) = e2;
  f.col(2) = e3;
  return f;
}

}  // namespace

std::optional<EulerAngles> constellation_match(const Constellation& a, const Constellation& b,
                                               double tol) {
  if (a.points.size() != b.points.size()) return std::nullopt;
  const int n = static_cast<int>(a.points.size());
  if (n == 0) return EulerAngles{};

  std::vector<Eigen::Vector3d> va, vb;
  va.reserve(n);
  vb.reserve(n);
  for (const auto& p : a.points) va.push_back(to_unit_vector(p));
  for (const auto& p : b.points) vb.push_back(to_unit_vector(p));

  auto accept = [&](const Eigen::Matrix3d& R) -> std::optional<EulerAngles> {
    if (greedy_residual(va, vb, R) <= tol) return euler_from_matrix(R);
    return std::nullopt;
  };

  // Fully coincident constellations: align the common direction, twist free.
  Eigen::Vector3d ca = Eigen::Vector3d::Zero(), cb = Eigen::Vector3d::Zero();
  for (const auto& v : va) ca += v;
  for (const auto& v : vb) cb += v;
  bool a_point_like = true;
  for (const auto& v : va) a_point_like = a_point_like && (v - va[0]).norm() < 1e-9;
  if (a_point_like) {
    if (ca.norm() < 1e-12 || cb.norm() < 1e-12) return std::nullopt;
    Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(va[0], vb[0]);
    return accept(q.toRotationMatrix());
  }

  // Pick in a the most non-degenerate pair (largest cross product).
  int ia = 0, ja = 1;
  double best_cross = -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double cr = va[i].cross(va[j]).norm();
      if (cr > best_cross) {
        best_cross = cr;
        ia = i;
        ja = j;
      }
    }
  }
  const double dot_a = va[ia].dot(va[ja]);
  const Eigen::Matrix3d fa = frame_from_pair(va[ia], va[ja]);

  // Try every candidate image pair in b with a compatible opening angle.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (std::abs(vb[i].dot(vb[j]) - dot_a) > std::max(10 * tol, 1e-9) + 1e-9) continue;
      const Eigen::Matrix3d fb = frame_from_pair(vb[i], vb[j]);
      if (auto r = accept(fb * fa.transpose())) return r;
    }
  }
  return std::nullopt;
}

}  // namespace polaris
