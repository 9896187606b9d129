#include "polaris/angular.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace polaris {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

const BigInt& big_factorial(int n) {
  static std::vector<BigInt> table = {1};
  static std::mutex mtx;
  std::lock_guard lock(mtx);
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<int>(table.size()));
  }
  return table[n];
}

// Factorial of a twice-value that must be even and nonnegative.
const BigInt& fact2(int twice) {
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("fact2: bad argument");
  return big_factorial(twice / 2);
}

struct CgKey {
  int a, b, c, d, e, f;
  bool operator==(const CgKey&) const = default;
};

struct CgKeyHash {
  size_t operator()(const CgKey& k) const {
    size_t h = 1469598103934665603ull;
    for (int v : {k.a, k.b, k.c, k.d, k.e, k.f}) {
      h ^= static_cast<size_t>(static_cast<unsigned>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

double clebsch_gordan_uncached(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                               HalfInt J, HalfInt M) {
  // Selection rules give exact zeros.
  if (M != m1 + m2) return 0.0;
  if (J > j1 + j2 || J < (j1 - j2).abs()) return 0.0;
  if ((j1 + j2 - J).twice() % 2 != 0) return 0.0;  // 2J must fit the coupling parity

  const int t_j1j2mJ = (j1 + j2 - J).twice();
  const int t_j1mj2J = (j1 - j2 + J).twice();
  const int t_mj1j2J = (-j1 + j2 + J).twice();

  // Prefactor squared, kept exact.
  BigRat pre(J.twice() + 1, 1);
  pre *= BigRat(fact2(t_j1j2mJ) * fact2(t_j1mj2J) * fact2(t_mj1j2J),
                fact2((j1 + j2 + J).twice() + 2));
  pre *= BigRat(fact2((J + M).twice()) * fact2((J - M).twice()) *
                    fact2((j1 - m1).twice()) * fact2((j1 + m1).twice()) *
                    fact2((j2 - m2).twice()) * fact2((j2 + m2).twice()),
                1);

  // Racah sum over k, exact rational.
  const int t_a = (j1 + j2 - J).twice();
  const int t_b = (j1 - m1).twice();
  const int t_c = (j2 + m2).twice();
  const int t_d = (J - j2 + m1).twice();
  const int t_e = (J - j1 - m2).twice();
  const int k_min = std::max({0, -t_d, -t_e});
  const int k_max = std::min({t_a, t_b, t_c});

  BigRat sum(0);
  for (int tk = k_min; tk <= k_max; tk += 2) {
    BigInt denom = fact2(tk) * fact2(t_a - tk) * fact2(t_b - tk) * fact2(t_c - tk) *
                   fact2(t_d + tk) * fact2(t_e + tk);
    BigRat term(1, denom);
    if ((tk / 2) % 2 != 0) term = -term;
    sum += term;
  }
  if (sum == 0) return 0.0;

  BigRat squared = pre * sum * sum;
  double mag = std::sqrt(squared.convert_to<double>());
  return sum < 0 ? -mag : mag;
}

}  // namespace

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  if (!valid_projection(j1, m1) || !valid_projection(j2, m2) || !valid_projection(J, M)) {
    throw std::domain_error("clebsch_gordan: projection out of range or parity mismatch");
  }
  static std::unordered_map<CgKey, double, CgKeyHash> cache;
  static std::shared_mutex mtx;
  const CgKey key{j1.twice(), m1.twice(), j2.twice(), m2.twice(), J.twice(), M.twice()};
  {
    std::shared_lock lock(mtx);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  double val = clebsch_gordan_uncached(j1, m1, j2, m2, J, M);
  {
    std::unique_lock lock(mtx);
    cache.emplace(key, val);
  }
  return val;
}

double wigner_d_small(HalfInt j, HalfInt mp, HalfInt m, double beta) {
  if (!valid_projection(j, mp) || !valid_projection(j, m)) {
    throw std::domain_error("wigner_d_small: projection out of range");
  }
  // d^j_{mp,m} = sum_k (-1)^{mp-m+k} sqrt((j+mp)!(j-mp)!(j+m)!(j-m)!)
  //              / [(j+m-k)! k! (mp-m+k)! (j-mp-k)!]
  //              * cos(b/2)^{2j+m-mp-2k} sin(b/2)^{mp-m+2k}
  const int t_jpm = (j + m).twice(), t_jmm = (j - m).twice();
  const int t_jpmp = (j + mp).twice(), t_jmmp = (j - mp).twice();
  const int t_diff = (mp - m).twice();

  auto fct = [](int twice) { return fact2(twice).convert_to<double>(); };
  const double root = std::sqrt(fct(t_jpmp) * fct(t_jmmp) * fct(t_jpm) * fct(t_jmm));
  const double ch = std::cos(beta / 2), sh = std::sin(beta / 2);

  int k_min = std::max(0, -t_diff);
  int k_max = std::min(t_jpm, t_jmmp);
  double sum = 0.0;
  for (int tk = k_min; tk <= k_max; tk += 2) {
    double denom = fct(t_jpm - tk) * fct(tk) * fct(t_diff + tk) * fct(t_jmmp - tk);
    // exponents: cos -> 2j + m - mp - 2k, sin -> mp - m + 2k (all integers)
    int cos_exp = j.twice() + (m - mp).twice() / 2 - tk;
    int sin_exp = (t_diff + 2 * tk) / 2;
    double term = std::pow(ch, cos_exp) * std::pow(sh, sin_exp) / denom;
    if (((t_diff / 2 + tk / 2) % 2 + 2) % 2 != 0) term = -term;
    sum += term;
  }
  return root * sum;
}

std::complex<double> wigner_D(HalfInt j, HalfInt mp, HalfInt m, const EulerAngles& R) {
  const double d = wigner_d_small(j, mp, m, R.beta);
  const std::complex<double> ph =
      std::exp(std::complex<double>(0.0, -(mp.value() * R.alpha + m.value() * R.gamma)));
  return ph * d;
}

EulerAngles EulerAngles::normalized() const {
  return euler_from_matrix(rotation_matrix(*this));
}

Eigen::Matrix3d rotation_matrix(const EulerAngles& R) {
  Eigen::Matrix3d rz1 = Eigen::AngleAxisd(R.alpha, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  Eigen::Matrix3d ry = Eigen::AngleAxisd(R.beta, Eigen::Vector3d::UnitY()).toRotationMatrix();
  Eigen::Matrix3d rz2 = Eigen::AngleAxisd(R.gamma, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  return rz1 * ry * rz2;
}

EulerAngles euler_from_matrix(const Eigen::Matrix3d& rot) {
  constexpr double two_pi = 2 * std::numbers::pi;
  auto wrap = [&](double a) {
    a = std::fmod(a, two_pi);
    return a < 0 ? a + two_pi : a;
  };
  EulerAngles e;
  const double c = std::clamp(rot(2, 2), -1.0, 1.0);
  e.beta = std::acos(c);
  if (std::abs(c) < 1.0 - 1e-12) {
    e.alpha = wrap(std::atan2(rot(1, 2), rot(0, 2)));
    e.gamma = wrap(std::atan2(rot(2, 1), -rot(2, 0)));
  } else {
    // Gimbal-degenerate: fold everything into alpha.
    // beta = 0:  R = Rz(alpha+gamma);  beta = pi:  R = Rz(alpha-gamma) Ry(pi).
    e.alpha = c > 0 ? wrap(std::atan2(rot(1, 0), rot(0, 0)))
                    : wrap(std::atan2(-rot(1, 0), -rot(0, 0)));
    e.gamma = 0.0;
  }
  return e;
}

EulerAngles compose(const EulerAngles& r1, const EulerAngles& r2) {
  return euler_from_matrix(rotation_matrix(r1) * rotation_matrix(r2));
}

}  // namespace polaris
