#include "polaris/multipole.hpp"

#include <cmath>
#include <stdexcept>

namespace polaris {

MultipoleSpectrum::MultipoleSpectrum(HalfInt S, std::vector<std::vector<Complex>> shells)
    : S_(S), shells_(std::move(shells)) {
  if (static_cast<int>(shells_.size()) != S.twice() + 1) {
    throw std::invalid_argument("MultipoleSpectrum: need one shell per K = 0..2S");
  }
  for (int K = 0; K <= S.twice(); ++K) {
    if (static_cast<int>(shells_[K].size()) != 2 * K + 1) {
      throw std::invalid_argument("MultipoleSpectrum: shell K must hold 2K+1 entries");
    }
  }
}

Complex MultipoleSpectrum::rho(int K, int q) const {
  if (K < 0 || K > max_order() || std::abs(q) > K) {
    throw std::out_of_range("MultipoleSpectrum::rho: index outside table");
  }
  return shells_[K][q + K];
}

OperatorMatrix tensor_operator(HalfInt S, int K, int q) {
  if (K < 0 || K > S.twice() || std::abs(q) > K) {
    throw std::domain_error("tensor_operator: require 0 <= K <= 2S and |q| <= K");
  }
  const int dim = S.twice() + 1;
  const double w = std::sqrt(double(2 * K + 1) / dim);
  OperatorMatrix T = OperatorMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const HalfInt m = HalfInt::from_twice(-S.twice() + 2 * i);
    const HalfInt mp = m + HalfInt(q);
    if (mp.abs() > S) continue;
    T((mp.twice() + S.twice()) / 2, i) = w * clebsch_gordan(S, m, HalfInt(K), HalfInt(q), S, mp);
  }
  return T;
}

MultipoleSpectrum multipoles(const SpinState& state) {
  const HalfInt S = state.spin();
  const int dim = state.dim();
  std::vector<std::vector<Complex>> shells(S.twice() + 1);
  for (int K = 0; K <= S.twice(); ++K) {
    shells[K].assign(2 * K + 1, Complex(0));
    const double w = std::sqrt(double(2 * K + 1) / dim);
    for (int q = -K; q <= K; ++q) {
      Complex acc = 0.0;
      for (int i = 0; i < dim; ++i) {
        const int ip = i + q;
        if (ip < 0 || ip >= dim) continue;
        const HalfInt m = state.m_of(i);
        acc += clebsch_gordan(S, m, HalfInt(K), HalfInt(q), S, state.m_of(ip)) *
               state.amps()[ip] * std::conj(state.amps()[i]);
      }
      shells[K][q + K] = w * acc;
    }
  }
  return MultipoleSpectrum(S, std::move(shells));
}

MultipoleSpectrum multipoles_of_density(HalfInt S, const OperatorMatrix& rho) {
  const int dim = S.twice() + 1;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("multipoles_of_density: dimension mismatch");
  }
  std::vector<std::vector<Complex>> shells(S.twice() + 1);
  for (int K = 0; K <= S.twice(); ++K) {
    shells[K].assign(2 * K + 1, Complex(0));
    for (int q = -K; q <= K; ++q) {
      shells[K][q + K] = (rho * tensor_operator(S, K, q).adjoint()).trace();
    }
  }
  return MultipoleSpectrum(S, std::move(shells));
}

double cumulative(const MultipoleSpectrum& spec, int M) {
  if (M < 1 || M > spec.max_order()) throw std::domain_error("cumulative: M outside 1..2S");
  double acc = 0.0;
  for (int K = 1; K <= M; ++K) {
    for (int q = -K; q <= K; ++q) acc += std::norm(spec.rho(K, q));
  }
  return acc;
}

double cumulative_pure(const SpinState& state, int M) {
  const HalfInt S = state.spin();
  if (M < 1 || M > S.twice()) throw std::domain_error("cumulative_pure: M outside 1..2S");
  const int dim = state.dim();
  double acc = 0.0;
  for (int K = 1; K <= M; ++K) {
    for (int q = -K; q <= K; ++q) {
      Complex b = 0.0;
      for (int i = 0; i < dim; ++i) {
        const int ip = i + q;
        if (ip < 0 || ip >= dim) continue;
        b += clebsch_gordan(S, state.m_of(i), HalfInt(K), HalfInt(q), S, state.m_of(ip)) *
             state.amps()[ip] * std::conj(state.amps()[i]);
      }
      acc += double(2 * K + 1) / dim * std::norm(b);
    }
  }
  return acc;
}

double max_value(HalfInt S, int M) {
  const int n = S.twice();  // 2S
  if (M < 1 || M > n) throw std::domain_error("max_value: M outside 1..2S");
  const double lead = double(n) / (n + 1);
  if (M == n) return lead;  // Gamma(0) pole: second term vanishes in the limit
  // Gamma(2S+1)^2 / (Gamma(2S-M) Gamma(2S+M+2)) as an exact factorial ratio.
  double ratio = 1.0;
  // (2S)!/(2S+M+1)! = 1/((2S+1)(2S+2)...(2S+M+1))
  for (int k = n + 1; k <= n + M + 1; ++k) ratio /= k;
  // (2S)!/(2S-M-1)! = (2S)(2S-1)...(2S-M)
  for (int k = n - M; k <= n; ++k) ratio *= k;
  return lead - ratio;
}

SpinState tilde_state(const SpinState& state) {
  const HalfInt S = state.spin();
  const int dim = state.dim();
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    const HalfInt m = state.m_of(i);
    const int exp_sm = (S + m).twice() / 2;  // S+m is always an integer
    const double sign = (exp_sm % 2 == 0) ? 1.0 : -1.0;
    v[i] = sign * std::conj(state.amp(-m));
  }
  return SpinState(S, std::move(v));
}

double cumulative_projector(const SpinState& state, int M) {
  const HalfInt S = state.spin();
  if (M < 1 || M > S.twice()) throw std::domain_error("cumulative_projector: M outside 1..2S");
  const int dim = state.dim();
  const SpinState tld = tilde_state(state);
  // Product vector Phi_{(m,m')} = Psi_m * tildePsi_{m'} and the coupled basis
  // |K,Q> = sum C^{KQ}_{Sm,Sm'} |m>|m'>; the K-subspace weight is
  // sum_Q |<K,Q|Phi>|^2.
  double acc = 0.0;
  for (int K = 1; K <= M; ++K) {
    for (int Q = -2 * K; Q <= 2 * K; Q += 2) {
      const HalfInt hQ = HalfInt::from_twice(Q);
      Complex overlap = 0.0;
      for (int i = 0; i < dim; ++i) {
        const HalfInt m = state.m_of(i);
        const HalfInt mp = hQ - m;
        if (mp.abs() > S) continue;
        overlap += clebsch_gordan(S, m, S, mp, HalfInt(K), hQ) * state.amps()[i] *
                   tld.amp(mp);
      }
      acc += std::norm(overlap);
    }
  }
  return acc;
}

int unpolarization_order(const SpinState& state, double eps) {
  if (eps <= 0) throw std::domain_error("unpolarization_order: eps must be positive");
  int order = 0;
  for (int M = 1; M <= state.spin().twice(); ++M) {
    if (cumulative_pure(state, M) < eps) order = M;
    else break;
  }
  return order;
}

}  // namespace polaris
