#include "polaris/search.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace polaris {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::uint64_t& s) { return (splitmix64(s) >> 11) * 0x1.0p-53; }

// Box-Muller; hand-rolled so the stream is identical across standard libraries.
double gaussian(std::uint64_t& s) {
  double u1 = unit_uniform(s);
  while (u1 <= 1e-300) u1 = unit_uniform(s);
  const double u2 = unit_uniform(s);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Precomputed Clebsch-Gordan couplings for the quartic objective.
struct ObjectiveContext {
  HalfInt S;
  int M;
  int dim;
  // cg[K-1][q+K][i] = C^{S m_{i+q}}_{S m_i, K q} (zero when i+q out of range)
  std::vector<std::vector<std::vector<double>>> cg;
  std::vector<double> weight;  // (2K+1)/(2S+1), index K-1

  ObjectiveContext(HalfInt S_, int M_) : S(S_), M(M_), dim(S_.twice() + 1) {
    if (M < 1 || M > S.twice()) throw std::domain_error("objective: M outside 1..2S");
    cg.resize(M);
    weight.resize(M);
    for (int K = 1; K <= M; ++K) {
      weight[K - 1] = double(2 * K + 1) / dim;
      auto& shell = cg[K - 1];
      shell.assign(2 * K + 1, std::vector<double>(dim, 0.0));
      for (int q = -K; q <= K; ++q) {
        for (int i = 0; i < dim; ++i) {
          const int ip = i + q;
          if (ip < 0 || ip >= dim) continue;
          const HalfInt m = HalfInt::from_twice(-S.twice() + 2 * i);
          shell[q + K][i] =
              clebsch_gordan(S, m, HalfInt(K), HalfInt(q), S, m + HalfInt(q));
        }
      }
    }
  }

  // Value and gradient with respect to the 2*dim raw parameters.
  double eval(const Eigen::VectorXd& p, Eigen::VectorXd* grad) const {
    Eigen::VectorXcd psi(dim);
    for (int i = 0; i < dim; ++i) psi[i] = Complex(p[2 * i], p[2 * i + 1]);
    const double n = psi.squaredNorm();
    if (n < 1e-300) throw std::domain_error("objective: zero parameter vector");

    Eigen::VectorXcd wg = Eigen::VectorXcd::Zero(dim);  // d value / d conj(psi), scaled later
    double f = 0.0;
    for (int K = 1; K <= M; ++K) {
      for (int q = -K; q <= K; ++q) {
        const auto& c = cg[K - 1][q + K];
        Complex b = 0.0;
        for (int i = 0; i < dim; ++i) {
          const int ip = i + q;
          if (ip < 0 || ip >= dim) continue;
          b += c[i] * std::conj(psi[i]) * psi[ip];
        }
        f += weight[K - 1] * std::norm(b);
        if (grad) {
          const Complex wb = weight[K - 1] * b;
          for (int i = 0; i < dim; ++i) {
            const int ip = i + q;
            if (ip < 0 || ip >= dim) continue;
            wg[i] += std::conj(wb) * c[i] * psi[ip];
            wg[ip] += wb * c[i] * psi[i];
          }
        }
      }
    }
    const double value = f / (n * n);
    if (grad) {
      grad->resize(2 * dim);
      for (int i = 0; i < dim; ++i) {
        const Complex g = wg[i] / (n * n) - (2.0 * value / n) * psi[i];
        (*grad)[2 * i] = 2.0 * g.real();
        (*grad)[2 * i + 1] = 2.0 * g.imag();
      }
    }
    return value;
  }
};

struct StartOutcome {
  Eigen::VectorXd params;
  double value = 0.0;
  bool converged = false;
  long iterations = 0;
};

// L-BFGS with Armijo backtracking.
StartOutcome run_start(const ObjectiveContext& ctx, Eigen::VectorXd x, const SearchConfig& cfg) {
  constexpr int kMemory = 8;
  std::deque<Eigen::VectorXd> s_hist, y_hist;
  std::deque<double> rho_hist;

  StartOutcome out;
  Eigen::VectorXd g;
  double fx = ctx.eval(x, &g);
  for (int it = 0; it < cfg.max_iters; ++it) {
    ++out.iterations;
    if (fx < cfg.tol_value || g.norm() < cfg.tol_grad) {
      out.converged = true;
      break;
    }
    // Two-loop recursion for the search direction.
    Eigen::VectorXd q = g;
    std::vector<double> alpha(s_hist.size());
    for (int k = static_cast<int>(s_hist.size()) - 1; k >= 0; --k) {
      alpha[k] = rho_hist[k] * s_hist[k].dot(q);
      q -= alpha[k] * y_hist[k];
    }
    if (!y_hist.empty()) {
      const double gamma = s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
      q *= gamma;
    }
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      const double beta = rho_hist[k] * y_hist[k].dot(q);
      q += (alpha[k] - beta) * s_hist[k];
    }
    Eigen::VectorXd dir = -q;
    double slope = g.dot(dir);
    if (slope >= 0) {  // not a descent direction; fall back to steepest descent
      dir = -g;
      slope = -g.squaredNorm();
    }

    double step = 1.0;
    double f_new = fx;
    Eigen::VectorXd x_new;
    bool ok = false;
    for (int bt = 0; bt < 50; ++bt) {
      x_new = x + step * dir;
      f_new = ctx.eval(x_new, nullptr);
      if (f_new <= fx + 1e-4 * step * slope) {
        ok = true;
        break;
      }
      step *= 0.5;
    }
    if (!ok) break;

    Eigen::VectorXd g_new;
    ctx.eval(x_new, &g_new);
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > kMemory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x = std::move(x_new);
    fx = f_new;
    g = std::move(g_new);
  }
  out.params = std::move(x);
  out.value = fx;
  return out;
}

}  // namespace

std::pair<double, Eigen::VectorXd> objective_and_gradient(const Eigen::VectorXd& params, HalfInt S,
                                                          int M) {
  const ObjectiveContext ctx(S, M);
  if (params.size() != 2 * ctx.dim) {
    throw std::invalid_argument("objective_and_gradient: need 2(2S+1) parameters");
  }
  Eigen::VectorXd grad;
  const double v = ctx.eval(params, &grad);
  return {v, std::move(grad)};
}

SearchResult minimize(const SearchConfig& cfg) {
  if (cfg.multistarts < 1) throw std::domain_error("minimize: multistarts >= 1 required");
  const ObjectiveContext ctx(cfg.S, cfg.M);

  StartOutcome best;
  best.value = std::numeric_limits<double>::infinity();
  int converged = 0;
  long iters = 0;
  for (int start = 0; start < cfg.multistarts; ++start) {
    std::uint64_t stream = cfg.rng_seed;
    (void)splitmix64(stream);  // decorrelate from the raw seed
    stream ^= 0x5851f42d4c957f2dULL * (std::uint64_t(start) + 1);
    Eigen::VectorXd x(2 * ctx.dim);
    for (int i = 0; i < x.size(); ++i) x[i] = gaussian(stream);
    StartOutcome o = run_start(ctx, std::move(x), cfg);
    iters += o.iterations;
    if (o.converged) ++converged;
    if (o.value < best.value) best = std::move(o);
  }

  Eigen::VectorXcd amps(ctx.dim);
  for (int i = 0; i < ctx.dim; ++i) amps[i] = Complex(best.params[2 * i], best.params[2 * i + 1]);
  SpinState state(cfg.S, std::move(amps));
  SearchResult res{std::move(state), best.value, 0, converged, iters, cfg.rng_seed};
  res.best_value = cumulative_pure(res.best_state, cfg.M);
  res.certified_order = unpolarization_order(res.best_state, 1e-8);
  return res;
}

int max_killable_order(HalfInt S, const SearchConfig& base_cfg, double eps) {
  if (eps <= 0) throw std::domain_error("max_killable_order: eps must be positive");
  int order = 0;
  for (int M = 1; M <= S.twice(); ++M) {
    SearchConfig cfg = base_cfg;
    cfg.S = S;
    cfg.M = M;
    if (minimize(cfg).best_value < eps) order = M;
    else break;
  }
  return order;
}

}  // namespace polaris
