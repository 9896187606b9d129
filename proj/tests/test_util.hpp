#pragma once

#include <random>

#include "polaris/spin_state.hpp"

namespace polaris::testutil {

inline SpinState random_state(HalfInt S, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(S.twice() + 1);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(g(rng), g(rng));
  return SpinState(S, std::move(v));
}

inline EulerAngles random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {2 * M_PI * u(rng), std::acos(2 * u(rng) - 1), 2 * M_PI * u(rng)};
}

}  // namespace polaris::testutil
