#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polaris/spin_state.hpp"

namespace polaris {

/// Exact amplitude value s1*sqrt(p/q) + i s2*sqrt(pi/qi); keeps the tabulated
/// states free of decimal transcription error.
struct Radical {
  int sign_re = 1;
  long long num_re = 0, den_re = 1;
  int sign_im = 1;
  long long num_im = 0, den_im = 1;

  [[nodiscard]] Complex value() const;
};

enum class DesignRelation { same, similar, different };

struct FixtureRecord {
  HalfInt S;
  int claimed_M = 0;
  std::vector<std::pair<HalfInt, Radical>> amplitudes;  // nonzero entries only
  std::string constellation_name;
  std::optional<int> design_t;
  DesignRelation design_relation = DesignRelation::same;

  [[nodiscard]] SpinState state() const;
};

struct FixtureReport {
  double norm_error = 0.0;
  double cumulative_at_M = 0.0;
  std::optional<double> cumulative_next;  // absent when claimed_M = 2S
  std::optional<int> design_order;        // computed when design_relation = same
  bool passed = false;
};

/// All tabulated spins, ascending.
const std::vector<HalfInt>& tabulated_spins();

/// Record for a tabulated spin; throws std::out_of_range otherwise.
const FixtureRecord& load_fixture(HalfInt S);

/// The tabulated state itself.
SpinState table1_state(HalfInt S);

/// Checks normalization, the claimed unpolarization order (A_M < 1e-10 and,
/// when applicable, A_{M+1} > 1e-6), and the design order when the tabulated
/// constellation is exactly the named solid.
FixtureReport verify_fixture(HalfInt S);

}  // namespace polaris
