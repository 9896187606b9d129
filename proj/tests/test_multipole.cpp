#include <doctest.h>

#include "polaris/fixtures.hpp"
#include "polaris/multipole.hpp"
#include "test_util.hpp"

using namespace polaris;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
}  // namespace

TEST_CASE("tensor operators are trace-orthonormal") {
  const HalfInt S(2);
  for (int K = 0; K <= 4; ++K) {
    for (int Kp = 0; Kp <= 4; ++Kp) {
      for (int q = -K; q <= K; ++q) {
        for (int qp = -Kp; qp <= Kp; ++qp) {
          const Complex tr =
              (tensor_operator(S, K, q).adjoint() * tensor_operator(S, Kp, qp)).trace();
          const double expect = (K == Kp && q == qp) ? 1.0 : 0.0;
          CHECK(std::abs(tr - expect) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("monopole is fixed by normalization") {
  std::mt19937_64 rng(21);
  for (int ts = 1; ts <= 6; ++ts) {
    const auto psi = testutil::random_state(h(ts), rng);
    const auto spec = multipoles(psi);
    CHECK(std::abs(spec.rho(0, 0) - 1.0 / std::sqrt(double(ts + 1))) < 1e-13);
  }
}

TEST_CASE("three routes to the cumulative distribution agree") {
  std::mt19937_64 rng(22);
  for (int ts : {2, 3, 4, 6, 8}) {
    const HalfInt S = h(ts);
    for (int rep = 0; rep < 5; ++rep) {
      const auto psi = testutil::random_state(S, rng);
      const auto spec = multipoles(psi);
      for (int M = 1; M <= ts; ++M) {
        const double a = cumulative(spec, M);
        const double b = cumulative_pure(psi, M);
        const double c = cumulative_projector(psi, M);
        CHECK(std::abs(a - b) < 1e-12);
        CHECK(std::abs(b - c) < 1e-10);
      }
    }
  }
}

TEST_CASE("multipoles_of_density matches pure-state path") {
  std::mt19937_64 rng(23);
  const HalfInt S(2);
  const auto psi = testutil::random_state(S, rng);
  const OperatorMatrix rho = psi.amps() * psi.amps().adjoint();
  const auto a = multipoles(psi);
  const auto b = multipoles_of_density(S, rho);
  for (int K = 0; K <= 4; ++K)
    for (int q = -K; q <= K; ++q) CHECK(std::abs(a.rho(K, q) - b.rho(K, q)) < 1e-12);
}

TEST_CASE("purity ceiling: A_2S = 2S/(2S+1) for every pure state") {
  std::mt19937_64 rng(24);
  for (int ts = 1; ts <= 12; ++ts) {
    const auto psi = testutil::random_state(h(ts), rng);
    CHECK(std::abs(cumulative_pure(psi, ts) - double(ts) / (ts + 1)) < 1e-11);
  }
}

TEST_CASE("closed-form maximum attained by |S,S> and coherent states") {
  for (int ts = 1; ts <= 12; ++ts) {
    const HalfInt S = h(ts);
    const SpinState top = basis_state(S, S);
    const SpinState coh = coherent_state(S, 1.0, 2.0);
    for (int M = 1; M <= ts; ++M) {
      const double mv = max_value(S, M);
      CHECK(std::abs(cumulative_pure(top, M) - mv) < 1e-11);
      CHECK(std::abs(cumulative_pure(coh, M) - mv) < 1e-10);
    }
  }
  CHECK(max_value(HalfInt(2), 2) == doctest::Approx(24.0 / 35.0).epsilon(1e-14));
}

TEST_CASE("random states never exceed the maximum") {
  std::mt19937_64 rng(25);
  for (int ts : {1, 3, 5, 8}) {
    const HalfInt S = h(ts);
    for (int rep = 0; rep < 50; ++rep) {
      const auto psi = testutil::random_state(S, rng);
      for (int M = 1; M <= ts; ++M) {
        CHECK(cumulative_pure(psi, M) <= max_value(S, M) + 1e-10);
      }
    }
  }
}

TEST_CASE("cumulative distribution is rotation invariant") {
  std::mt19937_64 rng(26);
  for (const HalfInt S : tabulated_spins()) {
    const SpinState psi = table1_state(S);
    const SpinState rot = rotate(psi, testutil::random_rotation(rng));
    for (int M = 1; M <= S.twice(); ++M) {
      CHECK(std::abs(cumulative_pure(psi, M) - cumulative_pure(rot, M)) < 1e-10);
    }
  }
}

TEST_CASE("tilde state conventions") {
  std::mt19937_64 rng(27);
  for (int ts : {2, 3, 5}) {
    const auto psi = testutil::random_state(h(ts), rng);
    const auto tld = tilde_state(psi);
    // applying the map twice returns the state up to the phase (-1)^{2S}
    CHECK(fidelity(tilde_state(tld), psi) == doctest::Approx(1.0).epsilon(1e-13));
    // the companion of a basis state is the opposite basis state
    const auto b = tilde_state(basis_state(h(ts), h(ts)));
    CHECK(std::abs(std::abs(b.amp(h(-ts))) - 1.0) < 1e-14);
  }
}

TEST_CASE("unpolarization order of the tabulated states") {
  for (const HalfInt S : tabulated_spins()) {
    CHECK(unpolarization_order(table1_state(S), 1e-8) == load_fixture(S).claimed_M);
  }
}

TEST_CASE("argument validation") {
  const SpinState psi = basis_state(HalfInt(1), HalfInt(0));
  CHECK_THROWS_AS(cumulative_pure(psi, 0), std::domain_error);
  CHECK_THROWS_AS(cumulative_pure(psi, 3), std::domain_error);
  CHECK_THROWS_AS(max_value(HalfInt(1), 0), std::domain_error);
  CHECK_THROWS_AS(tensor_operator(HalfInt(1), 3, 0), std::domain_error);
  CHECK_THROWS_AS(multipoles(psi).rho(1, 2), std::out_of_range);
}
