#include "polaris/fixtures.hpp"

#include <cmath>
#include <stdexcept>

#include "polaris/design.hpp"
#include "polaris/majorana.hpp"
#include "polaris/multipole.hpp"

namespace polaris {

Complex Radical::value() const {
  const double re = sign_re * std::sqrt(double(num_re) / double(den_re));
  const double im = sign_im * std::sqrt(double(num_im) / double(den_im));
  return {re, im};
}

SpinState FixtureRecord::state() const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(S.twice() + 1);
  for (const auto& [m, r] : amplitudes) {
    v[(m.twice() + S.twice()) / 2] = r.value();
  }
  return SpinState(S, std::move(v));
}

namespace {

Radical rad(long long num, long long den, int sign = 1) {
  return Radical{sign, num, den, 1, 0, 1};
}

Radical rad_c(int s_re, long long num_re, long long den_re, int s_im, long long num_im,
              long long den_im) {
  return Radical{s_re, num_re, den_re, s_im, num_im, den_im};
}

std::vector<FixtureRecord> build_records() {
  std::vector<FixtureRecord> recs;
  auto h = [](int twice) { return HalfInt::from_twice(twice); };

  recs.push_back({HalfInt(1), 1, {{HalfInt(0), rad(1, 1)}}, "radial line", 1,
                  DesignRelation::same});
  recs.push_back({h(3), 1, {{h(-3), rad(1, 2)}, {h(3), rad(1, 2)}}, "equatorial triangle", 1,
                  DesignRelation::same});
  recs.push_back({HalfInt(2), 2, {{HalfInt(-1), rad(2, 3)}, {HalfInt(2), rad(1, 3)}},
                  "tetrahedron", 2, DesignRelation::same});
  recs.push_back({h(5), 1, {{h(-5), rad(1, 2)}, {h(5), rad(1, 2)}},
                  "equatorial triangle + poles", 1, DesignRelation::same});
  recs.push_back({HalfInt(3), 3, {{HalfInt(-2), rad(1, 2)}, {HalfInt(2), rad(1, 2)}},
                  "octahedron", 3, DesignRelation::same});
  recs.push_back({h(7), 2,
                  {{h(-7), rad(2, 9)}, {h(-1), rad(7, 18)}, {h(5), rad(7, 18)}},
                  "two triangles + pole", 2, DesignRelation::similar});
  recs.push_back({HalfInt(4), 3,
                  {{HalfInt(-4), rad(5, 24)}, {HalfInt(0), rad(7, 12)}, {HalfInt(4), rad(5, 24)}},
                  "cube", 3, DesignRelation::same});
  recs.push_back({h(9), 2,
                  {{h(-9), rad(1, 6)}, {h(-3), rad(1, 3)}, {h(3), rad(1, 3)}, {h(9), rad(1, 6)}},
                  "three triangles", 2, DesignRelation::similar});
  recs.push_back({HalfInt(5), 3,
                  {{HalfInt(-5), rad(1, 5)}, {HalfInt(0), rad(3, 5)}, {HalfInt(5), rad(1, 5)}},
                  "pentagonal prism", 3, DesignRelation::similar});
  recs.push_back({h(11), 3,
                  {{h(-11), rad(17, 144)},
                   {h(-5), rad_c(1, 0, 1, 1, 55, 144)},
                   {h(5), rad_c(1, 0, 1, 1, 55, 144)},
                   {h(11), rad(17, 144)}},
                  "pentagon + two triangles", 3, DesignRelation::similar});
  recs.push_back({HalfInt(6), 5,
                  {{HalfInt(-5), rad(7, 25)}, {HalfInt(0), rad(11, 25, -1)},
                   {HalfInt(5), rad(7, 25, -1)}},
                  "icosahedron", 5, DesignRelation::same});
  recs.push_back({HalfInt(7), 4,
                  {{HalfInt(-6), rad(854, 3645)},
                   {HalfInt(-3), rad_c(1, 637, 13420, 1, 512603, 9783180)},
                   {HalfInt(0), rad_c(1, 12561757, 163053000, -1, 512603, 2013000)},
                   {HalfInt(3), rad_c(1, 637, 13420, 1, 512603, 9783180)},
                   {HalfInt(6), rad(854, 3645)}},
                  "four triangles + poles", 4, DesignRelation::different});
  recs.push_back({HalfInt(10), 5,
                  {{HalfInt(-10), rad(187, 1875)},
                   {HalfInt(-5), rad(209, 625)},
                   {HalfInt(0), rad(247, 1875)},
                   {HalfInt(5), rad(209, 625, -1)},
                   {HalfInt(10), rad(187, 1875)}},
                  "dodecahedron", 5, DesignRelation::similar});
  return recs;
}

const std::vector<FixtureRecord>& records() {
  static const std::vector<FixtureRecord> recs = build_records();
  return recs;
}

}  // namespace

const std::vector<HalfInt>& tabulated_spins() {
  static const std::vector<HalfInt> spins = [] {
    std::vector<HalfInt> s;
    for (const auto& r : records()) s.push_back(r.S);
    return s;
  }();
  return spins;
}

const FixtureRecord& load_fixture(HalfInt S) {
  for (const auto& r : records()) {
    if (r.S == S) return r;
  }
  throw std::out_of_range("load_fixture: spin " + S.str() + " is not tabulated");
}

SpinState table1_state(HalfInt S) { return load_fixture(S).state(); }

FixtureReport verify_fixture(HalfInt S) {
  const FixtureRecord& rec = load_fixture(S);
  FixtureReport rep;

  double norm2 = 0.0;
  for (const auto& [m, r] : rec.amplitudes) norm2 += std::norm(r.value());
  rep.norm_error = std::abs(norm2 - 1.0);

  const SpinState psi = rec.state();
  rep.cumulative_at_M = cumulative_pure(psi, rec.claimed_M);
  if (rec.claimed_M < S.twice()) {
    rep.cumulative_next = cumulative_pure(psi, rec.claimed_M + 1);
  }
  if (rec.design_relation == DesignRelation::same && rec.design_t) {
    rep.design_order = design_order(constellation(psi), *rec.design_t + 1);
  }

  rep.passed = rep.norm_error < 1e-14 && rep.cumulative_at_M < 1e-10 &&
               (!rep.cumulative_next || *rep.cumulative_next > 1e-6) &&
               (!rep.design_order || *rep.design_order == *rec.design_t);
  return rep;
}

}  // namespace polaris
