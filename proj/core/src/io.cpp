#include "polaris/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "polaris/fixtures.hpp"

namespace polaris {

Json state_to_json(const SpinState& state) {
  Json amps = Json::array();
  for (int i = 0; i < state.dim(); ++i) {
    amps.push_back({{"m", state.m_of(i).str()},
                    {"re", state.amps()[i].real()},
                    {"im", state.amps()[i].imag()}});
  }
  return {{"S", state.spin().str()}, {"amps", amps}};
}

SpinState state_from_json(const Json& j) {
  const HalfInt S = HalfInt::parse(j.at("S").get<std::string>());
  const int dim = S.twice() + 1;
  const Json& amps = j.at("amps");
  if (static_cast<int>(amps.size()) != dim) {
    throw std::invalid_argument("state JSON: expected " + std::to_string(dim) + " amplitudes");
  }
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    const Json& a = amps[i];
    const HalfInt m = HalfInt::parse(a.at("m").get<std::string>());
    const HalfInt expect = HalfInt::from_twice(-S.twice() + 2 * i);
    if (m != expect) {
      throw std::invalid_argument("state JSON: amplitudes must be ordered m = -S..S");
    }
    v[i] = Complex(a.at("re").get<double>(), a.at("im").get<double>());
  }
  return SpinState(S, std::move(v));
}

Json spectrum_to_json(const MultipoleSpectrum& spec) {
  Json rows = Json::array();
  for (int K = 0; K <= spec.max_order(); ++K) {
    for (int q = -K; q <= K; ++q) {
      const Complex r = spec.rho(K, q);
      rows.push_back({{"K", K}, {"q", q}, {"re", r.real()}, {"im", r.imag()}});
    }
  }
  return {{"S", spec.spin().str()}, {"multipoles", rows}};
}

Json points_to_json(const std::vector<SpherePoint>& pts) {
  Json arr = Json::array();
  for (const SpherePoint& p : pts) arr.push_back({{"theta", p.theta}, {"phi", p.phi}});
  return arr;
}

Json constellation_to_json(const Constellation& c) {
  return {{"S", c.S.str()}, {"points", points_to_json(c.points)}};
}

std::vector<SpherePoint> points_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : j.at("points");
  std::vector<SpherePoint> pts;
  pts.reserve(arr.size());
  for (const Json& p : arr) {
    pts.push_back({p.at("theta").get<double>(), p.at("phi").get<double>()});
  }
  return pts;
}

Constellation constellation_from_json(const Json& j) {
  Constellation c;
  c.S = HalfInt::parse(j.at("S").get<std::string>());
  c.points = points_from_json(j.at("points"));
  if (static_cast<int>(c.points.size()) != c.S.twice()) {
    throw std::invalid_argument("constellation JSON: expected 2S points");
  }
  return c;
}

namespace {

std::ostream& num(std::ostream& os) { return os << std::setprecision(17); }

}  // namespace

void write_qgrid_csv(std::ostream& os, const Eigen::MatrixXd& grid) {
  num(os);
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    for (Eigen::Index c = 0; c < grid.cols(); ++c) {
      if (c) os << ',';
      os << grid(r, c);
    }
    os << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const MultipoleSpectrum& spec) {
  num(os) << "K,q,re,im\n";
  for (int K = 0; K <= spec.max_order(); ++K) {
    for (int q = -K; q <= K; ++q) {
      const Complex r = spec.rho(K, q);
      os << K << ',' << q << ',' << r.real() << ',' << r.imag() << '\n';
    }
  }
}

void write_cumulative_csv(std::ostream& os, const SpinState& state) {
  num(os) << "M,A_M,max_value\n";
  for (int M = 1; M <= state.spin().twice(); ++M) {
    os << M << ',' << cumulative_pure(state, M) << ',' << max_value(state.spin(), M) << '\n';
  }
}

SpinState load_state(const std::string& path_or_fixture) {
  if (path_or_fixture.rfind("fixture:", 0) == 0) {
    return table1_state(HalfInt::parse(path_or_fixture.substr(8)));
  }
  return state_from_json(read_json_file(path_or_fixture));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace polaris
