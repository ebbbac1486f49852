#include "cavex/analysis.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "cavex/entanglement.hpp"

namespace cavex {

namespace {

constexpr double kTimeTolerance = 1e-9;

// Golden-section maximisation on a bracketed interval.
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

bool is_odd_integer(double x, double tol) {
  const double nearest = 2.0 * std::round((x - 1.0) / 2.0) + 1.0;
  return nearest > 0.0 && std::abs(x - nearest) <= tol;
}

}  // namespace

double photonic_probability(const ManifoldState& state) {
  double p = 0.0;
  for (int i = 0; i < state.sites(); ++i) p += std::norm(state.photon_amp(i));
  return p;
}

double atomic_probability(const ManifoldState& state) {
  double p = 0.0;
  for (int i = 0; i < state.sites(); ++i) p += std::norm(state.atom_amp(i));
  return p;
}

double analytic_photonic_probability(const SystemParams& params, double t) {
  const double n = params.n;
  const double phi = params.xi * (params.n - 1);
  const double nu0 = std::sqrt(1.0 + phi * phi);
  const double nu1 = std::sqrt(1.0 + params.xi * params.xi);
  const double c0 = std::cos(t * nu0);
  const double c1 = std::cos(t * nu1);
  return (phi * phi + c0 * c0) / (n * nu0 * nu0) +
         (n - 1.0) * (params.xi * params.xi + c1 * c1) / (n * nu1 * nu1);
}

std::vector<SitePopulation> site_populations(const ManifoldState& state) {
  std::vector<SitePopulation> pops(state.sites());
  for (int i = 0; i < state.sites(); ++i) {
    pops[i].photonic = std::norm(state.photon_amp(i));
    pops[i].atomic = std::norm(state.atom_amp(i));
  }
  return pops;
}

double transfer_fidelity(const SystemParams& params,
                         const ManifoldState& initial, SiteBasisLabel target,
                         double t) {
  if (target.site < 0 || target.site >= params.n)
    throw std::invalid_argument("transfer_fidelity: target site out of range");
  const ManifoldState evolved = evolve(params, initial, t);
  const Complex amp = target.kind == AmplitudeKind::photonic
                          ? evolved.photon_amp(target.site)
                          : evolved.atom_amp(target.site);
  return std::norm(amp);
}

TransferScenario parse_transfer_scenario(const std::string& name) {
  if (name == "n2-photon-transfer") return TransferScenario::n2_photon_transfer;
  if (name == "n3-photon-transfer") return TransferScenario::n3_photon_transfer;
  if (name == "n2-max-entanglement")
    return TransferScenario::n2_max_entanglement;
  if (name == "n3-excitation-transfer")
    return TransferScenario::n3_excitation_transfer;
  throw std::invalid_argument("unknown transfer scenario: " + name);
}

std::vector<double> predicted_transfer_times(const SystemParams& params,
                                             TransferScenario scenario,
                                             int count) {
  if (count < 1)
    throw std::invalid_argument("predicted_transfer_times: count must be >= 1");
  const int expected_n =
      (scenario == TransferScenario::n2_photon_transfer ||
       scenario == TransferScenario::n2_max_entanglement)
          ? 2
          : 3;
  if (params.n != expected_n)
    throw std::invalid_argument(
        "predicted_transfer_times: scenario requires n = " +
        std::to_string(expected_n));
  constexpr double pi = std::numbers::pi;
  std::vector<double> times;
  times.reserve(count);
  switch (scenario) {
    case TransferScenario::n2_photon_transfer:
    case TransferScenario::n3_photon_transfer: {
      if (params.xi == 0.0)
        throw std::invalid_argument(
            "predicted_transfer_times: photon transfer needs xi != 0");
      const double denom =
          scenario == TransferScenario::n2_photon_transfer ? 4.0 : 6.0;
      for (int k = 0; k < count; ++k)
        times.push_back((2.0 * k + 1.0) * pi / (denom * std::abs(params.xi)));
      break;
    }
    case TransferScenario::n2_max_entanglement: {
      const double nu = std::sqrt(1.0 + params.xi * params.xi);
      for (int l = 0; l < count; ++l)
        times.push_back((2.0 * l + 1.0) * pi / (2.0 * nu));
      break;
    }
    case TransferScenario::n3_excitation_transfer: {
      // t = k pi for every k with 3 k xi an odd integer.
      constexpr long kMaxMultiple = 1000000;
      for (long k = 1; k <= kMaxMultiple && int(times.size()) < count; ++k) {
        if (is_odd_integer(3.0 * double(k) * params.xi, 1e-9))
          times.push_back(double(k) * pi);
      }
      break;
    }
  }
  return times;
}

std::vector<TransferEvent> find_max_concurrence_times(
    const SystemParams& params, const ManifoldState& initial,
    std::pair<int, int> pair, TimeWindow window, int count) {
  if (!(window.end > window.begin))
    throw std::invalid_argument(
        "find_max_concurrence_times: window must have positive length");
  if (count < 1)
    throw std::invalid_argument(
        "find_max_concurrence_times: count must be >= 1");

  const auto value = [&](double t) {
    return concurrence(
        reduce_to_atom_pair(evolve(params, initial, t), pair.first,
                            pair.second));
  };

  // Step tied to the fastest mode frequency so maxima are not aliased.
  const double phi = params.xi * (params.n - 1);
  const double step =
      std::min(0.01, std::numbers::pi / (50.0 * std::sqrt(1.0 + phi * phi)));

  const auto samples =
      std::size_t(std::floor((window.end - window.begin) / step)) + 1;
  std::vector<double> values(samples);
  for (std::size_t k = 0; k < samples; ++k)
    values[k] = value(window.begin + double(k) * step);

  std::vector<TransferEvent> events;
  for (std::size_t k = 1; k + 1 < samples && int(events.size()) < count; ++k) {
    const bool local_max = values[k] >= values[k - 1] &&
                           values[k] >= values[k + 1] &&
                           (values[k] > values[k - 1] ||
                            values[k] > values[k + 1]);
    if (!local_max) continue;
    const double lo = window.begin + double(k - 1) * step;
    const double hi = window.begin + double(k + 1) * step;
    TransferEvent event;
    event.time = golden_max(value, lo, hi, kTimeTolerance);
    event.fidelity = value(event.time);
    event.kind = TransferEventKind::max_entanglement;
    event.source = pair.first;
    event.target = pair.second;
    events.push_back(event);
  }
  return events;
}

TimeSeries record_trajectory(const SystemParams& params,
                             const ManifoldState& initial,
                             const TrajectoryRequest& request) {
  if (!(request.dt > 0.0))
    throw std::invalid_argument("record_trajectory: dt must be > 0");
  if (request.t_max < 0.0)
    throw std::invalid_argument("record_trajectory: t_max must be >= 0");

  TimeSeries series;
  series.columns.push_back("t");
  for (int i = 0; i < params.n; ++i) {
    series.columns.push_back("ReC_" + std::to_string(i));
    series.columns.push_back("ImC_" + std::to_string(i));
    series.columns.push_back("ReA_" + std::to_string(i));
    series.columns.push_back("ImA_" + std::to_string(i));
  }
  if (request.populations)
    for (int i = 0; i < params.n; ++i) {
      series.columns.push_back("pop_c_" + std::to_string(i));
      series.columns.push_back("pop_a_" + std::to_string(i));
    }
  if (request.probabilities) {
    series.columns.push_back("P_c");
    series.columns.push_back("P_a");
  }
  for (const auto& [a, b] : request.concurrence_pairs)
    series.columns.push_back("concurrence_" + std::to_string(a) + "_" +
                             std::to_string(b));

  const auto steps =
      std::size_t(std::floor(request.t_max / request.dt + 1e-9));
  series.rows.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = double(k) * request.dt;
    const ManifoldState state =
        evolve_with(request.method, params, initial, t);
    std::vector<double> row;
    row.reserve(series.columns.size());
    row.push_back(t);
    for (int i = 0; i < params.n; ++i) {
      row.push_back(state.photon_amp(i).real());
      row.push_back(state.photon_amp(i).imag());
      row.push_back(state.atom_amp(i).real());
      row.push_back(state.atom_amp(i).imag());
    }
    if (request.populations)
      for (const SitePopulation& pop : site_populations(state)) {
        row.push_back(pop.photonic);
        row.push_back(pop.atomic);
      }
    if (request.probabilities) {
      row.push_back(photonic_probability(state));
      row.push_back(atomic_probability(state));
    }
    for (const auto& [a, b] : request.concurrence_pairs)
      row.push_back(concurrence(reduce_to_atom_pair(state, a, b)));
    series.rows.push_back(std::move(row));
  }
  return series;
}

}  // namespace cavex
