// Derived observables (sector probabilities, site populations, trajectory
// sampling) and timing: analytic transfer-time sequences plus a numeric
// search for entanglement maxima.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cavex/dynamics.hpp"
#include "cavex/types.hpp"

namespace cavex {

/// Total weight in the photonic sector, sum_i |C_i|^2.
double photonic_probability(const ManifoldState& state);
/// Total weight in the atomic sector; equals 1 - photonic for a unit state.
double atomic_probability(const ManifoldState& state);

/// Closed-form photonic probability for tan_theta0 = 1 and an initial state
/// with the two photons loaded in a single cavity (equivalently, uniform
/// collective-mode amplitudes C'_l(0) = 1/sqrt(n)):
///   P_c(t) = [xi^2 (n-1)^2 + cos^2(t nu0)] / (n [1 + xi^2 (n-1)^2])
///          + (n-1) [xi^2 + cos^2(t nu1)] / (n (1 + xi^2))
/// with nu0 = sqrt(1 + xi^2 (n-1)^2), nu1 = sqrt(1 + xi^2).
double analytic_photonic_probability(const SystemParams& params, double t);

struct SitePopulation {
  double photonic = 0.0;  // |C_i|^2
  double atomic = 0.0;    // |A_i|^2
};
std::vector<SitePopulation> site_populations(const ManifoldState& state);

enum class AmplitudeKind { photonic, atomic };

struct SiteBasisLabel {
  int site = 0;
  AmplitudeKind kind = AmplitudeKind::photonic;
};

/// Population of one basis state after exact evolution to time t.
double transfer_fidelity(const SystemParams& params,
                         const ManifoldState& initial, SiteBasisLabel target,
                         double t);

enum class TransferScenario {
  n2_photon_transfer,      // T = (2k+1) pi / (4 xi)
  n3_photon_transfer,      // T = (2k+1) pi / (6 xi)
  n2_max_entanglement,     // T = (2l+1) pi / (2 sqrt(1+xi^2))
  n3_excitation_transfer,  // t = k pi whenever 3 k xi is an odd integer
};

TransferScenario parse_transfer_scenario(const std::string& name);

/// The first `count` analytic event times for the scenario at the given
/// parameters. For the excitation scenario the admissible multiples k are
/// scanned from the given xi; fewer (possibly zero) times may come back.
std::vector<double> predicted_transfer_times(const SystemParams& params,
                                             TransferScenario scenario,
                                             int count);

enum class TransferEventKind {
  photon_transfer,
  excitation_transfer,
  max_entanglement,
};

struct TransferEvent {
  double time = 0.0;
  double fidelity = 0.0;  // population or concurrence reached at `time`
  TransferEventKind kind = TransferEventKind::max_entanglement;
  int source = 0;
  int target = 0;
};

struct TimeWindow {
  double begin = 0.0;
  double end = 0.0;
};

/// Locates local maxima of the pair concurrence along the exact trajectory.
/// Samples a uniform grid (step capped by the fastest mode period), brackets
/// each maximum, then refines it by golden-section search to 1e-9 in time.
/// Returns at most `count` events in time order; none found is an empty list.
std::vector<TransferEvent> find_max_concurrence_times(
    const SystemParams& params, const ManifoldState& initial,
    std::pair<int, int> pair, TimeWindow window, int count);

/// Sampled observables along one trajectory.
struct TimeSeries {
  std::vector<std::string> columns;        // leading column is "t"
  std::vector<std::vector<double>> rows;
};

struct TrajectoryRequest {
  double t_max = 0.0;
  double dt = 0.0;
  EvolutionMethod method = EvolutionMethod::exact;
  bool populations = false;
  bool probabilities = false;
  std::vector<std::pair<int, int>> concurrence_pairs;
};

/// Evolves from t = 0 in steps of dt and records amplitudes plus the
/// requested observables. Columns: t, ReC_i, ImC_i, ReA_i, ImA_i per site,
/// then per-site populations, then P_c and P_a, then one concurrence column
/// per pair, in that order.
TimeSeries record_trajectory(const SystemParams& params,
                             const ManifoldState& initial,
                             const TrajectoryRequest& request);

}  // namespace cavex
