#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <random>
#include <vector>

#include "cavex/analysis.hpp"
#include "cavex/dynamics.hpp"
#include "cavex/entanglement.hpp"
#include "cavex/model.hpp"
#include "cavex/oracle.hpp"
#include "scenario.hpp"

namespace cavex::cli {

namespace {

constexpr double kPi = std::numbers::pi;

ManifoldState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(2 * n);
  for (Eigen::Index k = 0; k < v.size(); ++k)
    v(k) = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return ManifoldState(std::move(v));
}

double pair_concurrence(const ManifoldState& state, int i, int j) {
  return concurrence(reduce_to_atom_pair(state, i, j));
}

}  // namespace

int cmd_evolve(const std::string& config_path) {
  try {
    const ScenarioConfig config = parse_scenario_config(config_path);
    const SystemParams params(config.n, config.xi, config.tan_theta0);
    const ManifoldState initial = build_initial_state(config, std::cerr);

    TrajectoryRequest request;
    request.t_max = config.t_max;
    request.dt = config.dt;
    request.method = config.method;
    request.populations = config.populations;
    request.probabilities = config.probabilities;
    request.concurrence_pairs = config.concurrence_pairs;

    const TimeSeries series = record_trajectory(params, initial, request);
    write_time_series_csv(config.output, series);

    // Norm drift along the trajectory; nonzero only for approximate methods.
    double worst_drift = 0.0;
    for (const auto& row : series.rows) {
      double total = 0.0;
      for (int i = 0; i < params.n; ++i) {
        const int base = 1 + 4 * i;
        total += row[base] * row[base] + row[base + 1] * row[base + 1] +
                 row[base + 2] * row[base + 2] + row[base + 3] * row[base + 3];
      }
      worst_drift = std::max(worst_drift, std::abs(total - 1.0));
    }

    const char* method_label =
        config.method == EvolutionMethod::exact          ? "exact"
        : config.method == EvolutionMethod::closed_form  ? "closed-form"
        : config.method == EvolutionMethod::large_hopping
            ? "large-hopping (approximate)"
            : "small-hopping (approximate)";
    std::cout << "wrote " << series.rows.size() << " rows to " << config.output
              << " (method: " << method_label
              << ", max norm drift: " << format_double(worst_drift) << ")\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "evolve: " << e.what() << '\n';
    return 2;
  }
}

int cmd_fig1(const std::string& out_dir) {
  try {
    std::filesystem::create_directories(out_dir);
    const std::vector<std::pair<double, std::string>> cases = {
        {0.1, "0.1"}, {0.5, "0.5"}, {0.9, "0.9"}, {2.0, "2"}};
    constexpr double t_max = 10.0;
    constexpr double dt = 0.01;

    for (const auto& [xi, label] : cases) {
      const SystemParams params(2, xi);
      const ManifoldState initial = ManifoldState::symmetric_photonic(2);

      // Uniform grid plus the exact instants of the concurrence maxima, so
      // the sampled series attains the peak values.
      std::vector<double> times;
      const auto steps = std::size_t(std::floor(t_max / dt + 1e-9));
      times.reserve(steps + 8);
      for (std::size_t k = 0; k <= steps; ++k) times.push_back(double(k) * dt);
      const double nu = std::sqrt(1.0 + xi * xi);
      for (int l = 0;; ++l) {
        const double peak = (2.0 * l + 1.0) * kPi / (2.0 * nu);
        if (peak > t_max) break;
        times.push_back(peak);
      }
      std::sort(times.begin(), times.end());

      TimeSeries series;
      series.columns = {"t", "concurrence"};
      series.rows.reserve(times.size());
      for (double t : times) {
        const ManifoldState state = evolve(params, initial, t);
        series.rows.push_back({t, pair_concurrence(state, 0, 1)});
      }

      const std::filesystem::path path =
          std::filesystem::path(out_dir) / ("fig1_xi_" + label + ".csv");
      write_time_series_csv(path.string(), series);
      std::cout << "wrote " << path.string() << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "fig1: " << e.what() << '\n';
    return 2;
  }
}

int cmd_validate(int n_max, unsigned long seed, bool inject_sign_error) {
  if (n_max < 1 || n_max > 4) {
    std::cerr << "validate: --n-max must be between 1 and 4\n";
    return 2;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xi_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> tan_dist(0.5, 2.0);
  std::uniform_real_distribution<double> t_dist(0.0, 10.0);
  std::uniform_int_distribution<int> n_dist(1, 6);
  bool all_pass = true;

  // Fock-space reduction checks.
  {
    double worst_projection = 0.0, worst_invariance = 0.0,
           worst_excitation = 0.0;
    bool pass = true;
    int cases = 0;
    for (int n = 1; n <= n_max; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        const double xi = rep == 0 ? 0.0 : xi_dist(rng);
        const double tan = rep == 0 ? 1.0 : tan_dist(rng);
        const ReductionReport report =
            verify_reduction(SystemParams(n, xi, tan));
        worst_projection = std::max(worst_projection,
                                    report.projection_residual);
        worst_invariance =
            std::max(worst_invariance, report.manifold_invariance_residual);
        worst_excitation =
            std::max(worst_excitation, report.excitation_residual);
        pass = pass && report.pass;
        ++cases;
      }
    }
    std::cout << "reduction n<=" << n_max << " (" << cases
              << " cases): " << (pass ? "pass" : "FAIL")
              << "  worst projection " << format_double(worst_projection)
              << ", invariance " << format_double(worst_invariance)
              << ", excitation " << format_double(worst_excitation) << '\n';
    all_pass = all_pass && pass;
  }

  // Collective-mode block structure.
  {
    double worst_off = 0.0, worst_entry = 0.0;
    bool pass = true;
    int cases = 0;
    for (int n = 1; n <= 6; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        const BlockDiagonalizationReport report =
            verify_block_diagonalization(
                SystemParams(n, xi_dist(rng), tan_dist(rng)));
        worst_off = std::max(worst_off, report.off_block_residual);
        worst_entry = std::max(worst_entry, report.block_entry_residual);
        pass = pass && report.pass;
        ++cases;
      }
    }
    std::cout << "block-diagonalization n<=6 (" << cases
              << " cases): " << (pass ? "pass" : "FAIL")
              << "  worst off-block " << format_double(worst_off)
              << ", block entry " << format_double(worst_entry) << '\n';
    all_pass = all_pass && pass;
  }

  // Analytic evolution against the dense spectral propagator.
  {
    double worst = 0.0;
    double worst_closed = 0.0;
    int closed_cases = 0;
    constexpr int kCases = 120;
    for (int c = 0; c < kCases; ++c) {
      const int n = n_dist(rng);
      const double xi = xi_dist(rng);
      const bool unit_tan = c % 2 == 0;
      const double tan = unit_tan ? 1.0 : tan_dist(rng);
      const double t = t_dist(rng);
      const SystemParams params(n, xi, tan);
      const ManifoldState initial = random_state(n, rng);

      const SystemParams dense_params(
          n, inject_sign_error ? -xi : xi, tan);
      const Eigen::MatrixXcd h =
          build_reduced_hamiltonian(dense_params).matrix();
      const Eigen::VectorXcd expected =
          evolve_dense(h, initial.amplitudes(), t);
      const ManifoldState evolved = evolve(params, initial, t);
      worst = std::max(worst,
                       (evolved.amplitudes() - expected).cwiseAbs().maxCoeff());
      if (unit_tan) {
        const ManifoldState closed = evolve_closed_form_tan1(params, initial, t);
        worst_closed = std::max(worst_closed, (closed.amplitudes() -
                                               evolved.amplitudes())
                                                  .cwiseAbs()
                                                  .maxCoeff());
        ++closed_cases;
      }
    }
    const bool pass = worst < 1e-10 && worst_closed < 1e-10;
    std::cout << "evolve vs dense propagator (" << kCases
              << " cases): " << (pass ? "pass" : "FAIL")
              << "  worst amplitude deviation " << format_double(worst)
              << ", closed-form route (" << closed_cases << " cases) "
              << format_double(worst_closed) << '\n';
    all_pass = all_pass && pass;
  }

  // Separability test against concurrence.
  {
    std::uniform_int_distribution<int> pair_n(2, 5);
    int disagreements = 0;
    double worst_gap = 0.0;
    constexpr int kStates = 200;
    for (int c = 0; c < kStates; ++c) {
      const int n = pair_n(rng);
      std::uniform_int_distribution<int> site(0, n - 1);
      int i = site(rng), j = site(rng);
      while (j == i) j = site(rng);
      const ManifoldState state = random_state(n, rng);
      const AtomPairDensityMatrix rho = reduce_to_atom_pair(state, i, j);
      const double conc = concurrence(rho);
      const double min_pt = partial_transpose_eigenvalues(rho).front();
      if ((conc > 1e-10) != (min_pt < -1e-10)) ++disagreements;
      // Reduced manifold states have concurrence exactly 2 |A_i| |A_j|.
      const double closed = 2.0 * std::abs(state.atom_amp(i)) *
                            std::abs(state.atom_amp(j));
      worst_gap = std::max(worst_gap, std::abs(conc - closed));
    }
    const bool pass = disagreements == 0 && worst_gap < 1e-12;
    std::cout << "ppt vs concurrence (" << kStates
              << " states): " << (pass ? "pass" : "FAIL") << "  "
              << disagreements << " sign disagreements, worst gap "
              << format_double(worst_gap) << '\n';
    all_pass = all_pass && pass;
  }

  std::cout << (all_pass ? "validate: all checks passed"
                         : "validate: FAILURES detected")
            << '\n';
  return all_pass ? 0 : 1;
}

int cmd_transfer(const std::string& scenario_name, double xi, int k, int l) {
  TransferScenario scenario;
  try {
    scenario = parse_transfer_scenario(scenario_name);
  } catch (const std::exception& e) {
    std::cerr << "transfer: " << e.what() << '\n';
    return 2;
  }
  if (k < 0 || l < 0) {
    std::cerr << "transfer: k and l must be >= 0\n";
    return 2;
  }

  try {
    switch (scenario) {
      case TransferScenario::n2_photon_transfer: {
        const SystemParams params(2, xi);
        const ManifoldState initial = ManifoldState::photonic_basis(2, 0);
        std::cout << "scenario n2-photon-transfer: n=2 xi=" << format_double(xi)
                  << '\n';
        const auto times =
            predicted_transfer_times(params, scenario, k + 1);
        for (int idx = 0; idx <= k; ++idx) {
          const double fid = transfer_fidelity(
              params, initial, {1, AmplitudeKind::photonic}, times[idx]);
          std::cout << "  k=" << idx << "  T=" << format_double(times[idx])
                    << "  |C_1(T)|^2=" << format_double(fid) << '\n';
        }
        break;
      }
      case TransferScenario::n3_photon_transfer: {
        const SystemParams params(3, xi);
        const ManifoldState initial = ManifoldState::photonic_basis(3, 0);
        std::cout << "scenario n3-photon-transfer: n=3 xi=" << format_double(xi)
                  << '\n';
        const auto times =
            predicted_transfer_times(params, scenario, k + 1);
        for (int idx = 0; idx <= k; ++idx) {
          const ManifoldState evolved = evolve(params, initial, times[idx]);
          const auto pops = site_populations(evolved);
          std::cout << "  k=" << idx << "  T=" << format_double(times[idx])
                    << "  |C_0|^2=" << format_double(pops[0].photonic)
                    << "  |C_1|^2=" << format_double(pops[1].photonic)
                    << "  |C_2|^2=" << format_double(pops[2].photonic) << '\n';
        }
        break;
      }
      case TransferScenario::n2_max_entanglement: {
        const SystemParams params(2, xi);
        const ManifoldState initial = ManifoldState::symmetric_photonic(2);
        std::cout << "scenario n2-max-entanglement: n=2 xi="
                  << format_double(xi) << '\n';
        const auto times =
            predicted_transfer_times(params, scenario, l + 1);
        for (int idx = 0; idx <= l; ++idx) {
          const ManifoldState evolved = evolve(params, initial, times[idx]);
          std::cout << "  l=" << idx << "  T=" << format_double(times[idx])
                    << "  concurrence="
                    << format_double(concurrence(
                           reduce_to_atom_pair(evolved, 0, 1)))
                    << '\n';
        }
        break;
      }
      case TransferScenario::n3_excitation_transfer: {
        if (k < 1) {
          std::cerr << "transfer: n3-excitation-transfer needs --k >= 1\n";
          return 2;
        }
        const double derived_xi = (2.0 * l + 1.0) / (3.0 * k);
        const double t = double(k) * kPi;
        const SystemParams params(3, derived_xi);
        const ManifoldState initial = ManifoldState::atomic_basis(3, 0);
        const ManifoldState evolved = evolve(params, initial, t);
        const auto pops = site_populations(evolved);
        std::cout << "scenario n3-excitation-transfer: n=3 k=" << k
                  << " l=" << l << "  xi=" << format_double(derived_xi)
                  << "  t=" << format_double(t) << '\n'
                  << "  |A_0|^2=" << format_double(pops[0].atomic)
                  << "  |A_1|^2=" << format_double(pops[1].atomic)
                  << "  |A_2|^2=" << format_double(pops[2].atomic) << '\n'
                  << "  |C_0|^2=" << format_double(pops[0].photonic)
                  << "  |C_1|^2=" << format_double(pops[1].photonic)
                  << "  |C_2|^2=" << format_double(pops[2].photonic) << '\n';
        break;
      }
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "transfer: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cavex::cli
