// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cavex/analysis.hpp"
#include "cavex/dynamics.hpp"
#include "cavex/entanglement.hpp"
#include "cavex/model.hpp"
#include "cavex/oracle.hpp"
#include "test_support.hpp"

using namespace cavex;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// 1. Concurrence trajectories for xi in {0.1, 0.5, 0.9, 2}: pointwise match
//    with the closed form at 1e-10 over [0, 10], peak values and peak times.
Outcome figure1_concurrence() {
  const std::vector<double> xis = {0.1, 0.5, 0.9, 2.0};
  const std::vector<double> frozen_peaks = {0.990099, 0.8, 0.552486, 0.2};
  double worst_pointwise = 0.0, worst_peak = 0.0, worst_time = 0.0;

  for (std::size_t c = 0; c < xis.size(); ++c) {
    const double xi = xis[c];
    const SystemParams params(2, xi);
    const ManifoldState initial = ManifoldState::symmetric_photonic(2);
    for (int k = 0; k <= 1000; ++k) {
      const double t = 0.01 * k;
      const double numeric = concurrence(
          reduce_to_atom_pair(evolve(params, initial, t), 0, 1));
      worst_pointwise = std::max(
          worst_pointwise, std::abs(numeric - analytic_concurrence_n2(xi, t)));
    }
    const auto events =
        find_max_concurrence_times(params, initial, {0, 1}, {0.0, 10.0}, 3);
    if (events.empty()) return {false, "no concurrence maxima found"};
    const double nu = std::sqrt(1.0 + xi * xi);
    for (std::size_t e = 0; e < events.size(); ++e) {
      worst_peak = std::max(worst_peak,
                            std::abs(events[e].fidelity - frozen_peaks[c]));
      const double predicted = (2.0 * e + 1.0) * kPi / (2.0 * nu);
      worst_time = std::max(worst_time, std::abs(events[e].time - predicted));
    }
  }
  const bool pass =
      worst_pointwise < 1e-10 && worst_peak < 1e-6 && worst_time < 1e-6;
  return {pass, "pointwise " + fmt(worst_pointwise) + ", peak value " +
                    fmt(worst_peak) + ", peak time " + fmt(worst_time)};
}

// 2. The closed-form photonic probability against numerical evolution for a
//    photon pair loaded in one cavity, 1000 samples over [0, 10].
Outcome closed_form_photon_probability() {
  double worst = 0.0;
  for (int n : {2, 3, 5, 8}) {
    for (double xi : {0.2, 1.0, 5.0}) {
      const SystemParams params(n, xi);
      const ManifoldState initial = ManifoldState::photonic_basis(n, 0);
      for (int k = 0; k < 1000; ++k) {
        const double t = 10.0 * k / 999.0;
        const double numeric =
            photonic_probability(evolve(params, initial, t));
        worst = std::max(
            worst, std::abs(numeric - analytic_photonic_probability(params, t)));
      }
    }
  }
  return {worst < 1e-10, "worst deviation " + fmt(worst)};
}

// 3. Randomized equivalence of the analytic evolution, the closed-form
//    route, and the dense spectral propagator.
Outcome oracle_equivalence() {
  std::mt19937_64 rng(90210);
  std::uniform_real_distribution<double> xi_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> tan_dist(0.5, 2.0);
  std::uniform_real_distribution<double> t_dist(0.0, 10.0);
  std::uniform_int_distribution<int> n_dist(1, 6);
  double worst = 0.0;
  constexpr int kCases = 120;
  for (int c = 0; c < kCases; ++c) {
    const int n = n_dist(rng);
    const bool unit_tan = c % 2 == 0;
    const SystemParams params(n, xi_dist(rng),
                              unit_tan ? 1.0 : tan_dist(rng));
    const ManifoldState initial = testing::random_state(n, rng);
    const double t = t_dist(rng);

    const ManifoldState evolved = evolve(params, initial, t);
    const Eigen::VectorXcd dense = evolve_dense(
        build_reduced_hamiltonian(params).matrix(), initial.amplitudes(), t);
    worst = std::max(worst,
                     (evolved.amplitudes() - dense).cwiseAbs().maxCoeff());
    if (unit_tan) {
      const ManifoldState closed = evolve_closed_form_tan1(params, initial, t);
      worst = std::max(worst, (closed.amplitudes() - evolved.amplitudes())
                                  .cwiseAbs()
                                  .maxCoeff());
      worst = std::max(worst,
                       (closed.amplitudes() - dense).cwiseAbs().maxCoeff());
    }
  }
  return {worst < 1e-10,
          std::to_string(kCases) + " cases, worst deviation " + fmt(worst)};
}

// 4. Fock-space reduction: projection equals the reduced matrix at 1e-14,
//    manifold invariance at 1e-12.
Outcome reduction_verification() {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> xi_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> tan_dist(0.5, 2.0);
  double worst_projection = 0.0, worst_invariance = 0.0;
  for (int n : {2, 3, 4}) {
    for (int rep = 0; rep < 3; ++rep) {
      const ReductionReport report = verify_reduction(
          SystemParams(n, xi_dist(rng), tan_dist(rng)));
      worst_projection = std::max(worst_projection,
                                  report.projection_residual);
      worst_invariance =
          std::max(worst_invariance, report.manifold_invariance_residual);
      if (!report.pass)
        return {false, "reduction report failed at n=" + std::to_string(n)};
    }
  }
  const bool pass = worst_projection <= 1e-14 && worst_invariance < 1e-12;
  return {pass, "projection " + fmt(worst_projection) + ", invariance " +
                    fmt(worst_invariance)};
}

// 5. Two-cavity pair transfer at xi = 50: fidelity at (2k+1) pi / (4 xi)
//    stays at least 0.99 for k = 0..4.
Outcome two_cavity_transfer() {
  const SystemParams params(2, 50.0);
  const ManifoldState initial = ManifoldState::photonic_basis(2, 0);
  double worst = 1.0;
  for (int k = 0; k <= 4; ++k) {
    const double t = (2.0 * k + 1.0) * kPi / 200.0;
    worst = std::min(worst, transfer_fidelity(
                                params, initial, {1, AmplitudeKind::photonic},
                                t));
  }
  return {worst >= 0.99, "minimum |C_1(T)|^2 = " + fmt(worst)};
}

// 6. Three-cavity pair transfer at xi = 20: populations 4/9, 4/9, 1/9
//    within 0.01 at (2k+1) pi / 120 for k = 0..2.
Outcome three_cavity_transfer() {
  const SystemParams params(3, 20.0);
  const ManifoldState initial = ManifoldState::photonic_basis(3, 0);
  double worst = 0.0;
  for (int k = 0; k <= 2; ++k) {
    const double t = (2.0 * k + 1.0) * kPi / 120.0;
    const auto pops = site_populations(evolve(params, initial, t));
    worst = std::max(worst, std::abs(pops[0].photonic - 1.0 / 9.0));
    worst = std::max(worst, std::abs(pops[1].photonic - 4.0 / 9.0));
    worst = std::max(worst, std::abs(pops[2].photonic - 4.0 / 9.0));
  }
  return {worst < 0.01, "worst population deviation " + fmt(worst)};
}

// 7. Three-cavity excitation transfer at xi = 1/120 (k = 40, l = 0),
//    t = 40 pi: atomic populations 4/9 within 0.02, photonic leakage < 0.01.
Outcome excitation_transfer() {
  const SystemParams params(3, 1.0 / 120.0);
  const ManifoldState initial = ManifoldState::atomic_basis(3, 0);
  const auto pops = site_populations(evolve(params, initial, 40.0 * kPi));
  double worst_atomic =
      std::max(std::abs(pops[1].atomic - 4.0 / 9.0),
               std::abs(pops[2].atomic - 4.0 / 9.0));
  double worst_photonic = 0.0;
  for (const auto& p : pops)
    worst_photonic = std::max(worst_photonic, p.photonic);
  const bool pass = worst_atomic < 0.02 && worst_photonic < 0.01;
  return {pass, "atomic deviation " + fmt(worst_atomic) +
                    ", photonic leakage " + fmt(worst_photonic)};
}

// 8. With xi = 100 and no initial atomic amplitude, the pair concurrence
//    never exceeds 1.1e-4 on [0, 20].
Outcome large_hopping_freezeout() {
  std::mt19937_64 rng(777);
  std::vector<std::pair<SystemParams, ManifoldState>> cases;
  cases.emplace_back(SystemParams(2, 100.0),
                     ManifoldState::symmetric_photonic(2));
  cases.emplace_back(SystemParams(2, 100.0),
                     ManifoldState::photonic_basis(2, 0));
  cases.emplace_back(SystemParams(2, 100.0),
                     testing::random_photonic_state(2, rng));
  cases.emplace_back(SystemParams(3, 100.0),
                     ManifoldState::symmetric_photonic(3));

  double worst = 0.0;
  for (const auto& [params, initial] : cases) {
    for (int k = 0; k <= 2000; ++k) {
      const double t = 0.01 * k;
      worst = std::max(worst,
                       concurrence(reduce_to_atom_pair(
                           evolve(params, initial, t), 0, 1)));
    }
  }
  return {worst < 1.1e-4, "maximum concurrence " + fmt(worst)};
}

// 9. Separability test agreement over random manifold states, plus exact
//    concurrence zeros at t = k pi / sqrt(1 + xi^2).
Outcome ppt_concurrence_consistency() {
  std::mt19937_64 rng(13579);
  std::uniform_int_distribution<int> n_dist(2, 5);
  int disagreements = 0;
  constexpr int kStates = 1000;
  for (int c = 0; c < kStates; ++c) {
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> site(0, n - 1);
    int i = site(rng), j = site(rng);
    while (j == i) j = site(rng);
    const AtomPairDensityMatrix rho =
        reduce_to_atom_pair(testing::random_state(n, rng), i, j);
    const bool by_concurrence = concurrence(rho) > 1e-10;
    const bool by_transpose =
        partial_transpose_eigenvalues(rho).front() < -1e-10;
    if (by_concurrence != by_transpose) ++disagreements;
  }

  double worst_zero = 0.0;
  for (double xi : {0.1, 0.5, 0.9, 2.0}) {
    const SystemParams params(2, xi);
    const ManifoldState initial = ManifoldState::symmetric_photonic(2);
    const double nu = std::sqrt(1.0 + xi * xi);
    for (int k = 1; k <= 5; ++k) {
      const double value = concurrence(reduce_to_atom_pair(
          evolve(params, initial, k * kPi / nu), 0, 1));
      worst_zero = std::max(worst_zero, value);
    }
  }
  const bool pass = disagreements == 0 && worst_zero < 1e-9;
  return {pass, std::to_string(disagreements) + " disagreements of " +
                    std::to_string(kStates) + ", worst separable concurrence " +
                    fmt(worst_zero)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria = {
          {"figure-1 concurrence reproduction", figure1_concurrence},
          {"closed-form photon probability", closed_form_photon_probability},
          {"oracle equivalence of evolution routes", oracle_equivalence},
          {"fock-space reduction verification", reduction_verification},
          {"two-cavity photon-pair transfer", two_cavity_transfer},
          {"three-cavity photon-pair transfer", three_cavity_transfer},
          {"three-cavity excitation transfer", excitation_transfer},
          {"large-hopping entanglement freeze-out", large_hopping_freezeout},
          {"ppt/concurrence consistency", ppt_concurrence_consistency},
      };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Outcome outcome = criteria[k].second();
    if (!outcome.pass) ++failures;
    std::printf("[%s] %zu. %s (%s)\n", outcome.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), outcome.detail.c_str());
  }
  if (failures)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
