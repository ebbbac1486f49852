#include "cavex/oracle.hpp"

#include <cmath>
#include <numbers>

#include "cavex/dynamics.hpp"
#include "cavex/model.hpp"

namespace cavex {

DensePropagator::DensePropagator(const Eigen::MatrixXcd& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols())
    throw std::invalid_argument("DensePropagator: matrix must be square");
  const double dev =
      (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTolerance)
    throw std::invalid_argument(
        "DensePropagator: matrix is not Hermitian, deviation " +
        std::to_string(dev));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("DensePropagator: eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Eigen::MatrixXcd DensePropagator::at(double t) const {
  Eigen::VectorXcd phases(eigenvalues_.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k)
    phases(k) = std::polar(1.0, -eigenvalues_(k) * t);
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

Eigen::VectorXcd DensePropagator::apply(const Eigen::VectorXcd& state,
                                        double t) const {
  Eigen::VectorXcd modes = eigenvectors_.adjoint() * state;
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k)
    modes(k) *= std::polar(1.0, -eigenvalues_(k) * t);
  return eigenvectors_ * modes;
}

Eigen::VectorXcd evolve_dense(const Eigen::MatrixXcd& hamiltonian,
                              const Eigen::VectorXcd& initial, double t) {
  return DensePropagator(hamiltonian).apply(initial, t);
}

ReductionReport verify_reduction(const SystemParams& params) {
  if (params.n > 4)
    throw std::invalid_argument("verify_reduction: limited to n <= 4");
  const int n = params.n;
  const FockSpaceModel fock(n);
  const Eigen::MatrixXcd h_fock = build_fock_hamiltonian(params).matrix();
  const Eigen::MatrixXcd h_reduced = build_reduced_hamiltonian(params).matrix();

  // Columns of P embed the manifold basis in the interleaved order.
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(fock.dimension(), 2 * n);
  for (int i = 0; i < n; ++i) {
    p(fock.photonic_basis_index(i), 2 * i) = 1.0;
    p(fock.atomic_basis_index(i), 2 * i + 1) = 1.0;
  }

  const Eigen::MatrixXcd image = h_fock * p;
  const Eigen::MatrixXcd projected = p.adjoint() * image;

  ReductionReport report;
  report.manifold_invariance_residual =
      (image - p * projected).cwiseAbs().maxCoeff();

  const Eigen::MatrixXd mismatch = (projected - h_reduced).cwiseAbs();
  report.projection_residual =
      mismatch.maxCoeff(&report.worst_row, &report.worst_col);

  const Eigen::VectorXd n_hat = fock.total_excitation_diagonal();
  double worst_excitation = 0.0;
  for (Eigen::Index col = 0; col < image.cols(); ++col) {
    const Eigen::VectorXcd v = image.col(col);
    worst_excitation = std::max(
        worst_excitation,
        (n_hat.asDiagonal() * v - 2.0 * v).cwiseAbs().maxCoeff());
  }
  report.excitation_residual = worst_excitation;

  report.pass =
      report.manifold_invariance_residual <=
          ReductionReport::kInvarianceTolerance &&
      report.projection_residual <= ReductionReport::kProjectionTolerance &&
      report.excitation_residual <= ReductionReport::kExcitationTolerance;
  return report;
}

BlockDiagonalizationReport verify_block_diagonalization(
    const SystemParams& params) {
  const int n = params.n;
  const Eigen::MatrixXcd h = build_reduced_hamiltonian(params).matrix();

  // F (x) I_2 with F_{l i} = w^{l i} / sqrt(n).
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  const double scale = 1.0 / std::sqrt(double(n));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i) {
      const Complex w =
          scale * std::polar(1.0, 2.0 * std::numbers::pi *
                                      double((long(l) * i) % n) / double(n));
      f(2 * l, 2 * i) = w;
      f(2 * l + 1, 2 * i + 1) = w;
    }

  const Eigen::MatrixXcd conjugated = f * h * f.adjoint();
  const std::vector<BlockHamiltonian> blocks = block_hamiltonians(params);

  BlockDiagonalizationReport report;
  for (int lr = 0; lr < n; ++lr)
    for (int lc = 0; lc < n; ++lc) {
      const Eigen::Matrix2cd sub = conjugated.block<2, 2>(2 * lr, 2 * lc);
      if (lr == lc) {
        report.block_entry_residual =
            std::max(report.block_entry_residual,
                     (sub - blocks[lr].entries.cast<Complex>())
                         .cwiseAbs()
                         .maxCoeff());
      } else {
        report.off_block_residual =
            std::max(report.off_block_residual, sub.cwiseAbs().maxCoeff());
      }
    }

  report.pass =
      report.off_block_residual <= BlockDiagonalizationReport::kTolerance &&
      report.block_entry_residual <= BlockDiagonalizationReport::kTolerance;
  return report;
}

}  // namespace cavex
