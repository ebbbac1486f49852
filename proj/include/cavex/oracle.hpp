// Independent brute-force validators: spectral matrix-exponential propagation
// and structural checks of the manifold reduction and the block form.
#pragma once

#include "cavex/types.hpp"

namespace cavex {

/// Unitary propagator U(t) = exp(-i H t) of a dense Hermitian matrix,
/// obtained once by eigendecomposition and evaluated at any time.
class DensePropagator {
 public:
  static constexpr double kHermitianTolerance = 1e-10;

  explicit DensePropagator(const Eigen::MatrixXcd& hamiltonian);
  explicit DensePropagator(const HermitianMatrix& hamiltonian)
      : DensePropagator(hamiltonian.matrix()) {}

  Eigen::Index dimension() const { return eigenvalues_.size(); }
  Eigen::MatrixXcd at(double t) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& state, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// exp(-i H t) applied to a vector through the spectral decomposition.
/// Rejects matrices that deviate from Hermitian by more than 1e-10.
Eigen::VectorXcd evolve_dense(const Eigen::MatrixXcd& hamiltonian,
                              const Eigen::VectorXcd& initial, double t);

/// Result of checking that the Fock-space Hamiltonian restricted to the
/// two-excitation manifold reproduces the reduced one.
struct ReductionReport {
  double manifold_invariance_residual = 0.0;  // leakage out of the manifold
  double projection_residual = 0.0;           // |P^dag H P - H_reduced|_max
  double excitation_residual = 0.0;           // N_hat eigenvalue 2 on H image
  Eigen::Index worst_row = 0;                 // offending projected entry
  Eigen::Index worst_col = 0;
  bool pass = false;

  static constexpr double kInvarianceTolerance = 1e-12;
  static constexpr double kProjectionTolerance = 1e-14;
  static constexpr double kExcitationTolerance = 1e-12;
};

/// Embeds the 2n manifold basis vectors, applies the Fock Hamiltonian, and
/// verifies (a) the manifold is invariant, (b) the projected matrix equals
/// build_reduced_hamiltonian entrywise, (c) the image keeps total excitation
/// 2. Guarded to n <= 4.
ReductionReport verify_reduction(const SystemParams& params);

struct BlockDiagonalizationReport {
  double off_block_residual = 0.0;
  double block_entry_residual = 0.0;
  bool pass = false;

  static constexpr double kTolerance = 1e-13;
};

/// Conjugates the reduced Hamiltonian by the collective-mode unitary
/// (F (x) I_2) and checks it is block diagonal with exactly the blocks of
/// block_hamiltonians().
BlockDiagonalizationReport verify_block_diagonalization(
    const SystemParams& params);

}  // namespace cavex
