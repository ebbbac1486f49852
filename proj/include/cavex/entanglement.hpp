// Two-atom reduced density matrices, the partial-transpose separability
// test, and Wootters concurrence.
#pragma once

#include <array>

#include "cavex/types.hpp"

namespace cavex {

/// 4x4 reduced state of two atoms in the fixed basis order
/// |g,g>, |g,e>, |e,g>, |e,e| (first listed atom is the slower index).
/// States reduced from the two-excitation manifold never populate |e,e>.
class AtomPairDensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-13;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kPositivityTolerance = 1e-12;

  /// Validates Hermiticity, unit trace, and positivity (within tolerances).
  explicit AtomPairDensityMatrix(Eigen::Matrix4cd rho);

  const Eigen::Matrix4cd& matrix() const { return rho_; }

 private:
  Eigen::Matrix4cd rho_;
};

/// Traces out all photonic modes and every atom other than i and j.
/// Photonic orthogonality leaves a single coherence A_i conj(A_j) in the
/// one-excitation block; the |e,e> row and column vanish identically.
AtomPairDensityMatrix reduce_to_atom_pair(const ManifoldState& state, int i,
                                          int j);

/// Eigenvalues (ascending) of the transpose over the first listed atom.
/// A negative one certifies entanglement for two qubits.
std::array<double, 4> partial_transpose_eigenvalues(
    const AtomPairDensityMatrix& rho);

/// Wootters two-qubit concurrence in [0, 1]: with mu the decreasing square
/// roots of the eigenvalues of rho * rho_tilde (rho_tilde the spin-flipped
/// conjugate), C = max(0, mu1 - mu2 - mu3 - mu4). Computed via singular
/// values of the symmetric matrix Psi^T (sy (x) sy) Psi, Psi a clamped
/// spectral square root of rho, which keeps absolute accuracy near zero.
double concurrence(const AtomPairDensityMatrix& rho);

/// Closed-form concurrence sin^2(t sqrt(1+xi^2)) / (1+xi^2) for two cavities
/// prepared in the symmetric photonic superposition.
double analytic_concurrence_n2(double xi, double t);

}  // namespace cavex
