// Hamiltonian construction: the 2n-dimensional operator acting on the
// two-excitation manifold, and the full truncated Fock-space operator used
// as an independent reference.
#pragma once

#include "cavex/types.hpp"

namespace cavex {

/// Truncated Fock space of n cavities, six states per site:
/// |g,0>, |g,1>, |g,2>, |e,0>, |e,1>, |e,2>, encoded as digit
/// 3*atom + photons in a base-6 index (site 0 most significant).
/// The cutoff of two photons per cavity is sufficient here: the manifold's
/// image under the Hamiltonian never populates higher photon numbers.
struct FockSpaceModel {
  explicit FockSpaceModel(int n);

  static constexpr int kStatesPerSite = 6;
  static constexpr int kMaxSites = 5;  // 6^5 is the largest dense oracle size

  int sites;

  Eigen::Index dimension() const;

  /// Base-6 digit of a composite basis index at the given site.
  int digit(Eigen::Index state, int site) const;

  /// Index of the product state with two photons in `site`, all atoms ground.
  Eigen::Index photonic_basis_index(int site) const;
  /// Index of the product state with atom `site` excited, no photons.
  Eigen::Index atomic_basis_index(int site) const;

  /// Diagonal of the conserved total-excitation operator
  /// sum_i (a_i^dag a_i + sigma_ee^(i) - sigma_gg^(i) + 1).
  Eigen::VectorXd total_excitation_diagonal() const;

 private:
  Eigen::Index site_stride(int site) const;
};

/// Hamiltonian restricted to the two-excitation manifold, in the interleaved
/// [C_0, A_0, ...] ordering:
///   I_n (x) [[1, tan], [tan, tan^2]]  +  2 xi (J_n - I_n) (x) [[1,0],[0,0]]
/// with J_n the all-ones matrix. Real symmetric, dimension 2n.
HermitianMatrix build_reduced_hamiltonian(const SystemParams& params);

/// Full Hamiltonian on the truncated Fock space (dimension 6^n): per site
///   |g,2><g,2| + tan (|e,0><g,2| + h.c.) + tan^2 |e,0><e,0|
/// plus the two-photon exchange xi sum_{i<j} (a_i^2dag a_j^2 + h.c.) with
/// bosonic matrix elements (a^2 |2> = sqrt(2) |0>, so cavity pairs couple
/// with amplitude 2 xi). Guarded to n <= 5.
HermitianMatrix build_fock_hamiltonian(const SystemParams& params);

/// Isometric embedding of a manifold state into the Fock space: C_i lands on
/// the product state with |g,2> at site i, A_i on the one with |e,0>.
Eigen::VectorXcd embed_manifold_state(const ManifoldState& state,
                                      const SystemParams& params);

}  // namespace cavex
