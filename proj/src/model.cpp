#include "cavex/model.hpp"

#include <string>

namespace cavex {

FockSpaceModel::FockSpaceModel(int n) : sites(n) {
  if (n < 1) throw std::invalid_argument("FockSpaceModel: n must be >= 1");
  if (n > kMaxSites)
    throw std::invalid_argument("FockSpaceModel: n = " + std::to_string(n) +
                                " exceeds the dense oracle limit of " +
                                std::to_string(kMaxSites));
}

Eigen::Index FockSpaceModel::dimension() const {
  Eigen::Index d = 1;
  for (int i = 0; i < sites; ++i) d *= kStatesPerSite;
  return d;
}

Eigen::Index FockSpaceModel::site_stride(int site) const {
  Eigen::Index s = 1;
  for (int i = site + 1; i < sites; ++i) s *= kStatesPerSite;
  return s;
}

int FockSpaceModel::digit(Eigen::Index state, int site) const {
  return int((state / site_stride(site)) % kStatesPerSite);
}

Eigen::Index FockSpaceModel::photonic_basis_index(int site) const {
  return 2 * site_stride(site);  // digit 2 = |g,2>
}

Eigen::Index FockSpaceModel::atomic_basis_index(int site) const {
  return 3 * site_stride(site);  // digit 3 = |e,0>
}

Eigen::VectorXd FockSpaceModel::total_excitation_diagonal() const {
  // Per-site excitation: photons + (atom excited ? 1 : -1) + 1.
  const double per_digit[kStatesPerSite] = {0, 1, 2, 2, 3, 4};
  const Eigen::Index dim = dimension();
  Eigen::VectorXd diag(dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    double total = 0.0;
    for (int k = 0; k < sites; ++k) total += per_digit[digit(s, k)];
    diag(s) = total;
  }
  return diag;
}

HermitianMatrix build_reduced_hamiltonian(const SystemParams& params) {
  const int n = params.n;
  const double tan = params.tan_theta0;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    h(2 * i, 2 * i) = 1.0;
    h(2 * i, 2 * i + 1) = tan;
    h(2 * i + 1, 2 * i) = tan;
    h(2 * i + 1, 2 * i + 1) = tan * tan;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      h(2 * i, 2 * j) = 2.0 * params.xi;
    }
  }
  return HermitianMatrix(std::move(h));
}

HermitianMatrix build_fock_hamiltonian(const SystemParams& params) {
  const FockSpaceModel fock(params.n);
  const int n = params.n;
  const double tan = params.tan_theta0;
  const Eigen::Index dim = fock.dimension();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  std::vector<Eigen::Index> stride(n);
  for (int k = 0; k < n; ++k) stride[k] = fock.photonic_basis_index(k) / 2;

  for (Eigen::Index s = 0; s < dim; ++s) {
    for (int k = 0; k < n; ++k) {
      const int d = fock.digit(s, k);
      if (d == 2) {  // |g,2> at site k
        h(s, s) += 1.0;
        h(s + stride[k], s) += tan;  // |e,0><g,2|
      } else if (d == 3) {           // |e,0> at site k
        h(s, s) += tan * tan;
        h(s - stride[k], s) += tan;  // |g,2><e,0|
      }
    }
    // Two-photon exchange: a_i^2dag a_j^2 moves a photon pair j -> i.
    // Within the cutoff only (0 photons at i, 2 at j) connects, with
    // amplitude sqrt(2)*sqrt(2) = 2.
    for (int i = 0; i < n; ++i) {
      if (fock.digit(s, i) % 3 != 0) continue;  // needs 0 photons at i
      for (int j = 0; j < n; ++j) {
        if (j == i || fock.digit(s, j) % 3 != 2) continue;  // 2 photons at j
        const Eigen::Index target = s + 2 * stride[i] - 2 * stride[j];
        h(target, s) += 2.0 * params.xi;
      }
    }
  }
  return HermitianMatrix(std::move(h));
}

Eigen::VectorXcd embed_manifold_state(const ManifoldState& state,
                                      const SystemParams& params) {
  if (state.sites() != params.n)
    throw std::invalid_argument("embed_manifold_state: site count mismatch");
  const FockSpaceModel fock(params.n);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(fock.dimension());
  for (int i = 0; i < params.n; ++i) {
    v(fock.photonic_basis_index(i)) = state.photon_amp(i);
    v(fock.atomic_basis_index(i)) = state.atom_amp(i);
  }
  return v;
}

}  // namespace cavex
