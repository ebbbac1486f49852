#include "cavex/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace cavex {

namespace {

// sigma_y (x) sigma_y, the two-qubit spin flip.
Eigen::Matrix4d spin_flip() {
  Eigen::Matrix4d y = Eigen::Matrix4d::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

AtomPairDensityMatrix::AtomPairDensityMatrix(Eigen::Matrix4cd rho)
    : rho_(std::move(rho)) {
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance)
    throw std::invalid_argument(
        "AtomPairDensityMatrix: not Hermitian, deviation " +
        std::to_string(herm));
  const double trace_dev = std::abs(rho_.trace() - Complex(1.0));
  if (trace_dev > kTraceTolerance)
    throw std::invalid_argument(
        "AtomPairDensityMatrix: trace deviates from 1 by " +
        std::to_string(trace_dev));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho_);
  if (solver.eigenvalues().minCoeff() < -kPositivityTolerance)
    throw std::invalid_argument(
        "AtomPairDensityMatrix: negative eigenvalue " +
        std::to_string(solver.eigenvalues().minCoeff()));
}

AtomPairDensityMatrix reduce_to_atom_pair(const ManifoldState& state, int i,
                                          int j) {
  const int n = state.sites();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("reduce_to_atom_pair: site index out of range");
  if (i == j)
    throw std::invalid_argument("reduce_to_atom_pair: sites must differ");

  double ground = 0.0;
  for (int k = 0; k < n; ++k) {
    ground += std::norm(state.photon_amp(k));
    if (k != i && k != j) ground += std::norm(state.atom_amp(k));
  }
  const Complex ai = state.atom_amp(i);
  const Complex aj = state.atom_amp(j);

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = ground;               // |g,g>
  rho(1, 1) = std::norm(aj);        // |g,e>
  rho(2, 2) = std::norm(ai);        // |e,g>
  rho(2, 1) = ai * std::conj(aj);   // <e,g| rho |g,e>
  rho(1, 2) = aj * std::conj(ai);
  return AtomPairDensityMatrix(std::move(rho));
}

std::array<double, 4> partial_transpose_eigenvalues(
    const AtomPairDensityMatrix& rho) {
  const Eigen::Matrix4cd& r = rho.matrix();
  Eigen::Matrix4cd pt;
  // Transpose the first atom's indices: index = 2*alpha + beta.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp)
          pt(2 * a + b, 2 * ap + bp) = r(2 * ap + b, 2 * a + bp);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(pt);
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = solver.eigenvalues()(k);
  return out;
}

double concurrence(const AtomPairDensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho.matrix());

  // Spectral square root with near-zero eigenvalues clamped to exactly zero,
  // so that exact rank deficiency survives the factorisation.
  const double cutoff =
      64.0 * std::numeric_limits<double>::epsilon() *
      std::max(1.0, solver.eigenvalues().maxCoeff());
  Eigen::Matrix4cd psi = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda > cutoff)
      psi.col(k) = std::sqrt(lambda) * solver.eigenvectors().col(k);
  }

  // The Wootters mu's are the singular values of Psi^T Y Psi: rho rho_tilde
  // = (Psi Psi^dag) Y (Psi Psi^dag)^* Y is similar to (tau)^bar tau with
  // tau = Psi^T Y Psi, and tau is complex symmetric.
  const Eigen::Matrix4cd tau =
      psi.transpose() * spin_flip().cast<Complex>() * psi;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
  const Eigen::Vector4d mu = svd.singularValues();  // sorted decreasing

  const double c = mu(0) - mu(1) - mu(2) - mu(3);
  return std::clamp(c, 0.0, 1.0);
}

double analytic_concurrence_n2(double xi, double t) {
  const double s = std::sin(t * std::sqrt(1.0 + xi * xi));
  return s * s / (1.0 + xi * xi);
}

}  // namespace cavex
