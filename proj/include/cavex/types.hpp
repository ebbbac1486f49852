// Core value types shared by every module: system parameters, amplitude
// vectors on the two-excitation manifold, and a validated Hermitian carrier.
#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace cavex {

using Complex = std::complex<double>;

/// Physical parameters of an array of n identical cavities coupled pairwise
/// (complete graph) by two-photon exchange of dimensionless strength xi.
/// tan_theta0 is the effective atom-photon coupling; it equals 1/(sqrt(2) r)
/// when derived from the ratio r of the two atomic coupling constants.
struct SystemParams {
  SystemParams(int n, double xi, double tan_theta0 = 1.0)
      : n(n), xi(xi), tan_theta0(tan_theta0) {
    if (n < 1) throw std::invalid_argument("SystemParams: n must be >= 1");
    if (!(tan_theta0 > 0.0))
      throw std::invalid_argument("SystemParams: tan_theta0 must be > 0");
    if (!std::isfinite(xi))
      throw std::invalid_argument("SystemParams: xi must be finite");
  }

  static SystemParams from_coupling_ratio(int n, double xi, double r) {
    if (!(r > 0.0))
      throw std::invalid_argument("SystemParams: coupling ratio must be > 0");
    return SystemParams(n, xi, 1.0 / (std::sqrt(2.0) * r));
  }

  int n;
  double xi;
  double tan_theta0;
};

/// Amplitudes of a state in the two-excitation sector, stored interleaved as
/// [C_0, A_0, C_1, A_1, ...]: C_i multiplies the basis state with two photons
/// in cavity i (all atoms ground), A_i the one with atom i excited (no
/// photons). This ordering is fixed project-wide, including CSV columns.
class ManifoldState {
 public:
  explicit ManifoldState(Eigen::VectorXcd amplitudes)
      : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2 || amps_.size() % 2 != 0)
      throw std::invalid_argument("ManifoldState: amplitude count must be 2n");
  }

  /// |c_site>: two photons in one cavity.
  static ManifoldState photonic_basis(int n, int site) {
    return basis(n, site, 0);
  }
  /// |a_site>: one excited atom.
  static ManifoldState atomic_basis(int n, int site) {
    return basis(n, site, 1);
  }
  /// Equal-weight superposition of all photonic basis states.
  static ManifoldState symmetric_photonic(int n) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * n);
    for (int i = 0; i < n; ++i) v(2 * i) = 1.0 / std::sqrt(double(n));
    return ManifoldState(std::move(v));
  }

  int sites() const { return int(amps_.size() / 2); }
  Complex photon_amp(int i) const { return amps_(2 * i); }
  Complex atom_amp(int i) const { return amps_(2 * i + 1); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  static ManifoldState basis(int n, int site, int offset) {
    if (n < 1 || site < 0 || site >= n)
      throw std::invalid_argument("ManifoldState: site out of range");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * n);
    v(2 * site + offset) = 1.0;
    return ManifoldState(std::move(v));
  }

  Eigen::VectorXcd amps_;
};

/// Amplitudes in the collective (Fourier) basis, same interleaved layout:
/// [C'_0, A'_0, C'_1, A'_1, ...] with mode label l in [0, n-1].
class FourierAmplitudes {
 public:
  explicit FourierAmplitudes(Eigen::VectorXcd amplitudes)
      : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2 || amps_.size() % 2 != 0)
      throw std::invalid_argument(
          "FourierAmplitudes: amplitude count must be 2n");
  }

  int modes() const { return int(amps_.size() / 2); }
  Complex photon_mode(int l) const { return amps_(2 * l); }
  Complex atom_mode(int l) const { return amps_(2 * l + 1); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  Eigen::VectorXcd amps_;
};

/// Dense complex square matrix checked to be Hermitian at construction.
class HermitianMatrix {
 public:
  static constexpr double kDefaultTolerance = 1e-14;

  explicit HermitianMatrix(Eigen::MatrixXcd m,
                           double tolerance = kDefaultTolerance)
      : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
      throw std::invalid_argument("HermitianMatrix: matrix must be square");
    const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tolerance)
      throw std::invalid_argument("HermitianMatrix: not Hermitian, deviation " +
                                  std::to_string(dev));
  }

  Eigen::Index dimension() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

}  // namespace cavex
