#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cavex/model.hpp"
#include "test_support.hpp"

using namespace cavex;

namespace {

// Independent construction of the reduced Hamiltonian straight from its
// tensor-product definition, with an explicit Kronecker loop.
Eigen::MatrixXd loop_built_reduced(int n, double xi, double tan) {
  Eigen::Matrix2d site;
  site << 1.0, tan, tan, tan * tan;
  Eigen::Matrix2d hop;
  hop << 1.0, 0.0, 0.0, 0.0;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double coupling = (i == j) ? 0.0 : 2.0 * xi;  // 2 xi (J - I)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          if (i == j) h(2 * i + p, 2 * j + q) += site(p, q);
          h(2 * i + p, 2 * j + q) += coupling * hop(p, q);
        }
    }
  return h;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

TEST_CASE("system params validation") {
  CHECK_THROWS_AS(SystemParams(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, 1.0, -0.3), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, std::nan("")), std::invalid_argument);

  const SystemParams from_r =
      SystemParams::from_coupling_ratio(2, 0.5, 1.0 / std::sqrt(2.0));
  CHECK(from_r.tan_theta0 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("reduced hamiltonian n=2 matches the direct-product form") {
  const Eigen::MatrixXcd h =
      build_reduced_hamiltonian(SystemParams(2, 0.5)).matrix();
  Eigen::Matrix4d expected;
  expected << 1, 1, 1, 0,
              1, 1, 0, 0,
              1, 0, 1, 1,
              0, 0, 1, 1;
  CHECK((h - expected.cast<Complex>()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("reduced hamiltonian n=1 has no hopping term") {
  const double tan = 0.7;
  const Eigen::MatrixXcd h =
      build_reduced_hamiltonian(SystemParams(1, 123.0, tan)).matrix();
  CHECK(h(0, 0) == Complex(1.0));
  CHECK(h(0, 1) == Complex(tan));
  CHECK(h(1, 0) == Complex(tan));
  CHECK(h(1, 1) == Complex(tan * tan));
}

TEST_CASE("reduced hamiltonian n=3 agrees with an independent loop build") {
  const SystemParams params(3, 0.2);
  const Eigen::MatrixXcd h = build_reduced_hamiltonian(params).matrix();
  const Eigen::MatrixXd expected = loop_built_reduced(3, 0.2, 1.0);
  CHECK((h - expected.cast<Complex>()).cwiseAbs().maxCoeff() < 1e-15);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(h(2 * i, 2 * j) == Complex(0.4));
}

TEST_CASE("reduced hamiltonian is real symmetric for any parameters") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xi(-3.0, 3.0);
  std::uniform_real_distribution<double> tan(0.2, 3.0);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 1 + int(rng() % 6);
    const Eigen::MatrixXcd h =
        build_reduced_hamiltonian(SystemParams(n, xi(rng), tan(rng))).matrix();
    CHECK(h.imag().cwiseAbs().maxCoeff() == 0.0);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("reduced hamiltonian is invariant under cavity relabelling") {
  std::mt19937_64 rng(12);
  const int n = 5;
  const Eigen::MatrixXcd h =
      build_reduced_hamiltonian(SystemParams(n, 0.8, 1.3)).matrix();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int rep = 0; rep < 10; ++rep) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      p(2 * perm[i], 2 * i) = 1.0;
      p(2 * perm[i] + 1, 2 * i + 1) = 1.0;
    }
    CHECK((p * h * p.transpose() - h).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("fock hamiltonian couples photon pairs with amplitude 2 xi") {
  const SystemParams params(2, 0.5);
  const FockSpaceModel fock(2);
  const Eigen::MatrixXcd h = build_fock_hamiltonian(params).matrix();
  CHECK(h(fock.photonic_basis_index(1), fock.photonic_basis_index(0)) ==
        Complex(1.0));
}

TEST_CASE("fock hamiltonian at xi=0 is a sum of identical site operators") {
  const double tan = 1.4;
  const Eigen::MatrixXcd h =
      build_fock_hamiltonian(SystemParams(2, 0.0, tan)).matrix();
  Eigen::MatrixXcd site = Eigen::MatrixXcd::Zero(6, 6);
  site(2, 2) = 1.0;
  site(3, 3) = tan * tan;
  site(2, 3) = tan;
  site(3, 2) = tan;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(6, 6);
  const Eigen::MatrixXcd expected = kron(site, id) + kron(id, site);
  CHECK((h - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fock hamiltonian projects onto the reduced one") {
  const SystemParams params(2, 0.7);
  const FockSpaceModel fock(2);
  const Eigen::MatrixXcd h_fock = build_fock_hamiltonian(params).matrix();
  const Eigen::MatrixXcd h_red = build_reduced_hamiltonian(params).matrix();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(fock.dimension(), 4);
  for (int i = 0; i < 2; ++i) {
    p(fock.photonic_basis_index(i), 2 * i) = 1.0;
    p(fock.atomic_basis_index(i), 2 * i + 1) = 1.0;
  }
  CHECK((p.adjoint() * h_fock * p - h_red).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("fock hamiltonian refuses oversized systems") {
  CHECK_THROWS_AS(build_fock_hamiltonian(SystemParams(6, 0.1)),
                  std::invalid_argument);
}

TEST_CASE("embedding places basis amplitudes on the right product states") {
  const SystemParams params(2, 0.3);
  const FockSpaceModel fock(2);

  const Eigen::VectorXcd c0 =
      embed_manifold_state(ManifoldState::photonic_basis(2, 0), params);
  CHECK(c0(fock.photonic_basis_index(0)) == Complex(1.0));
  CHECK(c0.cwiseAbs().sum() == 1.0);
  CHECK(fock.photonic_basis_index(0) == 12);  // |g,2> (x) |g,0>

  const Eigen::VectorXcd a1 =
      embed_manifold_state(ManifoldState::atomic_basis(2, 1), params);
  CHECK(a1(fock.atomic_basis_index(1)) == Complex(1.0));
  CHECK(fock.atomic_basis_index(1) == 3);  // |g,0> (x) |e,0>
}

TEST_CASE("embedding is an isometry") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 4; ++n) {
    const SystemParams params(n, 0.4);
    const ManifoldState state = testing::random_state(n, rng);
    CHECK(std::abs(embed_manifold_state(state, params).norm() - 1.0) < 1e-14);
  }
}

TEST_CASE("two-excitation sector is invariant under the fock hamiltonian") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> xi(-2.0, 2.0);
  for (int n = 2; n <= 4; ++n) {
    const SystemParams params(n, xi(rng), 1.2);
    const FockSpaceModel fock(n);
    const Eigen::MatrixXcd h = build_fock_hamiltonian(params).matrix();
    const Eigen::VectorXd n_hat = fock.total_excitation_diagonal();

    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(fock.dimension(), 2 * n);
    for (int i = 0; i < n; ++i) {
      p(fock.photonic_basis_index(i), 2 * i) = 1.0;
      p(fock.atomic_basis_index(i), 2 * i + 1) = 1.0;
    }
    for (int col = 0; col < 2 * n; ++col) {
      const Eigen::VectorXcd image = h * p.col(col);
      const Eigen::VectorXcd leaked = image - p * (p.adjoint() * image);
      CHECK(leaked.norm() < 1e-12);
      // The image keeps total excitation 2.
      CHECK((n_hat.asDiagonal() * image - 2.0 * image).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}

TEST_CASE("manifold basis states carry total excitation 2") {
  const FockSpaceModel fock(3);
  const Eigen::VectorXd n_hat = fock.total_excitation_diagonal();
  for (int i = 0; i < 3; ++i) {
    CHECK(n_hat(fock.photonic_basis_index(i)) == 2.0);
    CHECK(n_hat(fock.atomic_basis_index(i)) == 2.0);
  }
}
