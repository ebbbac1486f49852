// Time evolution on the manifold: collective-mode (Fourier) transform,
// 2x2 block reduction of the Hamiltonian, exact analytic propagation, and
// the large/small hopping approximants.
#pragma once

#include <vector>

#include "cavex/types.hpp"

namespace cavex {

/// One 2x2 block of the Hamiltonian in the collective basis. The l = 0 block
/// is [[1 + 2 xi (n-1), tan], [tan, tan^2]]; every l >= 1 block is
/// [[1 - 2 xi, tan], [tan, tan^2]].
struct BlockHamiltonian {
  int label = 0;
  Eigen::Matrix2d entries = Eigen::Matrix2d::Zero();
};

/// C'_l = (1/sqrt(n)) sum_i w^{l i} C_i with w = exp(+2 pi i / n), and the
/// same for the atomic amplitudes. Unitary.
FourierAmplitudes fourier_transform(const ManifoldState& state);

/// Exact inverse: C_i = (1/sqrt(n)) sum_l w^{-l i} C'_l.
ManifoldState inverse_fourier(const FourierAmplitudes& amps);

/// All n blocks in mode order; blocks l = 1 .. n-1 are identical.
std::vector<BlockHamiltonian> block_hamiltonians(const SystemParams& params);

/// exp(-i B t) applied to an amplitude pair, evaluated analytically by
/// splitting B = c0 I + v . sigma; a zero traceless part degenerates to a
/// pure phase.
Eigen::Vector2cd propagate_block(const BlockHamiltonian& block, double t,
                                 const Eigen::Vector2cd& amplitudes);

/// Exact evolution for any tan_theta0: Fourier transform, per-block analytic
/// propagation, inverse transform. Norm preserving.
ManifoldState evolve(const SystemParams& params, const ManifoldState& initial,
                     double t);

/// Exact evolution through the explicit closed-form mode solutions, valid
/// only for tan_theta0 = 1. Frequencies sqrt(1 + xi^2 (n-1)^2) for the l = 0
/// mode and sqrt(1 + xi^2) for the rest. Agrees with evolve() to roundoff;
/// kept as an independent algebraic route.
ManifoldState evolve_closed_form_tan1(const SystemParams& params,
                                      const ManifoldState& initial, double t);

/// Large-hopping limit (tan_theta0 = 1): photonic amplitudes mix through
///   C_l(t) ~ (e^{2 i xi t} / n) sum_k (e^{-2 i xi n t} - 1 + n delta_kl) C_k(0)
/// while atomic amplitudes stay frozen. Returned exactly as the formula
/// gives it, without renormalisation.
ManifoldState approx_large_hopping(const SystemParams& params,
                                   const ManifoldState& initial, double t);

/// Small-hopping limit (tan_theta0 = 1): on-site Rabi rotation combined with
/// the slow inter-cavity phase e^{-i xi n t}; photonic and atomic amplitudes
/// enter symmetrically. Not renormalised.
ManifoldState approx_small_hopping(const SystemParams& params,
                                   const ManifoldState& initial, double t);

enum class EvolutionMethod { exact, closed_form, large_hopping, small_hopping };

ManifoldState evolve_with(EvolutionMethod method, const SystemParams& params,
                          const ManifoldState& initial, double t);

}  // namespace cavex
