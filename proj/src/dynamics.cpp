#include "cavex/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace cavex {

namespace {

constexpr Complex kI{0.0, 1.0};

// w^k for w = exp(+2 pi i / n), with the exponent reduced mod n first so
// that round trips cancel exactly.
Complex root_of_unity_power(int n, long k) {
  long r = k % n;
  if (r < 0) r += n;
  return std::polar(1.0, 2.0 * std::numbers::pi * double(r) / double(n));
}

void require_unit_coupling(const SystemParams& params, const char* who) {
  if (params.tan_theta0 != 1.0)
    throw std::invalid_argument(std::string(who) +
                                ": only supported for tan_theta0 = 1");
}

}  // namespace

FourierAmplitudes fourier_transform(const ManifoldState& state) {
  const int n = state.sites();
  const double scale = 1.0 / std::sqrt(double(n));
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(2 * n);
  for (int l = 0; l < n; ++l) {
    Complex c = 0.0, a = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex w = root_of_unity_power(n, long(l) * i);
      c += w * state.photon_amp(i);
      a += w * state.atom_amp(i);
    }
    out(2 * l) = scale * c;
    out(2 * l + 1) = scale * a;
  }
  return FourierAmplitudes(std::move(out));
}

ManifoldState inverse_fourier(const FourierAmplitudes& amps) {
  const int n = amps.modes();
  const double scale = 1.0 / std::sqrt(double(n));
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(2 * n);
  for (int i = 0; i < n; ++i) {
    Complex c = 0.0, a = 0.0;
    for (int l = 0; l < n; ++l) {
      const Complex w = root_of_unity_power(n, -long(l) * i);
      c += w * amps.photon_mode(l);
      a += w * amps.atom_mode(l);
    }
    out(2 * i) = scale * c;
    out(2 * i + 1) = scale * a;
  }
  return ManifoldState(std::move(out));
}

std::vector<BlockHamiltonian> block_hamiltonians(const SystemParams& params) {
  const double tan = params.tan_theta0;
  std::vector<BlockHamiltonian> blocks(params.n);
  for (int l = 0; l < params.n; ++l) {
    const double hop = (l == 0) ? 2.0 * params.xi * (params.n - 1)
                                : -2.0 * params.xi;
    blocks[l].label = l;
    blocks[l].entries << 1.0 + hop, tan, tan, tan * tan;
  }
  return blocks;
}

Eigen::Vector2cd propagate_block(const BlockHamiltonian& block, double t,
                                 const Eigen::Vector2cd& amplitudes) {
  const Eigen::Matrix2d& b = block.entries;
  const double c0 = 0.5 * (b(0, 0) + b(1, 1));
  const double vx = b(0, 1);
  const double vz = 0.5 * (b(0, 0) - b(1, 1));
  const double v = std::hypot(vx, vz);
  const Complex phase = std::polar(1.0, -c0 * t);

  if (v == 0.0) return phase * amplitudes;

  const double c = std::cos(v * t);
  const Complex s = -kI * std::sin(v * t) / v;
  Eigen::Matrix2cd u;
  u << phase * (c + s * vz), phase * (s * vx),
       phase * (s * vx), phase * (c - s * vz);
  return u * amplitudes;
}

ManifoldState evolve(const SystemParams& params, const ManifoldState& initial,
                     double t) {
  if (initial.sites() != params.n)
    throw std::invalid_argument("evolve: site count mismatch");
  const FourierAmplitudes modes = fourier_transform(initial);
  const std::vector<BlockHamiltonian> blocks = block_hamiltonians(params);
  Eigen::VectorXcd out(2 * params.n);
  for (int l = 0; l < params.n; ++l) {
    const Eigen::Vector2cd pair(modes.photon_mode(l), modes.atom_mode(l));
    const Eigen::Vector2cd evolved = propagate_block(blocks[l], t, pair);
    out(2 * l) = evolved(0);
    out(2 * l + 1) = evolved(1);
  }
  return inverse_fourier(FourierAmplitudes(std::move(out)));
}

ManifoldState evolve_closed_form_tan1(const SystemParams& params,
                                      const ManifoldState& initial, double t) {
  require_unit_coupling(params, "evolve_closed_form_tan1");
  if (initial.sites() != params.n)
    throw std::invalid_argument("evolve_closed_form_tan1: site count mismatch");
  const int n = params.n;
  const double xi = params.xi;
  const FourierAmplitudes modes = fourier_transform(initial);
  Eigen::VectorXcd out(2 * n);

  // Collective mode l = 0.
  {
    const double phi = xi * (n - 1);
    const double nu = std::sqrt(1.0 + phi * phi);
    const Complex phase = std::polar(1.0, -(1.0 + phi) * t);
    const double cn = std::cos(nu * t);
    const double sn = std::sin(nu * t);
    const Complex c0 = modes.photon_mode(0);
    const Complex a0 = modes.atom_mode(0);
    out(0) = phase / nu * ((nu * cn - kI * phi * sn) * c0 - kI * sn * a0);
    out(1) = phase / nu * ((nu * cn + kI * phi * sn) * a0 - kI * sn * c0);
  }
  // Modes l >= 1 all share one frequency.
  if (n > 1) {
    const double nu = std::sqrt(1.0 + xi * xi);
    const Complex phase = std::polar(1.0, -(1.0 - xi) * t);
    const double cn = std::cos(nu * t);
    const double sn = std::sin(nu * t);
    for (int l = 1; l < n; ++l) {
      const Complex cl = modes.photon_mode(l);
      const Complex al = modes.atom_mode(l);
      out(2 * l) = phase / nu * ((nu * cn + kI * xi * sn) * cl - kI * sn * al);
      out(2 * l + 1) =
          phase / nu * ((nu * cn - kI * xi * sn) * al - kI * sn * cl);
    }
  }
  return inverse_fourier(FourierAmplitudes(std::move(out)));
}

ManifoldState approx_large_hopping(const SystemParams& params,
                                   const ManifoldState& initial, double t) {
  require_unit_coupling(params, "approx_large_hopping");
  if (initial.sites() != params.n)
    throw std::invalid_argument("approx_large_hopping: site count mismatch");
  const int n = params.n;
  const Complex mix = std::polar(1.0, -2.0 * params.xi * n * t) - 1.0;
  const Complex phase = std::polar(1.0, 2.0 * params.xi * t);
  Complex photon_sum = 0.0;
  for (int k = 0; k < n; ++k) photon_sum += initial.photon_amp(k);

  Eigen::VectorXcd out(2 * n);
  for (int l = 0; l < n; ++l) {
    out(2 * l) = phase / double(n) *
                 (mix * photon_sum + double(n) * initial.photon_amp(l));
    out(2 * l + 1) = initial.atom_amp(l);
  }
  return ManifoldState(std::move(out));
}

ManifoldState approx_small_hopping(const SystemParams& params,
                                   const ManifoldState& initial, double t) {
  require_unit_coupling(params, "approx_small_hopping");
  if (initial.sites() != params.n)
    throw std::invalid_argument("approx_small_hopping: site count mismatch");
  const int n = params.n;
  const double ct = std::cos(t);
  const double st = std::sin(t);
  const Complex mix = std::polar(1.0, -params.xi * n * t) - 1.0;
  const Complex phase = std::polar(1.0, -(1.0 - params.xi) * t);

  // On-site Rabi-rotated amplitudes entering both sums.
  Eigen::VectorXcd g(n), h(n);
  Complex g_sum = 0.0, h_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    g(k) = ct * initial.photon_amp(k) - kI * st * initial.atom_amp(k);
    h(k) = ct * initial.atom_amp(k) - kI * st * initial.photon_amp(k);
    g_sum += g(k);
    h_sum += h(k);
  }

  Eigen::VectorXcd out(2 * n);
  for (int l = 0; l < n; ++l) {
    out(2 * l) = phase / double(n) * (mix * g_sum + double(n) * g(l));
    out(2 * l + 1) = phase / double(n) * (mix * h_sum + double(n) * h(l));
  }
  return ManifoldState(std::move(out));
}

ManifoldState evolve_with(EvolutionMethod method, const SystemParams& params,
                          const ManifoldState& initial, double t) {
  switch (method) {
    case EvolutionMethod::exact:
      return evolve(params, initial, t);
    case EvolutionMethod::closed_form:
      return evolve_closed_form_tan1(params, initial, t);
    case EvolutionMethod::large_hopping:
      return approx_large_hopping(params, initial, t);
    case EvolutionMethod::small_hopping:
      return approx_small_hopping(params, initial, t);
  }
  throw std::invalid_argument("evolve_with: unknown method");
}

}  // namespace cavex
