#include "fockbound/fock_state.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "fockbound/error.hpp"

namespace fockbound {

FockState FockState::from_amplitudes(AmplitudeVector amplitudes) {
  if (amplitudes.empty()) {
    throw Error(ErrorCode::EmptyAmplitudes, "amplitude list is empty");
  }
  double norm2 = 0.0;
  for (std::size_t n = 0; n < amplitudes.size(); ++n) {
    if (!std::isfinite(amplitudes[n].real()) || !std::isfinite(amplitudes[n].imag())) {
      throw Error(ErrorCode::NonFinite, fmt::format("amplitude {} is not finite", n));
    }
    norm2 += std::norm(amplitudes[n]);
  }
  if (!(norm2 > 0.0)) {
    throw Error(ErrorCode::ZeroNorm, "all amplitudes are zero");
  }
  const double norm = std::sqrt(norm2);
  for (auto& c : amplitudes) c /= norm;
  return FockState(std::move(amplitudes), norm);
}

FockState make_state(std::span<const Complex> amplitudes) {
  return FockState::from_amplitudes(AmplitudeVector(amplitudes.begin(), amplitudes.end()));
}

AmplitudeVector apply_annihilation(const FockState& state) {
  const auto c = state.amplitudes();
  AmplitudeVector out(c.size(), Complex{});
  for (std::size_t n = 0; n + 1 < c.size(); ++n) {
    out[n] = std::sqrt(static_cast<double>(n + 1)) * c[n + 1];
  }
  return out;
}

FockState dephase(const FockState& state) {
  AmplitudeVector out;
  out.reserve(state.dim());
  for (const auto& c : state.amplitudes()) out.emplace_back(std::abs(c), 0.0);
  return FockState::from_amplitudes(std::move(out));
}

FockState apply_linear_phase(const FockState& state, double gamma) {
  AmplitudeVector out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] *= std::polar(1.0, gamma * static_cast<double>(n));
  }
  return FockState::from_amplitudes(std::move(out));
}

double tail_mass(const FockState& state, std::size_t levels) {
  if (levels < 1 || levels >= state.dim()) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("tail levels must lie in [1, {}), got {}", state.dim(), levels));
  }
  const auto c = state.amplitudes();
  double mass = 0.0;
  for (std::size_t n = c.size() - levels; n < c.size(); ++n) mass += std::norm(c[n]);
  return mass;
}

std::size_t default_dim(double n0) {
  if (!(n0 >= 0.0) || !std::isfinite(n0)) {
    throw Error(ErrorCode::Domain, fmt::format("mean occupation must be finite and >= 0, got {}", n0));
  }
  return static_cast<std::size_t>(std::ceil(n0 + 12.0 * std::sqrt(n0 + 1.0) + 20.0));
}

}  // namespace fockbound
