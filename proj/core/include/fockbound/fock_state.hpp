#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fockbound {

using Complex = std::complex<double>;
using AmplitudeVector = std::vector<Complex>;

/// Normalization tolerance for FockState values.
inline constexpr double kNormTolerance = 1e-12;

/// Pure state of a single bosonic mode in the truncated number basis
/// |0>, ..., |dim-1>.
///
/// Operators act inside the box: components that a ladder operator would
/// push past |dim-1> are dropped. Every expectation value that can be
/// written as a matrix element between box states (N, N^2, a, a^2, E) is
/// exact for the stored vector; the truncation only affects how well the
/// vector approximates the intended infinite-dimensional state. Conventions:
/// hbar = 1, x = (a + a^dagger)/sqrt(2).
class FockState {
 public:
  /// Normalizes `amplitudes`. Throws Error with EmptyAmplitudes, NonFinite
  /// or ZeroNorm.
  static FockState from_amplitudes(AmplitudeVector amplitudes);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t n) const { return amplitudes_[n]; }

  /// Norm of the vector that was passed in, before normalization.
  double input_norm() const noexcept { return input_norm_; }

 private:
  FockState(AmplitudeVector amplitudes, double input_norm)
      : amplitudes_(std::move(amplitudes)), input_norm_(input_norm) {}

  AmplitudeVector amplitudes_;
  double input_norm_;
};

FockState make_state(std::span<const Complex> amplitudes);

/// a|psi>, unnormalized, same length as the state; top component is zero.
AmplitudeVector apply_annihilation(const FockState& state);

/// Replaces every amplitude by its modulus. Keeps <N> and (dN)^2, never
/// increases (da)^2.
FockState dephase(const FockState& state);

/// Multiplies c_n by exp(i*gamma*n).
FockState apply_linear_phase(const FockState& state, double gamma);

/// Probability weight on the top `levels` levels. Requires 1 <= levels < dim.
double tail_mass(const FockState& state, std::size_t levels);

/// Default cutoff for a construction centred on mean occupation n0:
/// ceil(n0 + 12*sqrt(n0 + 1) + 20).
std::size_t default_dim(double n0);

}  // namespace fockbound
