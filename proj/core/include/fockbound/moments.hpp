#pragma once

#include <cstddef>

#include "fockbound/fock_state.hpp"

namespace fockbound {

/// First and second moments of N = a^dagger a and a.
struct MomentSummary {
  double mean_n = 0.0;   ///< <N>
  double mean_n2 = 0.0;  ///< <N^2>
  Complex mean_a{};      ///< <a>
  double var_n = 0.0;    ///< (dN)^2 = <N^2> - <N>^2
  double var_a = 0.0;    ///< (da)^2 = <a^dagger a> - |<a>|^2
  Complex anticomm{};    ///< <{dN, da}_+> = <(2N+1) a> - 2 <N><a>
  double tail = 0.0;     ///< |c_{dim-1}|^2
};

/// Truncation guard for moment routines. States whose top-level weight
/// exceeds `max_tail` are rejected; `warn_tail` is advisory and only read
/// by callers that report warnings.
struct MomentOptions {
  double max_tail = 1e-6;
  double warn_tail = 1e-10;
};

MomentSummary moments(const FockState& state, const MomentOptions& options = {});

/// Covariance of the rotated quadratures
/// x_b = (a e^{ib} + a^dagger e^{-ib})/sqrt2, p_b = (a e^{ib} - a^dagger e^{-ib})/(sqrt2 i).
struct QuadratureCovariance {
  double beta = 0.0;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double cross = 0.0;  ///< (1/2)<dx dp + dp dx>
};

QuadratureCovariance quadrature_covariance(const FockState& state, double beta,
                                           const MomentOptions& options = {});

/// Mean of var_x over the grid beta_k = pi*k/n_angles, k < n_angles. var_x
/// has period pi and only a second harmonic, so any n_angles >= 2 gives
/// var_a + 1/2 exactly.
double average_quadrature_variance(const FockState& state, std::size_t n_angles,
                                   const MomentOptions& options = {});

/// Statistics of the one-sided shift E = sum_n |n><n+1|.
///
/// Inside the box E^dagger E = 1 - |0><0| holds exactly, so <E^dagger E> = 1 - p0.
/// E E^dagger is the identity with the top level removed.
struct EOperatorStats {
  double var_e = 0.0;  ///< <E^dagger E> - |<E>|^2
  double p0 = 0.0;     ///< |c_0|^2
  Complex mean_e{};
};

EOperatorStats e_operator_stats(const FockState& state, const MomentOptions& options = {});

}  // namespace fockbound
