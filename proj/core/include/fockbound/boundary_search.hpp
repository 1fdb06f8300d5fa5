#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fockbound/moments.hpp"
#include "fockbound/relations.hpp"

namespace fockbound {

struct LagrangeParams {
  double lambda_n = 0.0;
  double lambda_x = 0.0;
  double lambda_p = 0.0;
};

/// O = lambda_n N + N^2 + c a + conj(c) a^dagger, c = (lambda_x + i lambda_p)/sqrt2,
/// in the number basis. Tridiagonal: O(n,n) = lambda_n n + n^2,
/// O(n,n+1) = c sqrt(n+1), O(n+1,n) = conj(c) sqrt(n+1).
Eigen::MatrixXcd build_O(const LagrangeParams& params, std::size_t dim);

struct GroundStateOptions {
  /// Largest top-level weight accepted for the ground state.
  double max_tail = 1e-8;
  /// Ground and first excited level closer than this (relative to
  /// max(1, |E0|)) are reported as degenerate.
  double degeneracy_gap = 1e-12;
};

struct FrontierSample {
  LagrangeParams params;
  FockState state;
  MomentSummary moments;
  double eigenvalue = 0.0;
  double residual = 0.0;  ///< ||O psi - E0 psi||
  double gap = 0.0;       ///< E1 - E0
  bool degenerate = false;
  /// Second solver eigenvector of a degenerate ground space.
  std::optional<FockState> alternate;

  double mean_n() const { return moments.mean_n; }
  double var_a() const { return moments.var_a; }
  double var_n() const { return moments.var_n; }
};

/// Lowest eigenvector of O. Symmetric tridiagonal solver when lambda_p = 0,
/// dense Hermitian solver otherwise. The returned vector is phase-fixed so
/// that its largest component is real and positive. Throws TruncationError
/// when the ground state reaches the top of the box.
FrontierSample ground_state_O(const LagrangeParams& params, std::size_t dim,
                              const GroundStateOptions& options = {});

enum class FrontierStatus { Converged, CoherentLimit, FockLimit, Skipped };

std::string_view to_string(FrontierStatus status) noexcept;

struct FrontierPoint {
  BoundaryPoint point;
  LagrangeParams params;
  double eigenvalue = 0.0;
  double residual = 0.0;
  /// max(|<N> - target|, |(da)^2 - target|) of the accepted ground state.
  double target_error = 0.0;
  FrontierStatus status = FrontierStatus::Skipped;
  bool used_fallback = false;
  std::string diagnostic;
};

struct FrontierOptions {
  double target_tolerance = 1e-4;
  double newton_tolerance = 1e-10;
  int max_newton_steps = 60;
  GroundStateOptions ground;
};

/// Minimal (dN)^2 at fixed <N> for every var_a in the grid, from ground
/// states of O with lambda_p = 0 and lambda_x < 0.
///
/// Damped Newton in (lambda_n, log(-lambda_x)) with a finite-difference
/// Jacobian, continued from the Fock end of the grid; nested bracketing
/// (lambda_n for <N>, then log(-lambda_x) for var_a) when Newton fails.
/// var_a = 0 is the coherent state. var_a = <N> needs integer <N> (Fock
/// state); otherwise the point is skipped. Output follows the grid order.
std::vector<FrontierPoint> trace_frontier(double mean_n, std::span<const double> var_a_grid,
                                          std::size_t dim, const FrontierOptions& options = {});

struct BruteForceOptions {
  int restarts = 32;
  std::uint64_t seed = 20240607;
  double constraint_tolerance = 1e-9;
};

/// Direct minimization of (dN)^2 over real non-negative amplitude vectors of
/// length dim_small subject to <N> = mean_n and (da)^2 = var_a. Augmented
/// Lagrangian with a BFGS inner solver and seeded random restarts.
BoundaryPoint brute_force_min_varN(double mean_n, double var_a, std::size_t dim_small,
                                   const BruteForceOptions& options = {});

}  // namespace fockbound
