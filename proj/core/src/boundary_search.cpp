#include "fockbound/boundary_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <boost/math/tools/toms748_solve.hpp>
#include <fmt/format.h>

#include "fockbound/error.hpp"

namespace fockbound {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct LowestPair {
  Eigen::VectorXcd v0;
  Eigen::VectorXcd v1;
  double e0 = 0.0;
  double e1 = 0.0;
};

Complex hopping(const LagrangeParams& p) { return Complex(p.lambda_x, p.lambda_p) / std::sqrt(2.0); }

LowestPair lowest_pair(const LagrangeParams& p, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  LowestPair out;
  if (p.lambda_p == 0.0) {
    Eigen::VectorXd diag(d);
    Eigen::VectorXd sub(d - 1);
    for (Eigen::Index n = 0; n < d; ++n) {
      const double nn = static_cast<double>(n);
      diag[n] = p.lambda_n * nn + nn * nn;
      if (n + 1 < d) sub[n] = p.lambda_x / std::sqrt(2.0) * std::sqrt(nn + 1.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) {
      throw Error(ErrorCode::NonConvergence, "tridiagonal eigensolver did not converge");
    }
    out.v0 = es.eigenvectors().col(0).cast<Complex>();
    out.v1 = es.eigenvectors().col(1).cast<Complex>();
    out.e0 = es.eigenvalues()[0];
    out.e1 = es.eigenvalues()[1];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(build_O(p, dim));
    if (es.info() != Eigen::Success) {
      throw Error(ErrorCode::NonConvergence, "Hermitian eigensolver did not converge");
    }
    out.v0 = es.eigenvectors().col(0);
    out.v1 = es.eigenvectors().col(1);
    out.e0 = es.eigenvalues()[0];
    out.e1 = es.eigenvalues()[1];
  }
  return out;
}

FockState canonical_state(const Eigen::VectorXcd& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const Complex phase = std::conj(v[imax]) / std::abs(v[imax]);
  AmplitudeVector amps(static_cast<std::size_t>(v.size()));
  for (Eigen::Index n = 0; n < v.size(); ++n) {
    Complex c = v[n] * phase;
    if (n == imax) c = Complex(std::abs(v[imax]), 0.0);
    amps[static_cast<std::size_t>(n)] = c;
  }
  return FockState::from_amplitudes(std::move(amps));
}

double eigen_residual(const LagrangeParams& p, const FockState& s, double e0) {
  const Complex c = hopping(p);
  const std::size_t dim = s.dim();
  double acc = 0.0;
  for (std::size_t n = 0; n < dim; ++n) {
    const double nn = static_cast<double>(n);
    Complex r = (p.lambda_n * nn + nn * nn - e0) * s[n];
    if (n + 1 < dim) r += c * std::sqrt(nn + 1.0) * s[n + 1];
    if (n > 0) r += std::conj(c) * std::sqrt(nn) * s[n - 1];
    acc += std::norm(r);
  }
  return std::sqrt(acc);
}

const MomentOptions kNoTailGuard{std::numeric_limits<double>::infinity(),
                                 std::numeric_limits<double>::infinity()};

struct Probe {
  double mean_n = 0.0;
  double var_a = 0.0;
  double var_n = 0.0;
};

// ground state of O(lambda_n, -exp(t), 0) without truncation checks
Probe probe(double lambda_n, double t, std::size_t dim) {
  const LagrangeParams p{lambda_n, -std::exp(t), 0.0};
  const LowestPair lp = lowest_pair(p, dim);
  const MomentSummary m = moments(canonical_state(lp.v0), kNoTailGuard);
  return Probe{m.mean_n, m.var_a, m.var_n};
}

bool is_integer(double x) { return std::abs(x - std::round(x)) <= 1e-12 * std::max(1.0, std::abs(x)); }

using boost::math::tools::eps_tolerance;
using boost::math::tools::toms748_solve;

// lambda_n with <N> = mean_n at fixed t; <N> is non-increasing in lambda_n
double solve_lambda_n(double mean_n, double t, std::size_t dim, double guess) {
  const auto f = [&](double ln) { return probe(ln, t, dim).mean_n - mean_n; };
  double lo = guess;
  double hi = guess;
  double flo = f(lo);
  double fhi = flo;
  double step = 1.0;
  int expand = 0;
  while (flo < 0.0) {
    hi = lo;
    fhi = flo;
    lo -= step;
    step *= 2.0;
    flo = f(lo);
    if (++expand > 60) throw Error(ErrorCode::NonConvergence, "cannot bracket lambda_N from above");
  }
  while (fhi > 0.0) {
    lo = hi;
    flo = fhi;
    hi += step;
    step *= 2.0;
    fhi = f(hi);
    if (++expand > 120) throw Error(ErrorCode::NonConvergence, "cannot bracket lambda_N from below");
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  std::uintmax_t iters = 200;
  const auto [a, b] = toms748_solve(f, lo, hi, flo, fhi, eps_tolerance<double>(50), iters);
  return 0.5 * (a + b);
}

struct Solution {
  double lambda_n = 0.0;
  double t = 0.0;
};

Solution nested_solve(double mean_n, double var_a, std::size_t dim, double lambda_guess) {
  double last_lambda = lambda_guess;
  const auto h = [&](double t) {
    last_lambda = solve_lambda_n(mean_n, t, dim, last_lambda);
    return probe(last_lambda, t, dim).var_a - var_a;
  };
  double lo = -20.0;
  double hlo = h(lo);
  if (hlo < 0.0) {
    throw Error(ErrorCode::NonConvergence,
                fmt::format("(da)^2 = {} is above the weak-coupling end of the frontier", var_a));
  }
  double hi = 0.0;
  double hhi = h(hi);
  int expand = 0;
  while (hhi > 0.0) {
    lo = hi;
    hlo = hhi;
    hi += 2.0;
    hhi = h(hi);
    if (++expand > 30) throw Error(ErrorCode::NonConvergence, "cannot bracket lambda_x");
  }
  double t = hi;
  if (hhi != 0.0) {
    std::uintmax_t iters = 200;
    const auto [a, b] = toms748_solve(h, lo, hi, hlo, hhi, eps_tolerance<double>(48), iters);
    t = 0.5 * (a + b);
  }
  return Solution{solve_lambda_n(mean_n, t, dim, last_lambda), t};
}

std::optional<Solution> newton_solve(double mean_n, double var_a, std::size_t dim, Solution seed,
                                     const FrontierOptions& options) {
  const auto residual = [&](const Solution& s) {
    const Probe pr = probe(s.lambda_n, s.t, dim);
    return Eigen::Vector2d(pr.mean_n - mean_n, pr.var_a - var_a);
  };
  Solution u = seed;
  Eigen::Vector2d F = residual(u);
  for (int step = 0; step < options.max_newton_steps; ++step) {
    if (F.cwiseAbs().maxCoeff() < options.newton_tolerance) return u;
    Eigen::Matrix2d J;
    const double h0 = 1e-6 * std::max(1.0, std::abs(u.lambda_n));
    const double h1 = 1e-6 * std::max(1.0, std::abs(u.t));
    J.col(0) = (residual({u.lambda_n + h0, u.t}) - F) / h0;
    J.col(1) = (residual({u.lambda_n, u.t + h1}) - F) / h1;
    const Eigen::FullPivLU<Eigen::Matrix2d> lu(J);
    if (!lu.isInvertible()) return std::nullopt;
    const Eigen::Vector2d delta = -lu.solve(F);
    double damping = 1.0;
    bool improved = false;
    for (int k = 0; k < 30; ++k) {
      const Solution trial{u.lambda_n + damping * delta[0], u.t + damping * delta[1]};
      const Eigen::Vector2d Ft = residual(trial);
      if (Ft.allFinite() && Ft.cwiseAbs().maxCoeff() < F.cwiseAbs().maxCoeff()) {
        u = trial;
        F = Ft;
        improved = true;
        break;
      }
      damping *= 0.5;
    }
    if (!improved) break;
  }
  if (F.cwiseAbs().maxCoeff() < options.newton_tolerance) return u;
  return std::nullopt;
}

}  // namespace

Eigen::MatrixXcd build_O(const LagrangeParams& params, std::size_t dim) {
  if (dim < 2) throw Error(ErrorCode::InvalidArgument, "build_O needs dim >= 2");
  const auto d = static_cast<Eigen::Index>(dim);
  const Complex c = hopping(params);
  Eigen::MatrixXcd O = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index n = 0; n < d; ++n) {
    const double nn = static_cast<double>(n);
    O(n, n) = params.lambda_n * nn + nn * nn;
    if (n + 1 < d) {
      O(n, n + 1) = c * std::sqrt(nn + 1.0);
      O(n + 1, n) = std::conj(c) * std::sqrt(nn + 1.0);
    }
  }
  return O;
}

FrontierSample ground_state_O(const LagrangeParams& params, std::size_t dim,
                              const GroundStateOptions& options) {
  if (dim < 2) throw Error(ErrorCode::InvalidArgument, "ground_state_O needs dim >= 2");
  if (!std::isfinite(params.lambda_n) || !std::isfinite(params.lambda_x) ||
      !std::isfinite(params.lambda_p)) {
    throw Error(ErrorCode::NonFinite, "Lagrange multipliers must be finite");
  }
  const LowestPair lp = lowest_pair(params, dim);
  FockState state = canonical_state(lp.v0);
  const double tail = std::norm(state[dim - 1]);
  if (tail > options.max_tail) {
    throw TruncationError(fmt::format("ground state of O has top-level weight {:.3e} at dim {}",
                                      tail, dim),
                          tail);
  }
  const double gap = lp.e1 - lp.e0;
  const bool degenerate = gap <= options.degeneracy_gap * std::max(1.0, std::abs(lp.e0));
  FrontierSample out{params,  state, moments(state, kNoTailGuard),
                     lp.e0,   eigen_residual(params, state, lp.e0),
                     gap,     degenerate, std::nullopt};
  if (degenerate) out.alternate = canonical_state(lp.v1);
  return out;
}

std::string_view to_string(FrontierStatus status) noexcept {
  switch (status) {
    case FrontierStatus::Converged: return "converged";
    case FrontierStatus::CoherentLimit: return "coherent_limit";
    case FrontierStatus::FockLimit: return "fock_limit";
    case FrontierStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::vector<FrontierPoint> trace_frontier(double mean_n, std::span<const double> var_a_grid,
                                          std::size_t dim, const FrontierOptions& options) {
  if (!std::isfinite(mean_n) || mean_n < 0.0) {
    throw Error(ErrorCode::Domain, "target <N> must be finite and >= 0");
  }
  if (dim < 2 || mean_n >= static_cast<double>(dim - 1)) {
    throw Error(ErrorCode::Domain, fmt::format("target <N> = {} does not fit in dim {}", mean_n, dim));
  }
  for (double v : var_a_grid) {
    if (!(v >= 0.0) || v > mean_n * (1.0 + 1e-12)) {
      throw Error(ErrorCode::Domain, fmt::format("(da)^2 = {} is outside [0, {}]", v, mean_n));
    }
  }

  std::vector<FrontierPoint> out(var_a_grid.size());
  std::vector<std::size_t> order(var_a_grid.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return var_a_grid[i] > var_a_grid[j]; });

  std::optional<Solution> previous;
  double previous_var_n = -1.0;

  for (std::size_t idx : order) {
    const double v = var_a_grid[idx];
    FrontierPoint& fp = out[idx];
    fp.point = BoundaryPoint{v, kNaN, mean_n, PointSource::VARIATIONAL};
    fp.params = LagrangeParams{kNaN, kNaN, 0.0};
    fp.eigenvalue = kNaN;
    fp.residual = kNaN;

    if (v == 0.0) {
      fp.point.var_n = mean_n;
      fp.residual = 0.0;
      fp.status = FrontierStatus::CoherentLimit;
      fp.diagnostic = "only coherent states have (da)^2 = 0";
      continue;
    }
    if (std::abs(v - mean_n) <= 1e-12 * std::max(1.0, mean_n)) {
      if (!is_integer(mean_n)) {
        fp.status = FrontierStatus::Skipped;
        fp.diagnostic = "(da)^2 = <N> with non-integer <N> has no ground state of O";
        continue;
      }
      try {
        const FrontierSample s = ground_state_O({-2.0 * std::round(mean_n), 0.0, 0.0}, dim, options.ground);
        fp.params = s.params;
        fp.point.var_n = s.var_n();
        fp.eigenvalue = s.eigenvalue;
        fp.residual = s.residual;
        fp.target_error = std::max(std::abs(s.mean_n() - mean_n), std::abs(s.var_a() - v));
        fp.status = FrontierStatus::FockLimit;
      } catch (const TruncationError& e) {
        fp.status = FrontierStatus::Skipped;
        fp.diagnostic = e.what();
      }
      continue;
    }

    std::optional<Solution> sol;
    std::string note;
    try {
      if (previous) sol = newton_solve(mean_n, v, dim, *previous, options);
    } catch (const Error& e) {
      note = e.what();
    }
    bool fallback = false;
    const auto var_n_of = [&](const Solution& s) { return probe(s.lambda_n, s.t, dim).var_n; };
    if (sol && previous_var_n >= 0.0 && var_n_of(*sol) < previous_var_n - 1e-9) {
      note = "non-monotone continuation";
      sol.reset();
    }
    if (!sol) {
      try {
        const double guess = previous ? previous->lambda_n : -2.0 * mean_n;
        const Solution seed = nested_solve(mean_n, v, dim, guess);
        sol = newton_solve(mean_n, v, dim, seed, options);
        if (!sol) sol = seed;
        fallback = true;
      } catch (const Error& e) {
        fp.status = FrontierStatus::Skipped;
        fp.diagnostic = note.empty() ? e.what() : note + "; " + e.what();
        continue;
      }
    }

    const LagrangeParams params{sol->lambda_n, -std::exp(sol->t), 0.0};
    try {
      const FrontierSample s = ground_state_O(params, dim, options.ground);
      fp.params = params;
      fp.point.var_n = s.var_n();
      fp.eigenvalue = s.eigenvalue;
      fp.residual = s.residual;
      fp.used_fallback = fallback;
      fp.target_error = std::max(std::abs(s.mean_n() - mean_n), std::abs(s.var_a() - v));
      if (fp.target_error <= options.target_tolerance) {
        fp.status = FrontierStatus::Converged;
        fp.diagnostic = note;
        previous = sol;
        previous_var_n = s.var_n();
      } else {
        fp.status = FrontierStatus::Skipped;
        fp.diagnostic = fmt::format("targets missed by {:.3e}", fp.target_error);
      }
    } catch (const TruncationError& e) {
      fp.status = FrontierStatus::Skipped;
      fp.diagnostic = e.what();
    }
  }
  return out;
}

}  // namespace fockbound
