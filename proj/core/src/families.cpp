#include "fockbound/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "fockbound/error.hpp"

namespace fockbound {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

void require_dim(std::size_t dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dim must be >= 1");
}

void require_alpha(double alpha_abs, const FamilyLimits& limits) {
  if (!std::isfinite(alpha_abs)) throw Error(ErrorCode::NonFinite, "alpha is not finite");
  if (alpha_abs > limits.max_alpha) {
    throw Error(ErrorCode::Domain, fmt::format("|alpha| = {} exceeds the limit {} (pass an explicit "
                                               "dim and widened limits to override)",
                                               alpha_abs, limits.max_alpha));
  }
}

// Normalized state from log-moduli and phases; -inf log-moduli give exact zeros.
FockState from_log_amplitudes(const std::vector<double>& log_mod, const std::vector<double>& phase) {
  const double top = *std::max_element(log_mod.begin(), log_mod.end());
  if (!std::isfinite(top)) throw Error(ErrorCode::ZeroNorm, "all amplitudes vanish");
  AmplitudeVector amps(log_mod.size());
  for (std::size_t n = 0; n < amps.size(); ++n) {
    amps[n] = std::isfinite(log_mod[n]) ? std::polar(std::exp(log_mod[n] - top), phase[n])
                                        : Complex{};
  }
  return FockState::from_amplitudes(std::move(amps));
}

FockState check_tail(FockState state, const FamilyLimits& limits, const char* family) {
  // two levels: squeezed vacua live on even levels only
  const double tail = state.dim() > 2 ? tail_mass(state, 2) : std::norm(state.amplitudes().back());
  if (tail > limits.tail_tolerance) {
    throw TruncationError(fmt::format("{} state leaks out of the box: top-two-level weight {:.3e} at "
                                      "dim {} (tolerance {:.1e})",
                                      family, tail, state.dim(), limits.tail_tolerance),
                          tail);
  }
  return state;
}

double log_abs(double x) {
  return x == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(x));
}

// n * log|alpha| with the convention 0^0 = 1.
double power_log(double log_alpha, double n) {
  return n == 0.0 ? 0.0 : n * log_alpha;
}

// Generalized Laguerre L_n^{(k)}(x) by upward recurrence in n.
double laguerre(std::size_t n, double k, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + k - x;
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double next = ((2.0 * jj + 1.0 + k - x) * cur - (jj + k) * prev) / (jj + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

FamilyLimits FamilyLimits::unbounded() {
  FamilyLimits l;
  l.max_squeeze = std::numeric_limits<double>::infinity();
  l.max_alpha = std::numeric_limits<double>::infinity();
  return l;
}

SqueezeParams SqueezeParams::make(double alpha_abs, double theta, double s, double vartheta) {
  if (!std::isfinite(alpha_abs) || !std::isfinite(theta) || !std::isfinite(s) ||
      !std::isfinite(vartheta)) {
    throw Error(ErrorCode::NonFinite, "squeeze parameters must be finite");
  }
  if (alpha_abs < 0.0) throw Error(ErrorCode::Domain, "|alpha| must be >= 0");
  if (s < 0.0) throw Error(ErrorCode::Domain, "squeeze magnitude s must be >= 0");
  return SqueezeParams{alpha_abs, reduce_angle(theta), s, reduce_angle(vartheta)};
}

Complex SqueezeParams::alpha() const { return std::polar(alpha_abs, theta); }

FockState make_fock(std::size_t n, std::size_t dim) {
  require_dim(dim);
  if (n >= dim) {
    throw Error(ErrorCode::Domain, fmt::format("Fock level {} is outside a box of dim {}", n, dim));
  }
  AmplitudeVector amps(dim, Complex{});
  amps[n] = 1.0;
  return FockState::from_amplitudes(std::move(amps));
}

FockState make_coherent(Complex alpha, std::size_t dim, const FamilyLimits& limits) {
  require_dim(dim);
  require_alpha(std::abs(alpha), limits);
  const double la = log_abs(std::abs(alpha));
  const double phase = std::arg(alpha);
  std::vector<double> log_mod(dim), ph(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const double nn = static_cast<double>(n);
    log_mod[n] = power_log(la, nn) - 0.5 * std::lgamma(nn + 1.0);
    ph[n] = phase * nn;
  }
  return check_tail(from_log_amplitudes(log_mod, ph), limits, "coherent");
}

FockState make_gaussian_number(double n0, double delta, std::size_t dim,
                               const FamilyLimits& limits) {
  require_dim(dim);
  if (!std::isfinite(n0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::NonFinite, "Gaussian parameters must be finite");
  }
  if (n0 < 0.0) throw Error(ErrorCode::Domain, "N0 must be >= 0");
  if (!(delta > 0.0)) throw Error(ErrorCode::Domain, "delta must be > 0");
  std::vector<double> log_mod(dim), ph(dim, 0.0);
  for (std::size_t n = 0; n < dim; ++n) {
    const double d = static_cast<double>(n) - n0;
    log_mod[n] = -d * d / (4.0 * delta * delta);
  }
  return check_tail(from_log_amplitudes(log_mod, ph), limits, "Gaussian");
}

FockState make_squeezed_coherent(const SqueezeParams& p, std::size_t dim,
                                 const FamilyLimits& limits) {
  require_dim(dim);
  require_alpha(p.alpha_abs, limits);
  if (p.s > limits.max_squeeze) {
    throw Error(ErrorCode::Domain,
                fmt::format("squeeze s = {} exceeds the limit {}", p.s, limits.max_squeeze));
  }
  const Complex alpha = p.alpha();
  const Complex rot = std::polar(1.0, p.vartheta);
  const double ch = std::cosh(p.s);
  const double sh = std::sinh(p.s);
  const double th = std::tanh(p.s);
  const Complex gamma = alpha * ch + std::conj(alpha) * rot * sh;

  AmplitudeVector amps(dim, Complex{});
  amps[0] = std::exp(-0.5 * std::norm(alpha) - 0.5 * std::conj(alpha) * std::conj(alpha) * rot * th) /
            std::sqrt(ch);
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    const double nn = static_cast<double>(n);
    Complex next = gamma * amps[n];
    if (n > 0) next -= rot * sh * std::sqrt(nn) * amps[n - 1];
    amps[n + 1] = next / (ch * std::sqrt(nn + 1.0));
  }
  return check_tail(FockState::from_amplitudes(std::move(amps)), limits, "squeezed coherent");
}

MomentTriple squeezed_moments(const SqueezeParams& p) {
  const double sh2 = std::sinh(p.s) * std::sinh(p.s);
  const double a2 = p.alpha_abs * p.alpha_abs;
  MomentTriple m;
  m.mean_n = sh2 + a2;
  m.var_a = sh2;
  m.var_n = a2 * (std::cosh(2.0 * p.s) - std::sinh(2.0 * p.s) * std::cos(2.0 * p.theta - p.vartheta)) +
            2.0 * sh2 * (1.0 + sh2);
  return m;
}

double scs_min_varN(double var_a, double mean_n) {
  if (!(var_a >= 0.0)) throw Error(ErrorCode::Domain, "(da)^2 must be >= 0");
  if (var_a > mean_n) {
    throw Error(ErrorCode::Domain,
                fmt::format("(da)^2 = {} exceeds <N> = {}: |alpha|^2 would be negative", var_a, mean_n));
  }
  const double root = std::sqrt(1.0 + var_a) - std::sqrt(var_a);
  return (mean_n - var_a) * root * root + 2.0 * var_a * (1.0 + var_a);
}

FockState make_displaced_fock(Complex alpha, std::size_t n, std::size_t dim,
                              const FamilyLimits& limits) {
  require_dim(dim);
  require_alpha(std::abs(alpha), limits);
  if (n >= dim) {
    throw Error(ErrorCode::Domain, fmt::format("Fock level {} is outside a box of dim {}", n, dim));
  }
  const double r = std::abs(alpha);
  if (r == 0.0) return make_fock(n, dim);

  const double x = r * r;
  const double lr = std::log(r);
  const double theta = std::arg(alpha);
  const double nn = static_cast<double>(n);
  AmplitudeVector amps(dim, Complex{});
  for (std::size_t m = 0; m < dim; ++m) {
    const double mm = static_cast<double>(m);
    double log_mod = 0.0;
    double phase = 0.0;
    double lag = 0.0;
    if (m >= n) {
      // sqrt(n!/m!) alpha^{m-n} e^{-x/2} L_n^{(m-n)}(x)
      log_mod = 0.5 * (std::lgamma(nn + 1.0) - std::lgamma(mm + 1.0)) + (mm - nn) * lr - 0.5 * x;
      phase = (mm - nn) * theta;
      lag = laguerre(n, mm - nn, x);
    } else {
      // sqrt(m!/n!) (-alpha^*)^{n-m} e^{-x/2} L_m^{(n-m)}(x)
      log_mod = 0.5 * (std::lgamma(mm + 1.0) - std::lgamma(nn + 1.0)) + (nn - mm) * lr - 0.5 * x;
      phase = (nn - mm) * (std::numbers::pi - theta);
      lag = laguerre(m, nn - mm, x);
    }
    amps[m] = std::polar(std::exp(log_mod), phase) * lag;
  }
  return check_tail(FockState::from_amplitudes(std::move(amps)), limits, "displaced Fock");
}

MomentTriple displaced_fock_moments(Complex alpha, std::size_t n) {
  const double a2 = std::norm(alpha);
  const double nn = static_cast<double>(n);
  return MomentTriple{nn + a2, nn, (2.0 * nn + 1.0) * a2};
}

double displaced_fock_varN(double var_a, double mean_n) {
  if (!(var_a >= 0.0) || std::floor(var_a) != var_a) {
    throw Error(ErrorCode::Domain,
                fmt::format("displaced Fock (da)^2 must be a non-negative integer, got {}", var_a));
  }
  if (var_a > mean_n) {
    throw Error(ErrorCode::Domain, fmt::format("(da)^2 = {} exceeds <N> = {}", var_a, mean_n));
  }
  return (2.0 * var_a + 1.0) * (mean_n - var_a);
}

FockState make_photon_added(Complex alpha, std::size_t m, std::size_t dim,
                            const FamilyLimits& limits) {
  require_dim(dim);
  require_alpha(std::abs(alpha), limits);
  if (m >= dim) {
    throw Error(ErrorCode::Domain,
                fmt::format("{} added photons do not fit in a box of dim {}", m, dim));
  }
  const double la = log_abs(std::abs(alpha));
  const double theta = std::arg(alpha);
  const double mm = static_cast<double>(m);
  std::vector<double> log_mod(dim, -std::numeric_limits<double>::infinity());
  std::vector<double> ph(dim, 0.0);
  // <n|(a^dagger)^m|alpha> = sqrt(n!/(n-m)!) alpha^{n-m} / sqrt((n-m)!) e^{-|alpha|^2/2}
  for (std::size_t n = m; n < dim; ++n) {
    const double k = static_cast<double>(n) - mm;
    log_mod[n] = 0.5 * std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(k + 1.0) +
                 power_log(la, k);
    ph[n] = theta * k;
  }
  auto state = from_log_amplitudes(log_mod, ph);
  if (std::abs(alpha) == 0.0) return state;
  return check_tail(std::move(state), limits, "photon-added coherent");
}

FockState make_circle_superposition(double alpha0, double u, std::size_t dim,
                                    const FamilyLimits& limits) {
  require_dim(dim);
  if (!std::isfinite(alpha0) || !std::isfinite(u)) {
    throw Error(ErrorCode::NonFinite, "circle parameters must be finite");
  }
  if (!(alpha0 > 0.0)) throw Error(ErrorCode::Domain, "alpha0 must be > 0");
  if (!(u > 0.0)) throw Error(ErrorCode::Domain, "u must be > 0");
  require_alpha(alpha0, limits);
  const double delta = alpha0 * alpha0;
  const double la = std::log(alpha0);
  std::vector<double> log_mod(dim), ph(dim, 0.0);
  for (std::size_t n = 0; n < dim; ++n) {
    const double nn = static_cast<double>(n);
    const double d = nn - delta;
    log_mod[n] = power_log(la, nn) - 0.5 * std::lgamma(nn + 1.0) - d * d / (2.0 * u * u);
  }
  return check_tail(from_log_amplitudes(log_mod, ph), limits, "circle superposition");
}

FockState make_lowering_eigenstate(double d, std::size_t k, std::size_t dim) {
  require_dim(dim);
  if (!std::isfinite(d)) throw Error(ErrorCode::NonFinite, "d must be finite");
  if (d == 0.0) throw Error(ErrorCode::Domain, "d must be non-zero");
  if (k >= dim) {
    throw Error(ErrorCode::Domain, fmt::format("eigenvalue k = {} needs dim > k, got {}", k, dim));
  }
  AmplitudeVector amps(dim, Complex{});
  amps[0] = 1.0;
  for (std::size_t n = 0; n < k; ++n) {
    const double nn = static_cast<double>(n);
    amps[n + 1] = (static_cast<double>(k) - nn) / (d * std::sqrt(nn + 1.0)) * amps[n];
  }
  return FockState::from_amplitudes(std::move(amps));
}

double lowering_eigen_residual(const FockState& state, double d, std::size_t k) {
  const auto c = state.amplitudes();
  const auto ac = apply_annihilation(state);
  double r2 = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const Complex v = static_cast<double>(n) * c[n] + d * ac[n] - static_cast<double>(k) * c[n];
    r2 += std::norm(v);
  }
  return std::sqrt(r2);
}

}  // namespace fockbound
