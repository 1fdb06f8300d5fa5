#include "fockbound/moments.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fockbound/error.hpp"

namespace fockbound {
namespace {

double top_weight(const FockState& state) {
  return std::norm(state.amplitudes().back());
}

void guard_truncation(const FockState& state, const MomentOptions& options) {
  const double tail = top_weight(state);
  if (tail > options.max_tail) {
    throw TruncationError(
        fmt::format("top-level weight {:.3e} exceeds {:.3e} at dim {}", tail, options.max_tail,
                    state.dim()),
        tail);
  }
}

// <a> and <a^2> as matrix elements inside the box.
Complex expect_a(std::span<const Complex> c) {
  Complex sum{};
  for (std::size_t n = 0; n + 1 < c.size(); ++n) {
    sum += std::conj(c[n]) * std::sqrt(static_cast<double>(n + 1)) * c[n + 1];
  }
  return sum;
}

Complex expect_a2(std::span<const Complex> c) {
  Complex sum{};
  for (std::size_t n = 0; n + 2 < c.size(); ++n) {
    const double k = std::sqrt(static_cast<double>((n + 1) * (n + 2)));
    sum += std::conj(c[n]) * k * c[n + 2];
  }
  return sum;
}

double expect_n(std::span<const Complex> c) {
  double sum = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) sum += static_cast<double>(n) * std::norm(c[n]);
  return sum;
}

}  // namespace

MomentSummary moments(const FockState& state, const MomentOptions& options) {
  guard_truncation(state, options);
  const auto c = state.amplitudes();

  MomentSummary m;
  Complex na{};  // <(2N+1) a>
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double p = std::norm(c[n]);
    const double nn = static_cast<double>(n);
    m.mean_n += nn * p;
    m.mean_n2 += nn * nn * p;
    if (n + 1 < c.size()) {
      const Complex term = std::conj(c[n]) * std::sqrt(nn + 1.0) * c[n + 1];
      m.mean_a += term;
      na += (2.0 * nn + 1.0) * term;
    }
  }
  m.var_n = m.mean_n2 - m.mean_n * m.mean_n;
  m.var_a = m.mean_n - std::norm(m.mean_a);
  m.anticomm = na - 2.0 * m.mean_n * m.mean_a;
  m.tail = top_weight(state);
  return m;
}

QuadratureCovariance quadrature_covariance(const FockState& state, double beta,
                                           const MomentOptions& options) {
  guard_truncation(state, options);
  const auto c = state.amplitudes();
  const double mean_n = expect_n(c);
  const Complex a = expect_a(c) * std::polar(1.0, beta);
  const Complex a2 = expect_a2(c) * std::polar(1.0, 2.0 * beta);

  QuadratureCovariance q;
  q.beta = beta;
  q.mean_x = std::numbers::sqrt2 * a.real();
  q.mean_p = std::numbers::sqrt2 * a.imag();
  // <x^2> = Re<a^2 e^{2ib}> + <N> + 1/2, <p^2> = -Re<a^2 e^{2ib}> + <N> + 1/2
  q.var_x = a2.real() + mean_n + 0.5 - q.mean_x * q.mean_x;
  q.var_p = -a2.real() + mean_n + 0.5 - q.mean_p * q.mean_p;
  q.cross = a2.imag() - q.mean_x * q.mean_p;
  return q;
}

double average_quadrature_variance(const FockState& state, std::size_t n_angles,
                                   const MomentOptions& options) {
  if (n_angles < 2) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("need at least 2 angles, got {}", n_angles));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < n_angles; ++k) {
    const double beta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_angles);
    sum += quadrature_covariance(state, beta, options).var_x;
  }
  return sum / static_cast<double>(n_angles);
}

EOperatorStats e_operator_stats(const FockState& state, const MomentOptions& options) {
  guard_truncation(state, options);
  const auto c = state.amplitudes();
  EOperatorStats s;
  for (std::size_t n = 0; n + 1 < c.size(); ++n) s.mean_e += std::conj(c[n]) * c[n + 1];
  s.p0 = std::norm(c[0]);
  double ede = 0.0;  // <E^dagger E> = sum_{n>=1} |c_n|^2
  for (std::size_t n = 1; n < c.size(); ++n) ede += std::norm(c[n]);
  s.var_e = ede - std::norm(s.mean_e);
  return s;
}

}  // namespace fockbound
