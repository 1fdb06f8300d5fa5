#include "fockbound/two_mode.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fockbound/error.hpp"

namespace fockbound {
namespace {

std::size_t resolve_dim(std::size_t requested, const FamilySpec& spec) {
  return requested != 0 ? requested : std::max<std::size_t>(30, recommended_dim(spec));
}

// grid with one extra level per mode; index (n1, n2) -> n1 * (d2 + 1) + n2
struct Extended {
  std::size_t d1, d2;
  AmplitudeVector v;
  Complex& at(std::size_t n1, std::size_t n2) { return v[n1 * (d2 + 1) + n2]; }
};

Extended embed_zero(const TwoModeState& s) {
  return Extended{s.dim1(), s.dim2(), AmplitudeVector((s.dim1() + 1) * (s.dim2() + 1), Complex{})};
}

// a~ psi = sum sqrt(n1) sqrt(n2 + 1) c(n1, n2) |n1 - 1, n2 + 1>
Extended apply_atilde(const TwoModeState& s) {
  Extended out = embed_zero(s);
  for (std::size_t n1 = 1; n1 < s.dim1(); ++n1) {
    for (std::size_t n2 = 0; n2 < s.dim2(); ++n2) {
      out.at(n1 - 1, n2 + 1) = std::sqrt(static_cast<double>(n1) * static_cast<double>(n2 + 1)) * s(n1, n2);
    }
  }
  return out;
}

// a~^dagger psi = sum sqrt(n1 + 1) sqrt(n2) c(n1, n2) |n1 + 1, n2 - 1>
Extended apply_atilde_dag(const TwoModeState& s) {
  Extended out = embed_zero(s);
  for (std::size_t n1 = 0; n1 < s.dim1(); ++n1) {
    for (std::size_t n2 = 1; n2 < s.dim2(); ++n2) {
      out.at(n1 + 1, n2 - 1) = std::sqrt(static_cast<double>(n1 + 1) * static_cast<double>(n2)) * s(n1, n2);
    }
  }
  return out;
}

Complex inner(const Extended& a, const Extended& b) {
  Complex acc{};
  for (std::size_t i = 0; i < a.v.size(); ++i) acc += std::conj(a.v[i]) * b.v[i];
  return acc;
}

Complex inner(const TwoModeState& s, Extended& b) {
  Complex acc{};
  for (std::size_t n1 = 0; n1 < s.dim1(); ++n1) {
    for (std::size_t n2 = 0; n2 < s.dim2(); ++n2) acc += std::conj(s(n1, n2)) * b.at(n1, n2);
  }
  return acc;
}

}  // namespace

TwoModeState TwoModeState::from_amplitudes(std::size_t dim1, std::size_t dim2,
                                           AmplitudeVector amplitudes) {
  if (dim1 < 1 || dim2 < 1) throw Error(ErrorCode::InvalidArgument, "two-mode dims must be >= 1");
  if (amplitudes.size() != dim1 * dim2) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("expected {} x {} amplitudes, got {}", dim1, dim2, amplitudes.size()));
  }
  const FockState flat = FockState::from_amplitudes(std::move(amplitudes));
  AmplitudeVector v(flat.amplitudes().begin(), flat.amplitudes().end());
  return TwoModeState(dim1, dim2, std::move(v));
}

TwoModeState make_product(const FockState& mode1, const FockState& mode2) {
  AmplitudeVector v(mode1.dim() * mode2.dim());
  for (std::size_t n1 = 0; n1 < mode1.dim(); ++n1) {
    for (std::size_t n2 = 0; n2 < mode2.dim(); ++n2) v[n1 * mode2.dim() + n2] = mode1[n1] * mode2[n2];
  }
  return TwoModeState::from_amplitudes(mode1.dim(), mode2.dim(), std::move(v));
}

TwoModeState make_two_mode(const FamilySpec& spec1, const FamilySpec& spec2, std::size_t dim1,
                           std::size_t dim2, const FamilyLimits& limits) {
  return make_product(make_family_state(spec1, resolve_dim(dim1, spec1), limits),
                      make_family_state(spec2, resolve_dim(dim2, spec2), limits));
}

TwoModeState random_two_mode_state(Rng& rng, std::size_t dim1, std::size_t dim2) {
  if (dim1 < 1 || dim2 < 1) throw Error(ErrorCode::InvalidArgument, "two-mode dims must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  AmplitudeVector v(dim1 * dim2, Complex{});
  const std::size_t s1 = random_support(dim1);
  const std::size_t s2 = random_support(dim2);
  for (std::size_t n1 = 0; n1 < s1; ++n1) {
    for (std::size_t n2 = 0; n2 < s2; ++n2) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v[n1 * dim2 + n2] = Complex(re, im);
    }
  }
  return TwoModeState::from_amplitudes(dim1, dim2, std::move(v));
}

SchwingerMoments schwinger_moments(const TwoModeState& s, const MomentOptions& options) {
  SchwingerMoments m;
  double mn1sq = 0.0;
  for (std::size_t n1 = 0; n1 < s.dim1(); ++n1) {
    for (std::size_t n2 = 0; n2 < s.dim2(); ++n2) {
      const double p = std::norm(s(n1, n2));
      const double a = static_cast<double>(n1);
      const double b = static_cast<double>(n2);
      m.mean_n1 += a * p;
      mn1sq += a * a * p;
      m.mean_n2 += b * p;
      m.mean_n1n2 += a * b * p;
      if (n1 + 1 == s.dim1()) m.tail1 += p;
      if (n2 + 1 == s.dim2()) m.tail2 += p;
    }
  }
  const double tail = std::max(m.tail1, m.tail2);
  if (tail > options.max_tail) {
    throw TruncationError(fmt::format("two-mode state has top-level weight {:.3e} on a {} x {} grid",
                                      tail, s.dim1(), s.dim2()),
                          tail);
  }
  m.var_n1 = mn1sq - m.mean_n1 * m.mean_n1;
  m.jz = 0.5 * (m.mean_n1 - m.mean_n2);

  Extended down = apply_atilde(s);
  Extended up = apply_atilde_dag(s);
  m.mean_atilde = inner(s, down);
  m.mean_atilde_dag_atilde = inner(down, down).real();
  m.mean_atilde_atilde_dag = inner(up, up).real();
  const Complex atilde_sq = inner(up, down);  // <a~^2> = <a~^dag psi | a~ psi>

  m.jx = m.mean_atilde.real();
  m.jy = -m.mean_atilde.imag();
  const double sym = m.mean_atilde_dag_atilde + m.mean_atilde_atilde_dag;
  const double jx2 = 0.25 * (2.0 * atilde_sq.real() + sym);
  const double jy2 = 0.25 * (-2.0 * atilde_sq.real() + sym);
  m.var_jx = jx2 - m.jx * m.jx;
  m.var_jy = jy2 - m.jy * m.jy;
  m.var_atilde_sym = 0.5 * sym - std::norm(m.mean_atilde);
  return m;
}

RelationReport check_two_mode_heis(const SchwingerMoments& sm) {
  return RelationReport::make(RelationId::TWO_MODE_HEIS, sm.var_n1 * sm.var_atilde_sym,
                              0.25 * std::norm(sm.mean_atilde));
}

RelationReport check_two_mode_unc3(const SchwingerMoments& sm) {
  const double n1n2_shifted = sm.mean_n1n2 + sm.mean_n1 + sm.mean_n2 + 1.0;
  return RelationReport::make(RelationId::TWO_MODE_UNC3, (sm.var_n1 + 0.25) * sm.var_atilde_sym,
                              0.125 * n1n2_shifted - 0.125);
}

RelationReport check_two_mode_unc3_strong(const SchwingerMoments& sm) {
  return RelationReport::make(RelationId::TWO_MODE_UNC3_STRONG,
                              (sm.var_n1 + 0.25) * sm.var_atilde_sym,
                              0.25 * sm.mean_n1n2 + 0.125 * (sm.mean_n1 + sm.mean_n2));
}

JxJyAudit audit_jxjy_identity(const TwoModeState& state, const MomentOptions& options) {
  const SchwingerMoments sm = schwinger_moments(state, options);
  JxJyAudit a;
  a.lhs = 0.5 * (sm.mean_atilde_dag_atilde + sm.mean_atilde_atilde_dag);
  a.rhs = 0.5 * (sm.mean_n1n2 + sm.mean_n1 + sm.mean_n2 + 1.0) - 0.5;
  a.gap = a.lhs - a.rhs;
  a.half_n1n2 = 0.5 * sm.mean_n1n2;
  return a;
}

ReductionResult reduction_check(const FamilySpec& spec1, double alpha2, std::size_t dim1,
                                std::size_t dim2, const FamilyLimits& limits) {
  if (!std::isfinite(alpha2) || alpha2 <= 0.0) {
    throw Error(ErrorCode::Domain, "alpha2 must be a positive real");
  }
  const FamilySpec spec2 = family::Coherent{Complex(alpha2, 0.0)};
  const FockState mode1 = make_family_state(spec1, resolve_dim(dim1, spec1), limits);
  const FockState mode2 = make_family_state(spec2, resolve_dim(dim2, spec2), limits);

  ReductionResult r;
  r.single = moments(mode1);
  if (r.single.mean_n > 0.1 * alpha2 * alpha2) {
    throw Error(ErrorCode::Domain,
                fmt::format("<N1> = {} is outside the reduction regime <N1> <= 0.1 alpha2^2 = {}",
                            r.single.mean_n, 0.1 * alpha2 * alpha2));
  }
  const SchwingerMoments sm = schwinger_moments(make_product(mode1, mode2));
  const double scale = std::sqrt(sm.mean_n2);
  r.mapped.mean_n = sm.mean_n1;
  r.mapped.var_n = sm.var_n1;
  r.mapped.mean_n2 = sm.var_n1 + sm.mean_n1 * sm.mean_n1;
  r.mapped.mean_a = sm.mean_atilde / scale;
  r.mapped.var_a = sm.mean_atilde_dag_atilde / sm.mean_n2 - std::norm(r.mapped.mean_a);

  const auto rel = [](double diff, double ref) { return diff / std::max(std::abs(ref), 1.0); };
  r.deviation = std::max({rel(std::abs(r.mapped.mean_a - r.single.mean_a), std::abs(r.single.mean_a)),
                          rel(std::abs(r.mapped.var_a - r.single.var_a), r.single.var_a),
                          rel(std::abs(r.mapped.var_n - r.single.var_n), r.single.var_n)});
  r.unc = check_unc(r.mapped);
  r.unc3 = check_unc3(r.mapped);
  return r;
}

}  // namespace fockbound
