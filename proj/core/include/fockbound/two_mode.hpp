#pragma once

#include <cstddef>
#include <span>

#include "fockbound/family_spec.hpp"
#include "fockbound/moments.hpp"
#include "fockbound/random_states.hpp"
#include "fockbound/relations.hpp"

namespace fockbound {

/// Pure two-mode state on a dim1 x dim2 number-basis grid, stored row-major:
/// amplitude(n1, n2) = amplitudes[n1 * dim2 + n2].
class TwoModeState {
 public:
  /// Normalizes; same error codes as FockState::from_amplitudes.
  static TwoModeState from_amplitudes(std::size_t dim1, std::size_t dim2, AmplitudeVector amplitudes);

  std::size_t dim1() const noexcept { return dim1_; }
  std::size_t dim2() const noexcept { return dim2_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator()(std::size_t n1, std::size_t n2) const { return amplitudes_[n1 * dim2_ + n2]; }

 private:
  TwoModeState(std::size_t dim1, std::size_t dim2, AmplitudeVector amplitudes)
      : dim1_(dim1), dim2_(dim2), amplitudes_(std::move(amplitudes)) {}

  std::size_t dim1_;
  std::size_t dim2_;
  AmplitudeVector amplitudes_;
};

TwoModeState make_product(const FockState& mode1, const FockState& mode2);

/// Product state; dims of 0 mean max(30, recommended_dim(spec)).
TwoModeState make_two_mode(const FamilySpec& spec1, const FamilySpec& spec2, std::size_t dim1 = 0,
                           std::size_t dim2 = 0, const FamilyLimits& limits = {});

/// Complex-Gaussian amplitudes on the bottom two thirds of each mode.
TwoModeState random_two_mode_state(Rng& rng, std::size_t dim1, std::size_t dim2);

/// Schwinger-representation moments with a~ = a1 a2^dagger = Jx - i Jy,
/// Jz = (N1 - N2)/2.
///
/// a~ and a~^dagger are applied on a grid one level larger in each mode, so
/// <a~^dagger a~> = <N1 (N2 + 1)> and <a~ a~^dagger> = <(N1 + 1) N2> hold for
/// the stored vector without truncation loss.
struct SchwingerMoments {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
  double var_jx = 0.0;
  double var_jy = 0.0;
  double mean_n1 = 0.0;
  double var_n1 = 0.0;
  double mean_n2 = 0.0;
  double mean_n1n2 = 0.0;
  Complex mean_atilde{};
  double var_atilde_sym = 0.0;  ///< (1/2)[(da~)^2 + (da~^dagger)^2]
  double mean_atilde_dag_atilde = 0.0;
  double mean_atilde_atilde_dag = 0.0;
  double tail1 = 0.0;  ///< marginal weight on the top level of mode 1
  double tail2 = 0.0;
};

SchwingerMoments schwinger_moments(const TwoModeState& state, const MomentOptions& options = {});

/// (dN1)^2 |da~|^2 >= |<a~>|^2 / 4
RelationReport check_two_mode_heis(const SchwingerMoments& sm);

/// ((dN1)^2 + 1/4) |da~|^2 >= <(N1 + 1)(N2 + 1)>/8 - 1/8
RelationReport check_two_mode_unc3(const SchwingerMoments& sm);

/// Same left-hand side with <Jx^2 + Jy^2>/4 = <N1 N2>/4 + <N1 + N2>/8 on the right.
RelationReport check_two_mode_unc3_strong(const SchwingerMoments& sm);

struct JxJyAudit {
  double lhs = 0.0;         ///< <Jx^2 + Jy^2>, operational
  double rhs = 0.0;         ///< <(N1 + 1)(N2 + 1)>/2 - 1/2
  double gap = 0.0;         ///< lhs - rhs
  double half_n1n2 = 0.0;   ///< <N1 N2>/2
};

JxJyAudit audit_jxjy_identity(const TwoModeState& state, const MomentOptions& options = {});

struct ReductionResult {
  /// N -> N1, a -> a~/sqrt(<N2>); mean_n, var_n, mean_a, var_a are filled.
  MomentSummary mapped;
  MomentSummary single;
  /// max over (<a>, var_a, var_n) of |mapped - single| / max(|single|, 1)
  double deviation = 0.0;
  RelationReport unc;
  RelationReport unc3;
};

/// spec1 (x) coherent(alpha2). Requires <N1> <= 0.1 alpha2^2 (Domain error otherwise).
ReductionResult reduction_check(const FamilySpec& spec1, double alpha2, std::size_t dim1 = 0,
                                std::size_t dim2 = 0, const FamilyLimits& limits = {});

}  // namespace fockbound
