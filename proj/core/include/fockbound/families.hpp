#pragma once

#include <cstddef>

#include "fockbound/fock_state.hpp"

namespace fockbound {

/// Validation ranges for the trial-state constructors. The defaults keep
/// default_dim()-sized boxes valid; callers that choose their own dim can
/// widen them.
struct FamilyLimits {
  double max_squeeze = 2.0;
  double max_alpha = 12.0;
  /// Largest top-level weight accepted for states with infinite support.
  double tail_tolerance = 1e-10;

  static FamilyLimits unbounded();
};

/// Squeezed-coherent parameters: alpha = alpha_abs e^{i theta}, zeta = s e^{i vartheta}.
/// Angles are stored reduced to [0, 2 pi).
struct SqueezeParams {
  double alpha_abs = 0.0;
  double theta = 0.0;
  double s = 0.0;
  double vartheta = 0.0;

  static SqueezeParams make(double alpha_abs, double theta, double s, double vartheta);
  Complex alpha() const;
};

/// Closed-form (<N>, (da)^2, (dN)^2) triple.
struct MomentTriple {
  double mean_n = 0.0;
  double var_a = 0.0;
  double var_n = 0.0;
};

FockState make_fock(std::size_t n, std::size_t dim);

FockState make_coherent(Complex alpha, std::size_t dim, const FamilyLimits& limits = {});

/// c_n proportional to exp[-(n - n0)^2 / (4 delta^2)].
FockState make_gaussian_number(double n0, double delta, std::size_t dim,
                               const FamilyLimits& limits = {});

/// D(alpha) S(zeta)|0> with S(zeta)^dagger a S(zeta) = a cosh s - a^dagger e^{i vartheta} sinh s.
///
/// Built from the Fock expansion through its three-term recurrence
/// cosh(s) sqrt(n+1) c_{n+1} = gamma c_n - e^{i vartheta} sinh(s) sqrt(n) c_{n-1},
/// gamma = alpha cosh s + alpha^* e^{i vartheta} sinh s, which is the Hermite
/// recurrence of the closed form.
FockState make_squeezed_coherent(const SqueezeParams& p, std::size_t dim,
                                 const FamilyLimits& limits = {});

MomentTriple squeezed_moments(const SqueezeParams& p);

/// Smallest (dN)^2 reachable by squeezed coherent states at given (da)^2 and <N>:
/// (<N> - va)(sqrt(1 + va) - sqrt(va))^2 + 2 va (1 + va). Domain: 0 <= va <= <N>.
double scs_min_varN(double var_a, double mean_n);

/// D(alpha)|n>, from the Laguerre form of the displacement matrix elements.
FockState make_displaced_fock(Complex alpha, std::size_t n, std::size_t dim,
                              const FamilyLimits& limits = {});

MomentTriple displaced_fock_moments(Complex alpha, std::size_t n);

/// (2 va + 1)(<N> - va) for integer va; non-integer va is rejected.
double displaced_fock_varN(double var_a, double mean_n);

/// (a^dagger)^m |alpha>, normalized numerically.
FockState make_photon_added(Complex alpha, std::size_t m, std::size_t dim,
                            const FamilyLimits& limits = {});

/// Superposition of coherent states on the circle |alpha0 e^{i phi}| with a
/// Gaussian weight of width 1/u in phi. Fock overlap:
/// c_n ~ alpha0^n / sqrt(n!) exp[-(n - delta)^2 / (2 u^2)], delta = alpha0^2.
FockState make_circle_superposition(double alpha0, double u, std::size_t dim,
                                    const FamilyLimits& limits = {});

/// Eigenstate of a^dagger a + d a with eigenvalue k (support on |0>..|k>).
FockState make_lowering_eigenstate(double d, std::size_t k, std::size_t dim);

/// || (a^dagger a + d a) psi - k psi || evaluated inside the box.
double lowering_eigen_residual(const FockState& state, double d, std::size_t k);

}  // namespace fockbound
