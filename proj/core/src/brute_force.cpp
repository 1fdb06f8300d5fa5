#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <ceres/ceres.h>
#include <glog/logging.h>
#include <fmt/format.h>

#include "fockbound/boundary_search.hpp"
#include "fockbound/error.hpp"
#include "fockbound/random_states.hpp"

namespace fockbound {
namespace {

struct Constrained {
  double var_n = 0.0;
  double g_mean = 0.0;
  double g_var_a = 0.0;
};

// amplitudes c = y^2 / ||y^2||; returns moments and gradients in c
struct Evaluation {
  Constrained value;
  std::vector<double> grad_f, grad_mean, grad_var_a;
};

class RealAmplitudeModel {
 public:
  RealAmplitudeModel(std::size_t dim, double mean_n, double var_a)
      : dim_(dim), mean_n_(mean_n), var_a_(var_a) {}

  std::size_t dim() const { return dim_; }

  Evaluation evaluate(const double* y, std::vector<double>& c) const {
    c.assign(dim_, 0.0);
    double r = 0.0;
    for (std::size_t n = 0; n < dim_; ++n) {
      c[n] = y[n] * y[n];
      r += c[n] * c[n];
    }
    r = std::sqrt(r);
    for (double& x : c) x /= r;

    double mn = 0.0, mn2 = 0.0, a = 0.0;
    for (std::size_t n = 0; n < dim_; ++n) {
      const double nn = static_cast<double>(n);
      mn += nn * c[n] * c[n];
      mn2 += nn * nn * c[n] * c[n];
      if (n + 1 < dim_) a += std::sqrt(nn + 1.0) * c[n] * c[n + 1];
    }
    Evaluation e;
    e.value = Constrained{mn2 - mn * mn, mn - mean_n_, mn - a * a - var_a_};
    e.grad_f.resize(dim_);
    e.grad_mean.resize(dim_);
    e.grad_var_a.resize(dim_);
    for (std::size_t n = 0; n < dim_; ++n) {
      const double nn = static_cast<double>(n);
      const double dmn = 2.0 * nn * c[n];
      const double dmn2 = 2.0 * nn * nn * c[n];
      double da = 0.0;
      if (n + 1 < dim_) da += std::sqrt(nn + 1.0) * c[n + 1];
      if (n > 0) da += std::sqrt(nn) * c[n - 1];
      e.grad_f[n] = dmn2 - 2.0 * mn * dmn;
      e.grad_mean[n] = dmn;
      e.grad_var_a[n] = dmn - 2.0 * a * da;
    }
    // chain rule through c = q/||q||, q = y^2
    for (auto* g : {&e.grad_f, &e.grad_mean, &e.grad_var_a}) {
      double proj = 0.0;
      for (std::size_t n = 0; n < dim_; ++n) proj += c[n] * (*g)[n];
      for (std::size_t n = 0; n < dim_; ++n) (*g)[n] = 2.0 * y[n] * ((*g)[n] - c[n] * proj) / r;
    }
    return e;
  }

 private:
  std::size_t dim_;
  double mean_n_;
  double var_a_;
};

class AugmentedLagrangian final : public ceres::FirstOrderFunction {
 public:
  AugmentedLagrangian(const RealAmplitudeModel& model, double mu_mean, double mu_var, double rho)
      : model_(model), mu_mean_(mu_mean), mu_var_(mu_var), rho_(rho) {}

  bool Evaluate(const double* y, double* cost, double* gradient) const override {
    std::vector<double> c;
    const Evaluation e = model_.evaluate(y, c);
    const auto& v = e.value;
    *cost = v.var_n + mu_mean_ * v.g_mean + mu_var_ * v.g_var_a +
            0.5 * rho_ * (v.g_mean * v.g_mean + v.g_var_a * v.g_var_a);
    if (gradient != nullptr) {
      const double wm = mu_mean_ + rho_ * v.g_mean;
      const double wv = mu_var_ + rho_ * v.g_var_a;
      for (std::size_t n = 0; n < model_.dim(); ++n) {
        gradient[n] = e.grad_f[n] + wm * e.grad_mean[n] + wv * e.grad_var_a[n];
      }
    }
    return std::isfinite(*cost);
  }

  int NumParameters() const override { return static_cast<int>(model_.dim()); }

 private:
  const RealAmplitudeModel& model_;
  double mu_mean_;
  double mu_var_;
  double rho_;
};

struct RestartResult {
  Constrained value;
  bool feasible = false;
};

// drops ceres line-search warnings when glog is at its default level
void quiet_solver_logging() {
  static const bool once = [] {
    if (FLAGS_minloglevel == google::GLOG_INFO) FLAGS_minloglevel = google::GLOG_ERROR;
    return true;
  }();
  (void)once;
}

RestartResult run_restart(const RealAmplitudeModel& model, std::vector<double> y,
                          double tolerance) {
  ceres::GradientProblemSolver::Options opts;
  opts.line_search_direction_type = ceres::BFGS;
  opts.max_num_iterations = 2000;
  opts.function_tolerance = 1e-16;
  opts.gradient_tolerance = 1e-14;
  opts.parameter_tolerance = 1e-16;
  opts.logging_type = ceres::SILENT;

  double mu_mean = 0.0, mu_var = 0.0, rho = 10.0;
  double prev_violation = std::numeric_limits<double>::infinity();
  std::vector<double> c;
  Constrained v;
  for (int outer = 0; outer < 40; ++outer) {
    ceres::GradientProblem problem(new AugmentedLagrangian(model, mu_mean, mu_var, rho));
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(opts, problem, y.data(), &summary);
    v = model.evaluate(y.data(), c).value;
    const double violation = std::max(std::abs(v.g_mean), std::abs(v.g_var_a));
    if (violation < tolerance) return RestartResult{v, true};
    mu_mean += rho * v.g_mean;
    mu_var += rho * v.g_var_a;
    if (violation > 0.25 * prev_violation) rho = std::min(rho * 10.0, 1e10);
    prev_violation = violation;
  }
  return RestartResult{v, false};
}

}  // namespace

BoundaryPoint brute_force_min_varN(double mean_n, double var_a, std::size_t dim_small,
                                   const BruteForceOptions& options) {
  if (dim_small < 2 || dim_small > 25) {
    throw Error(ErrorCode::Domain, fmt::format("dim_small must be in [2, 25], got {}", dim_small));
  }
  if (!std::isfinite(mean_n) || !std::isfinite(var_a) || mean_n < 0.0 || var_a < 0.0 ||
      var_a > mean_n) {
    throw Error(ErrorCode::Domain,
                fmt::format("infeasible constraints <N> = {}, (da)^2 = {}", mean_n, var_a));
  }
  if (mean_n > static_cast<double>(dim_small - 1)) {
    throw Error(ErrorCode::Domain,
                fmt::format("<N> = {} does not fit in dim_small = {}", mean_n, dim_small));
  }
  if (var_a == 0.0) return BoundaryPoint{0.0, mean_n, mean_n, PointSource::BRUTE_FORCE};
  if (var_a == mean_n && mean_n == std::round(mean_n)) {
    return BoundaryPoint{var_a, 0.0, mean_n, PointSource::BRUTE_FORCE};
  }

  quiet_solver_logging();
  const RealAmplitudeModel model(dim_small, mean_n, var_a);
  Rng rng(options.seed);
  std::uniform_real_distribution<double> unif(0.2, 1.0);
  const double width = 2.0 * (mean_n + 1.0);

  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(options.restarts, 1); ++r) {
    std::vector<double> y(dim_small);
    for (std::size_t n = 0; n < dim_small; ++n) {
      const double dn = static_cast<double>(n) - mean_n;
      y[n] = unif(rng) * std::exp(-dn * dn / (4.0 * width));
    }
    const RestartResult res = run_restart(model, std::move(y), options.constraint_tolerance);
    if (res.feasible) best = std::min(best, res.value.var_n);
  }
  if (!std::isfinite(best)) {
    throw Error(ErrorCode::NonConvergence,
                fmt::format("no restart met the constraints <N> = {}, (da)^2 = {}", mean_n, var_a));
  }
  return BoundaryPoint{var_a, best, mean_n, PointSource::BRUTE_FORCE};
}

}  // namespace fockbound
