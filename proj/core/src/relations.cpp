#include "fockbound/relations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "fockbound/error.hpp"

namespace fockbound {
namespace {

constexpr std::array<std::pair<RelationId, std::string_view>, 9> kRelationNames{{
    {RelationId::HEIS_NX, "HEIS_NX"},
    {RelationId::HEIS_NP, "HEIS_NP"},
    {RelationId::UNC, "UNC"},
    {RelationId::UNC3, "UNC3"},
    {RelationId::UNC4, "UNC4"},
    {RelationId::LEVY_LEBLOND, "LEVY_LEBLOND"},
    {RelationId::TWO_MODE_HEIS, "TWO_MODE_HEIS"},
    {RelationId::TWO_MODE_UNC3, "TWO_MODE_UNC3"},
    {RelationId::TWO_MODE_UNC3_STRONG, "TWO_MODE_UNC3_STRONG"},
}};

constexpr double kGolden = 0.6180339887498949;

}  // namespace

std::string_view to_string(RelationId id) noexcept {
  for (const auto& [key, name] : kRelationNames) {
    if (key == id) return name;
  }
  return "UNKNOWN";
}

RelationId parse_relation_id(std::string_view name) {
  for (const auto& [key, text] : kRelationNames) {
    if (text == name) return key;
  }
  throw ParseError(fmt::format("unknown relation id '{}'", name), 0);
}

RelationReport RelationReport::make(RelationId id, double lhs, double rhs, double tol) {
  const double slack = lhs - rhs;
  return RelationReport{id, lhs, rhs, slack, slack >= -tol};
}

std::string to_csv_row(const RelationReport& r) {
  return fmt::format("{},{:.17g},{:.17g},{:.17g},{}", to_string(r.id), r.lhs, r.rhs, r.slack,
                     r.satisfied ? "true" : "false");
}

std::pair<RelationReport, RelationReport> check_heisenberg_pair(const MomentSummary& m,
                                                                 const QuadratureCovariance& q0) {
  return {
      RelationReport::make(RelationId::HEIS_NX, m.var_n * q0.var_x, 0.25 * q0.mean_p * q0.mean_p),
      RelationReport::make(RelationId::HEIS_NP, m.var_n * q0.var_p, 0.25 * q0.mean_x * q0.mean_x),
  };
}

RelationReport check_unc(const MomentSummary& m) {
  return RelationReport::make(RelationId::UNC, m.var_n * (m.var_a + 0.5), 0.25 * std::norm(m.mean_a));
}

RelationReport check_unc3(const MomentSummary& m) {
  return RelationReport::make(RelationId::UNC3, (m.var_n + 0.25) * (m.var_a + 0.5),
                              0.25 * m.mean_n + 0.125);
}

RelationReport check_unc4(const MomentSummary& m) {
  return RelationReport::make(RelationId::UNC4, (m.var_n + 0.25) * (m.var_a + 0.5),
                              0.25 * m.mean_n + 0.125 + 0.25 * std::norm(m.anticomm));
}

RelationReport check_levy_leblond(double var_n, double var_e, double p0) {
  return RelationReport::make(RelationId::LEVY_LEBLOND, var_n * var_e, 0.25 * (1.0 - var_e - p0));
}

double boundary_varN(double mean_n, double var_a) {
  return std::max((0.25 * mean_n + 0.125) / (var_a + 0.5) - 0.25, 0.0);
}

double relative_slack(const MomentSummary& m) {
  const RelationReport r = check_unc3(m);
  if (!(r.rhs > 0.0)) throw Error(ErrorCode::Internal, "UNC3 right-hand side is not positive");
  return r.slack / r.rhs;
}

std::string_view to_string(PointSource source) noexcept {
  switch (source) {
    case PointSource::CURVE: return "CURVE";
    case PointSource::FAMILY: return "FAMILY";
    case PointSource::VARIATIONAL: return "VARIATIONAL";
    case PointSource::BRUTE_FORCE: return "BRUTE_FORCE";
  }
  return "UNKNOWN";
}

BoundaryPoint boundary_point(const MomentSummary& m, PointSource source) {
  return BoundaryPoint{m.var_a, m.var_n, m.mean_n, source};
}

double distance_to_boundary(const BoundaryPoint& p) {
  if (!std::isfinite(p.var_a) || !std::isfinite(p.var_n) || !std::isfinite(p.mean_n)) {
    throw Error(ErrorCode::InvalidArgument, "boundary point has non-finite coordinates");
  }
  const auto dist = [&](double v) {
    return std::hypot(v - p.var_a, boundary_varN(p.mean_n, v) - p.var_n);
  };
  const double va = std::max(p.var_a, 0.0);
  const double d0 = dist(va);
  if (d0 == 0.0) return 0.0;

  // grid bracket, then golden section
  const double lo = std::max(0.0, va - d0);
  const double hi = va + d0;
  constexpr int kScan = 2000;
  const double step = (hi - lo) / kScan;
  int best = 0;
  double best_d = dist(lo);
  for (int i = 1; i <= kScan; ++i) {
    const double d = dist(lo + step * i);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  double a = lo + step * std::max(best - 1, 0);
  double b = lo + step * std::min(best + 1, kScan);
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = dist(x1);
  double f2 = dist(x2);
  int iter = 0;
  while (b - a > 1e-10) {
    if (++iter > 500) {
      throw Error(ErrorCode::NonConvergence,
                  fmt::format("golden-section search stalled: bracket [{:.17g}, {:.17g}]", a, b));
    }
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = dist(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = dist(x2);
    }
  }
  return std::min({best_d, f1, f2, dist(0.5 * (a + b))});
}

}  // namespace fockbound
