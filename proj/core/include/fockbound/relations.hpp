#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "fockbound/moments.hpp"

namespace fockbound {

enum class RelationId {
  HEIS_NX,
  HEIS_NP,
  UNC,
  UNC3,
  UNC4,
  LEVY_LEBLOND,
  TWO_MODE_HEIS,
  TWO_MODE_UNC3,
  /// TWO_MODE_UNC3 with the right-hand side built from the operator identity
  /// <Jx^2 + Jy^2> = <N1 N2> + <N1 + N2>/2 instead of the looser one.
  TWO_MODE_UNC3_STRONG,
};

std::string_view to_string(RelationId id) noexcept;

/// Throws ParseError for unknown names.
RelationId parse_relation_id(std::string_view name);

inline constexpr double kSlackTolerance = 1e-9;

struct RelationReport {
  RelationId id = RelationId::UNC3;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = true;

  static RelationReport make(RelationId id, double lhs, double rhs,
                             double tol = kSlackTolerance);
};

inline constexpr std::string_view kRelationCsvHeader = "relation_id,lhs,rhs,slack,satisfied";

/// One CSV row matching kRelationCsvHeader, numbers at 17 significant digits.
std::string to_csv_row(const RelationReport& report);

/// (dN)^2 (dp)^2 >= <x>^2/4 and (dN)^2 (dx)^2 >= <p>^2/4 at beta = 0.
std::pair<RelationReport, RelationReport> check_heisenberg_pair(const MomentSummary& m,
                                                                 const QuadratureCovariance& q0);

/// (dN)^2 ((da)^2 + 1/2) >= |<a>|^2 / 4
RelationReport check_unc(const MomentSummary& m);

/// ((dN)^2 + 1/4)((da)^2 + 1/2) >= <N>/4 + 1/8
RelationReport check_unc3(const MomentSummary& m);

/// UNC3 with |<{dN, da}_+>|^2 / 4 added to the right-hand side.
RelationReport check_unc4(const MomentSummary& m);

/// (dN)^2 (dE)^2 >= [1 - (dE)^2 - p0] / 4
RelationReport check_levy_leblond(double var_n, double var_e, double p0);

/// UNC3 saturation curve solved for (dN)^2, clamped at 0.
double boundary_varN(double mean_n, double var_a);

/// (lhs - rhs)/rhs for UNC3.
double relative_slack(const MomentSummary& m);

enum class PointSource { CURVE, FAMILY, VARIATIONAL, BRUTE_FORCE };

std::string_view to_string(PointSource source) noexcept;

struct BoundaryPoint {
  double var_a = 0.0;
  double var_n = 0.0;
  double mean_n = 0.0;
  PointSource source = PointSource::FAMILY;
};

BoundaryPoint boundary_point(const MomentSummary& m, PointSource source = PointSource::FAMILY);

/// Euclidean distance in the (var_a, var_n) plane to the curve
/// v -> (v, boundary_varN(mean_n, v)), v >= 0.
double distance_to_boundary(const BoundaryPoint& p);

}  // namespace fockbound
