#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fockbound/error.hpp"
#include "fockbound/families.hpp"
#include "fockbound/moments.hpp"
#include "fockbound/random_states.hpp"
#include "fockbound/relations.hpp"

using namespace fockbound;

namespace {

MomentSummary coherent5() { return moments(make_coherent(5.0, 200)); }

// brute-force scan over v with a fine uniform grid
double scanned_distance(const BoundaryPoint& p) {
  const double hi = p.var_a + p.var_n + p.mean_n + 1.0;
  const int steps = 2'000'000;
  double best = INFINITY;
  for (int i = 0; i <= steps; ++i) {
    const double v = hi * i / steps;
    best = std::min(best, std::hypot(v - p.var_a, boundary_varN(p.mean_n, v) - p.var_n));
  }
  return best;
}

}  // namespace

TEST(Heisenberg, Examples) {
  const FockState vac = make_fock(0, 4);
  const auto [nx0, np0] = check_heisenberg_pair(moments(vac), quadrature_covariance(vac, 0.0));
  EXPECT_EQ(nx0.lhs, 0.0);
  EXPECT_EQ(np0.rhs, 0.0);
  EXPECT_TRUE(nx0.satisfied && np0.satisfied);

  const FockState c = make_coherent(5.0, 200);
  const auto [nx, np] = check_heisenberg_pair(moments(c), quadrature_covariance(c, 0.0));
  EXPECT_EQ(nx.id, RelationId::HEIS_NX);
  EXPECT_EQ(np.id, RelationId::HEIS_NP);
  EXPECT_NEAR(np.rhs, 12.5, 1e-9);
  EXPECT_NEAR(np.lhs, 12.5, 1e-8);
  EXPECT_NEAR(np.slack, 0.0, 1e-8);
  EXPECT_TRUE(nx.satisfied);

  const FockState f = make_fock(25, 40);
  const auto [fx, fp] = check_heisenberg_pair(moments(f), quadrature_covariance(f, 0.0));
  EXPECT_EQ(fx.lhs, 0.0);
  EXPECT_NEAR(fx.rhs, 0.0, 1e-30);
  EXPECT_EQ(fp.lhs, 0.0);
}

TEST(Unc, Examples) {
  const RelationReport c = check_unc(coherent5());
  EXPECT_NEAR(c.lhs, 12.5, 1e-8);
  EXPECT_NEAR(c.rhs, 6.25, 1e-9);
  const RelationReport f = check_unc(moments(make_fock(7, 20)));
  EXPECT_EQ(f.lhs, 0.0);
  EXPECT_EQ(f.rhs, 0.0);
  EXPECT_TRUE(check_unc(moments(make_fock(0, 3))).satisfied);
}

TEST(Unc3, Examples) {
  const RelationReport vac = check_unc3(moments(make_fock(0, 3)));
  EXPECT_EQ(vac.lhs, 0.125);
  EXPECT_EQ(vac.rhs, 0.125);
  const RelationReport f = check_unc3(moments(make_fock(25, 200)));
  EXPECT_EQ(f.lhs, 6.375);
  EXPECT_EQ(f.rhs, 6.375);
  EXPECT_EQ(f.slack, 0.0);
  const RelationReport c = check_unc3(coherent5());
  EXPECT_NEAR(c.lhs, 12.625, 1e-8);
  EXPECT_NEAR(c.rhs, 6.375, 1e-9);
  EXPECT_NEAR(c.slack, 6.25, 1e-8);
}

TEST(Unc4, Examples) {
  const RelationReport c = check_unc4(coherent5());
  EXPECT_NEAR(c.rhs, 12.625, 1e-8);
  EXPECT_NEAR(c.slack, 0.0, 1e-8);
  const MomentSummary f = moments(make_fock(6, 20));
  EXPECT_EQ(f.anticomm, Complex(0.0));
  EXPECT_EQ(check_unc4(f).slack, check_unc3(f).slack);
  EXPECT_EQ(check_unc4(f).slack, 0.0);
}

TEST(LevyLeblond, Examples) {
  const EOperatorStats vac = e_operator_stats(make_fock(0, 3));
  const RelationReport v = check_levy_leblond(0.0, vac.var_e, vac.p0);
  EXPECT_EQ(v.lhs, 0.0);
  EXPECT_EQ(v.rhs, 0.0);
  const EOperatorStats fe = e_operator_stats(make_fock(4, 10));
  EXPECT_EQ(check_levy_leblond(0.0, fe.var_e, fe.p0).rhs, 0.0);

  const FockState g = make_gaussian_number(25.0, 2.0, 200);
  const MomentSummary m = moments(g);
  const EOperatorStats e = e_operator_stats(g);
  const RelationReport r = check_levy_leblond(m.var_n, e.var_e, e.p0);
  EXPECT_TRUE(r.satisfied);
  EXPECT_GT(r.slack, 0.0);
  EXPECT_LT(r.slack, 0.1 * r.rhs);
  EXPECT_GT(m.var_n * e.var_e, 0.25 * (1.0 - e.var_e) - 1e-6);
}

TEST(LevyLeblond, BoundFailsForTwoLevelStates) {
  // cos t|0> + sin t|1>: lhs = c^2 s^6, rhs = c^2 s^2 / 4
  for (double t : {0.2, 0.5, 0.7}) {
    const double c = std::cos(t), s = std::sin(t);
    const FockState st = make_state(std::vector<Complex>{c, s, 0.0});
    const MomentSummary m = moments(st);
    const EOperatorStats e = e_operator_stats(st);
    const RelationReport r = check_levy_leblond(m.var_n, e.var_e, e.p0);
    EXPECT_NEAR(r.lhs, c * c * std::pow(s, 6), 1e-14);
    EXPECT_NEAR(r.rhs, c * c * s * s / 4, 1e-14);
    EXPECT_FALSE(r.satisfied);
  }
}

TEST(BoundaryVarN, Examples) {
  EXPECT_EQ(boundary_varN(25.0, 0.0), 12.5);
  EXPECT_EQ(boundary_varN(25.0, 25.0), 0.0);
  EXPECT_EQ(boundary_varN(0.0, 0.0), 0.0);
  EXPECT_EQ(boundary_varN(25.0, 30.0), 0.0);
}

TEST(BoundaryVarN, StrictlyDecreasingToTheFockPoint) {
  for (double n : {0.5, 1.0, 7.0, 25.0, 100.0}) {
    double prev = boundary_varN(n, 0.0);
    for (int i = 1; i <= 400; ++i) {
      const double v = n * i / 400;
      const double b = boundary_varN(n, v);
      EXPECT_LT(b, prev);
      prev = b;
    }
    EXPECT_NEAR(boundary_varN(n, n), 0.0, 1e-14);
  }
}

TEST(BoundaryVarN, SqueezedCurveLiesAbove) {
  for (int n = 1; n <= 100; ++n) {
    const double mean = n;
    for (int i = 0; i <= 50; ++i) {
      const double v = mean * i / 50;
      EXPECT_GE(scs_min_varN(v, mean), boundary_varN(mean, v) - 1e-12);
    }
    EXPECT_GT(scs_min_varN(mean, mean) - boundary_varN(mean, mean),
              scs_min_varN(0.0, mean) - boundary_varN(mean, 0.0));
  }
}

TEST(RelativeSlack, Examples) {
  EXPECT_EQ(relative_slack(moments(make_fock(25, 200))), 0.0);
  EXPECT_NEAR(relative_slack(coherent5()), 6.25 / 6.375, 1e-9);
  MomentSummary bad;
  bad.mean_n = -1.0;
  EXPECT_THROW(relative_slack(bad), Error);
}

TEST(Distance, Examples) {
  EXPECT_NEAR(distance_to_boundary(BoundaryPoint{25.0, 0.0, 25.0, PointSource::FAMILY}), 0.0, 1e-9);
  const BoundaryPoint c{0.0, 25.0, 25.0, PointSource::FAMILY};
  const double d = distance_to_boundary(c);
  // the curve falls away from the point for v > 0, so the nearest point is Z itself
  EXPECT_NEAR(d, 12.5, 1e-9);
  EXPECT_NEAR(d, scanned_distance(c), 1e-6);
}

TEST(Distance, MatchesGridScan) {
  Rng rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const double mean = 0.5 + 40.0 * u(rng);
    const BoundaryPoint p{mean * u(rng), (mean + 5.0) * u(rng), mean, PointSource::FAMILY};
    EXPECT_NEAR(distance_to_boundary(p), scanned_distance(p), 2e-6) << mean << " " << p.var_a << " " << p.var_n;
  }
}

TEST(Distance, PointsOnTheCurveHaveZeroDistance) {
  for (double v : {0.0, 0.3, 4.0, 20.0}) {
    const BoundaryPoint p{v, boundary_varN(25.0, v), 25.0, PointSource::CURVE};
    EXPECT_LT(distance_to_boundary(p), 1e-9);
  }
}

TEST(RelationProperties, RandomStates) {
  Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const FockState s = random_state(rng, 2, 60);
    const MomentSummary m = moments(s);
    const RelationReport r3 = check_unc3(m), r4 = check_unc4(m);
    EXPECT_TRUE(check_unc(m).satisfied);
    EXPECT_TRUE(r3.satisfied);
    EXPECT_TRUE(r4.satisfied);
    EXPECT_LE(r4.slack, r3.slack + 1e-15);
    if (m.anticomm == Complex(0.0)) {
      EXPECT_EQ(r4.slack, r3.slack);
    }
    EXPECT_GE(m.var_n - boundary_varN(m.mean_n, m.var_a), -1e-9);
  }
}

TEST(RelationIds, RoundTripAndCsv) {
  for (RelationId id : {RelationId::HEIS_NX, RelationId::HEIS_NP, RelationId::UNC, RelationId::UNC3,
                        RelationId::UNC4, RelationId::LEVY_LEBLOND, RelationId::TWO_MODE_HEIS,
                        RelationId::TWO_MODE_UNC3, RelationId::TWO_MODE_UNC3_STRONG}) {
    EXPECT_EQ(parse_relation_id(to_string(id)), id);
  }
  EXPECT_THROW(parse_relation_id("UNC5"), ParseError);
  EXPECT_EQ(to_csv_row(RelationReport::make(RelationId::UNC3, 0.125, 0.125)), "UNC3,0.125,0.125,0,true");
  EXPECT_EQ(to_csv_row(RelationReport::make(RelationId::UNC, 0.1, 0.2)),
            "UNC,0.10000000000000001,0.20000000000000001,-0.10000000000000001,false");
  EXPECT_TRUE(RelationReport::make(RelationId::UNC, 1.0, 1.0 + 1e-10).satisfied);
  EXPECT_FALSE(RelationReport::make(RelationId::UNC, 1.0, 1.0 + 2e-9).satisfied);
}
