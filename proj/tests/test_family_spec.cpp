#include <string>
#include <variant>

#include <gtest/gtest.h>

#include "fockbound/error.hpp"
#include "fockbound/family_spec.hpp"
#include "fockbound/moments.hpp"

using namespace fockbound;

namespace {

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_family_spec(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return 0;
}

}  // namespace

TEST(FamilySpec, ParsesEveryFamily) {
  EXPECT_EQ(std::get<family::Fock>(parse_family_spec("fock(25)")).n, 25u);
  EXPECT_EQ(std::get<family::Coherent>(parse_family_spec("coherent(5)")).alpha, Complex(5.0));
  EXPECT_EQ(std::get<family::Coherent>(parse_family_spec(" coherent ( 1.5 , -2 ) ")).alpha,
            Complex(1.5, -2.0));
  const auto g = std::get<family::GaussianNumber>(parse_family_spec("gauss(25,2)"));
  EXPECT_EQ(g.n0, 25.0);
  EXPECT_EQ(g.delta, 2.0);
  const auto sq = std::get<family::SqueezedCoherent>(parse_family_spec("sqcoh(2,0,0.5,1e-1)"));
  EXPECT_EQ(sq.params.alpha_abs, 2.0);
  EXPECT_EQ(sq.params.s, 0.5);
  EXPECT_EQ(sq.params.vartheta, 0.1);
  EXPECT_EQ(std::get<family::DisplacedFock>(parse_family_spec("dfock(2,3)")).n, 3u);
  EXPECT_EQ(std::get<family::DisplacedFock>(parse_family_spec("dfock(2,1,3)")).alpha, Complex(2.0, 1.0));
  EXPECT_EQ(std::get<family::PhotonAdded>(parse_family_spec("padd(5,+4)")).m, 4u);
  EXPECT_EQ(std::get<family::CircleSuperposition>(parse_family_spec("circle(5,3)")).u, 3.0);
  EXPECT_EQ(std::get<family::LoweringEigenstate>(parse_family_spec("loweig(-1,5)")).d, -1.0);
}

TEST(FamilySpec, ErrorPositions) {
  EXPECT_EQ(parse_error_position(""), 0u);
  EXPECT_EQ(parse_error_position("fock"), 4u);
  EXPECT_EQ(parse_error_position("fock(2.5)"), 5u);
  EXPECT_EQ(parse_error_position("fock(-1)"), 5u);
  EXPECT_EQ(parse_error_position("coherent(1,x)"), 11u);
  EXPECT_EQ(parse_error_position("gauss(25,0)"), 9u);
  EXPECT_EQ(parse_error_position("gauss(25)"), 0u);
  EXPECT_EQ(parse_error_position("squid(1)"), 0u);
  EXPECT_EQ(parse_error_position("fock(1) x"), 8u);
  EXPECT_EQ(parse_error_position("fock(1"), 6u);
  EXPECT_EQ(parse_error_position("circle(0,1)"), 7u);
  EXPECT_EQ(parse_error_position("loweig(0,1)"), 7u);
  EXPECT_EQ(parse_error_position("coherent(inf)"), 9u);
}

TEST(FamilySpec, CanonicalTextRoundTrips) {
  for (const char* text :
       {"fock(25)", "coherent(5)", "coherent(1.5,-2)", "gauss(25,2)", "sqcoh(2,0.1,0.5,3)",
        "dfock(2,3)", "dfock(0.3,0.1,3)", "padd(5,4)", "circle(5,3)", "loweig(1,5)"}) {
    const FamilySpec spec = parse_family_spec(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(to_string(parse_family_spec(to_string(spec))), to_string(spec));
  }
  const FamilySpec odd = parse_family_spec("sqcoh(1, 7, 0.3, -1)");
  EXPECT_EQ(to_string(parse_family_spec(to_string(odd))), to_string(odd));
  const FamilySpec tiny = parse_family_spec("gauss(0.1, 0.30000000000000004)");
  EXPECT_EQ(std::get<family::GaussianNumber>(parse_family_spec(to_string(tiny))).delta,
            0.30000000000000004);
}

TEST(FamilySpec, RecommendedDimKeepsTailsNegligible) {
  for (const char* text : {"fock(25)", "coherent(5)", "coherent(12)", "gauss(100,10)", "sqcoh(0,0,1.5,0)",
                           "sqcoh(5,0.7,1.5,2)", "dfock(5,10)", "padd(5,5)", "circle(5,3)", "loweig(1,5)"}) {
    const FamilySpec spec = parse_family_spec(text);
    const std::size_t dim = recommended_dim(spec);
    EXPECT_GE(dim, default_dim(0.0)) << text;
    const FockState s = make_family_state(spec, dim);
    EXPECT_LT(tail_mass(s, 2), 1e-10) << text;
    EXPECT_NO_THROW(moments(s)) << text;
  }
}
