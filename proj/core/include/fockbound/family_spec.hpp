#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "fockbound/families.hpp"

namespace fockbound {

namespace family {
struct Fock { std::size_t n = 0; };
struct Coherent { Complex alpha{}; };
struct GaussianNumber { double n0 = 0.0; double delta = 1.0; };
struct SqueezedCoherent { SqueezeParams params; };
struct DisplacedFock { Complex alpha{}; std::size_t n = 0; };
struct PhotonAdded { Complex alpha{}; std::size_t m = 0; };
struct CircleSuperposition { double alpha0 = 1.0; double u = 1.0; };
struct LoweringEigenstate { double d = 1.0; std::size_t k = 0; };
}  // namespace family

/// One trial-state family with its parameters.
///
/// Textual form (whitespace allowed between tokens):
///   fock(n)  coherent(re[,im])  gauss(N0,delta)  sqcoh(|a|,theta,s,vartheta)
///   dfock(re[,im],n)  padd(re[,im],m)  circle(alpha0,u)  loweig(d,k)
using FamilySpec =
    std::variant<family::Fock, family::Coherent, family::GaussianNumber, family::SqueezedCoherent,
                 family::DisplacedFock, family::PhotonAdded, family::CircleSuperposition,
                 family::LoweringEigenstate>;

/// Throws ParseError (with the offending character position) or Error(Domain)
/// for out-of-range parameters.
FamilySpec parse_family_spec(std::string_view text);

/// Canonical text; parse_family_spec(to_string(s)) reproduces s exactly.
std::string to_string(const FamilySpec& spec);

/// Cutoff that keeps the family's tail negligible: the larger of
/// default_dim(<N>) and ceil(<N> + 12 sqrt((dN)^2 + 1) + 20), using the
/// family's closed-form or estimated moments.
std::size_t recommended_dim(const FamilySpec& spec);

FockState make_family_state(const FamilySpec& spec, std::size_t dim,
                            const FamilyLimits& limits = {});

}  // namespace fockbound
