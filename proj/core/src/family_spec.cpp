#include "fockbound/family_spec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "fockbound/error.hpp"

namespace fockbound {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Argument {
  double value;
  std::size_t position;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    skip_space();
    const std::size_t name_pos = pos_;
    std::string name;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0)) {
      name.push_back(text_[pos_++]);
    }
    if (name.empty()) throw ParseError("expected a family name", name_pos);
    skip_space();
    expect('(');
    std::vector<Argument> args;
    skip_space();
    if (peek() != ')') {
      args.push_back(number());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        skip_space();
        args.push_back(number());
        skip_space();
      }
    }
    expect(')');
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return build(name, name_pos, args);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(fmt::format("expected '{}'", c), pos_);
    ++pos_;
  }

  Argument number() {
    const std::size_t start = pos_;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || !std::isfinite(value)) throw ParseError("expected a finite number", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return Argument{value, start};
  }

  static std::size_t count(const Argument& a, const char* what) {
    if (a.value < 0.0 || std::floor(a.value) != a.value || a.value > 1e9) {
      throw ParseError(fmt::format("{} must be a non-negative integer", what), a.position);
    }
    return static_cast<std::size_t>(a.value);
  }

  static void arity(const std::string& name, std::size_t name_pos, const std::vector<Argument>& args,
                    std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw ParseError(lo == hi ? fmt::format("{} takes {} argument(s), got {}", name, lo, args.size())
                                : fmt::format("{} takes {} to {} arguments, got {}", name, lo, hi,
                                              args.size()),
                       name_pos);
    }
  }

  static FamilySpec build(const std::string& name, std::size_t name_pos,
                          const std::vector<Argument>& args) {
    if (name == "fock") {
      arity(name, name_pos, args, 1, 1);
      return family::Fock{count(args[0], "n")};
    }
    if (name == "coherent") {
      arity(name, name_pos, args, 1, 2);
      return family::Coherent{Complex(args[0].value, args.size() == 2 ? args[1].value : 0.0)};
    }
    if (name == "gauss") {
      arity(name, name_pos, args, 2, 2);
      if (args[0].value < 0.0) throw ParseError("N0 must be >= 0", args[0].position);
      if (!(args[1].value > 0.0)) throw ParseError("delta must be > 0", args[1].position);
      return family::GaussianNumber{args[0].value, args[1].value};
    }
    if (name == "sqcoh") {
      arity(name, name_pos, args, 4, 4);
      if (args[0].value < 0.0) throw ParseError("|alpha| must be >= 0", args[0].position);
      if (args[2].value < 0.0) throw ParseError("s must be >= 0", args[2].position);
      return family::SqueezedCoherent{
          SqueezeParams::make(args[0].value, args[1].value, args[2].value, args[3].value)};
    }
    if (name == "dfock" || name == "padd") {
      arity(name, name_pos, args, 2, 3);
      const Complex alpha(args[0].value, args.size() == 3 ? args[1].value : 0.0);
      const std::size_t k = count(args.back(), name == "dfock" ? "n" : "m");
      if (name == "dfock") return family::DisplacedFock{alpha, k};
      return family::PhotonAdded{alpha, k};
    }
    if (name == "circle") {
      arity(name, name_pos, args, 2, 2);
      if (!(args[0].value > 0.0)) throw ParseError("alpha0 must be > 0", args[0].position);
      if (!(args[1].value > 0.0)) throw ParseError("u must be > 0", args[1].position);
      return family::CircleSuperposition{args[0].value, args[1].value};
    }
    if (name == "loweig") {
      arity(name, name_pos, args, 2, 2);
      if (args[0].value == 0.0) throw ParseError("d must be non-zero", args[0].position);
      return family::LoweringEigenstate{args[0].value, count(args[1], "k")};
    }
    throw ParseError(fmt::format("unknown family '{}'", name), name_pos);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string complex_args(Complex z) {
  if (z.imag() == 0.0) return fmt::format("{}", z.real());
  return fmt::format("{},{}", z.real(), z.imag());
}

MomentTriple estimated_moments(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Fock& f) {
            return MomentTriple{static_cast<double>(f.n), static_cast<double>(f.n), 0.0};
          },
          [](const family::Coherent& f) {
            const double a2 = std::norm(f.alpha);
            return MomentTriple{a2, 0.0, a2};
          },
          [](const family::GaussianNumber& f) {
            return MomentTriple{f.n0, 0.0, f.delta * f.delta};
          },
          [](const family::SqueezedCoherent& f) { return squeezed_moments(f.params); },
          [](const family::DisplacedFock& f) { return displaced_fock_moments(f.alpha, f.n); },
          [](const family::PhotonAdded& f) {
            const double mean = std::norm(f.alpha) + static_cast<double>(f.m);
            return MomentTriple{mean, 0.0, mean + 1.0};
          },
          [](const family::CircleSuperposition& f) {
            const double delta = f.alpha0 * f.alpha0;
            return MomentTriple{delta, 0.0, delta};
          },
          [](const family::LoweringEigenstate& f) {
            return MomentTriple{static_cast<double>(f.k), 0.0, 0.0};
          },
      },
      spec);
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Fock& f) { return fmt::format("fock({})", f.n); },
          [](const family::Coherent& f) { return fmt::format("coherent({})", complex_args(f.alpha)); },
          [](const family::GaussianNumber& f) { return fmt::format("gauss({},{})", f.n0, f.delta); },
          [](const family::SqueezedCoherent& f) {
            const auto& p = f.params;
            return fmt::format("sqcoh({},{},{},{})", p.alpha_abs, p.theta, p.s, p.vartheta);
          },
          [](const family::DisplacedFock& f) {
            return fmt::format("dfock({},{})", complex_args(f.alpha), f.n);
          },
          [](const family::PhotonAdded& f) {
            return fmt::format("padd({},{})", complex_args(f.alpha), f.m);
          },
          [](const family::CircleSuperposition& f) {
            return fmt::format("circle({},{})", f.alpha0, f.u);
          },
          [](const family::LoweringEigenstate& f) { return fmt::format("loweig({},{})", f.d, f.k); },
      },
      spec);
}

std::size_t recommended_dim(const FamilySpec& spec) {
  const MomentTriple m = estimated_moments(spec);
  const double spread = std::ceil(m.mean_n + 12.0 * std::sqrt(m.var_n + 1.0) + 20.0);
  std::size_t dim = std::max(default_dim(m.mean_n), static_cast<std::size_t>(spread));
  // squeezed tails decay like tanh(s)^n, slower than the Gaussian estimate
  if (const auto* sq = std::get_if<family::SqueezedCoherent>(&spec)) {
    FamilyLimits probe = FamilyLimits::unbounded();
    probe.tail_tolerance = 1e-14;
    for (int i = 0; i < 40; ++i) {
      try {
        make_squeezed_coherent(sq->params, dim, probe);
        break;
      } catch (const TruncationError&) {
        dim += dim / 4;
      }
    }
  }
  return dim;
}

FockState make_family_state(const FamilySpec& spec, std::size_t dim, const FamilyLimits& limits) {
  return std::visit(
      overloaded{
          [&](const family::Fock& f) { return make_fock(f.n, dim); },
          [&](const family::Coherent& f) { return make_coherent(f.alpha, dim, limits); },
          [&](const family::GaussianNumber& f) {
            return make_gaussian_number(f.n0, f.delta, dim, limits);
          },
          [&](const family::SqueezedCoherent& f) {
            return make_squeezed_coherent(f.params, dim, limits);
          },
          [&](const family::DisplacedFock& f) {
            return make_displaced_fock(f.alpha, f.n, dim, limits);
          },
          [&](const family::PhotonAdded& f) { return make_photon_added(f.alpha, f.m, dim, limits); },
          [&](const family::CircleSuperposition& f) {
            return make_circle_superposition(f.alpha0, f.u, dim, limits);
          },
          [&](const family::LoweringEigenstate& f) {
            return make_lowering_eigenstate(f.d, f.k, dim);
          },
      },
      spec);
}

}  // namespace fockbound
