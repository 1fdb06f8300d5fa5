#include "fockbound/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "fockbound/error.hpp"
#include "fockbound/moments.hpp"
#include "fockbound/random_states.hpp"
#include "fockbound/state_file.hpp"
#include "fockbound/two_mode.hpp"

namespace fockbound {
namespace {

bool is_two_mode(RelationId id) {
  return id == RelationId::TWO_MODE_HEIS || id == RelationId::TWO_MODE_UNC3 ||
         id == RelationId::TWO_MODE_UNC3_STRONG;
}

std::string num(double x) {
  if (x == 0.0) x = 0.0;
  if (std::isnan(x)) return "null";
  return fmt::format("{:.17g}", x);
}

std::string indent(std::string text, const std::string& pad) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    out += text[i];
    if (text[i] == '\n' && i + 1 < text.size()) out += pad;
  }
  return out;
}

std::string two_mode_json(const TwoModeState& s) {
  std::string out = fmt::format("{{\"dim1\": {}, \"dim2\": {}, \"amplitudes\": [", s.dim1(), s.dim2());
  for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
    out += fmt::format("{}[{}, {}]", i == 0 ? "" : ", ", num(s.amplitudes()[i].real()),
                       num(s.amplitudes()[i].imag()));
  }
  return out + "]}";
}

void record(RelationTally& t, std::size_t index, const RelationReport& r, std::size_t max_recorded,
            const auto& state_json) {
  ++t.evaluated;
  t.min_slack = std::min(t.min_slack, r.slack);
  if (r.satisfied) return;
  ++t.violations;
  if (t.recorded.size() < max_recorded) t.recorded.push_back({index, r, state_json()});
}

}  // namespace

std::size_t SweepSummary::total_violations() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.violations;
  return n;
}

SweepSummary run_sweep(const SweepParams& params) {
  if (params.count < 1) throw Error(ErrorCode::InvalidArgument, "sweep count must be >= 1");
  if (params.relations.empty()) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one relation");
  const auto start = std::chrono::steady_clock::now();

  SweepSummary summary;
  summary.params = params;
  for (RelationId id : params.relations) {
    summary.tallies.push_back(RelationTally{id, 0, 0, std::numeric_limits<double>::infinity(), {}});
  }
  const bool single = std::any_of(params.relations.begin(), params.relations.end(),
                                  [](RelationId id) { return !is_two_mode(id); });
  const bool two = std::any_of(params.relations.begin(), params.relations.end(), is_two_mode);

  if (single) {
    Rng rng(params.seed);
    for (std::size_t i = 0; i < params.count; ++i) {
      const FockState s = random_state(rng, params.min_dim, params.max_dim);
      const MomentSummary m = moments(s);
      const QuadratureCovariance q = quadrature_covariance(s, 0.0);
      const EOperatorStats e = e_operator_stats(s);
      const auto [nx, np] = check_heisenberg_pair(m, q);
      const auto json = [&] { return serialize(make_state_file(s)); };
      for (auto& t : summary.tallies) {
        switch (t.id) {
          case RelationId::HEIS_NX: record(t, i, nx, params.max_recorded, json); break;
          case RelationId::HEIS_NP: record(t, i, np, params.max_recorded, json); break;
          case RelationId::UNC: record(t, i, check_unc(m), params.max_recorded, json); break;
          case RelationId::UNC3: record(t, i, check_unc3(m), params.max_recorded, json); break;
          case RelationId::UNC4: record(t, i, check_unc4(m), params.max_recorded, json); break;
          case RelationId::LEVY_LEBLOND:
            record(t, i, check_levy_leblond(m.var_n, e.var_e, e.p0), params.max_recorded, json);
            break;
          default: break;
        }
      }
    }
  }
  if (two) {
    std::seed_seq seq{params.seed, std::uint64_t{2}};
    Rng rng(seq);
    std::uniform_int_distribution<std::size_t> pick(params.two_mode_min_dim, params.two_mode_max_dim);
    for (std::size_t i = 0; i < params.count; ++i) {
      const std::size_t d1 = pick(rng);
      const std::size_t d2 = pick(rng);
      const TwoModeState s = random_two_mode_state(rng, d1, d2);
      const SchwingerMoments sm = schwinger_moments(s);
      const auto json = [&] { return two_mode_json(s); };
      for (auto& t : summary.tallies) {
        switch (t.id) {
          case RelationId::TWO_MODE_HEIS: record(t, i, check_two_mode_heis(sm), params.max_recorded, json); break;
          case RelationId::TWO_MODE_UNC3: record(t, i, check_two_mode_unc3(sm), params.max_recorded, json); break;
          case RelationId::TWO_MODE_UNC3_STRONG:
            record(t, i, check_two_mode_unc3_strong(sm), params.max_recorded, json);
            break;
          default: break;
        }
      }
    }
  }
  summary.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string to_json(const SweepSummary& s) {
  const auto& p = s.params;
  std::string out = "{\n";
  out += fmt::format("  \"seed\": {},\n  \"count\": {},\n", p.seed, p.count);
  out += fmt::format("  \"dims\": [{}, {}],\n  \"two_mode_dims\": [{}, {}],\n", p.min_dim, p.max_dim,
                     p.two_mode_min_dim, p.two_mode_max_dim);
  out += fmt::format("  \"total_violations\": {},\n  \"relations\": [", s.total_violations());
  for (std::size_t k = 0; k < s.tallies.size(); ++k) {
    const auto& t = s.tallies[k];
    out += fmt::format("{}\n    {{\n      \"relation_id\": \"{}\",\n      \"evaluated\": {},\n"
                       "      \"min_slack\": {},\n      \"violations\": {},\n      \"recorded\": [",
                       k == 0 ? "" : ",", to_string(t.id), t.evaluated, num(t.min_slack), t.violations);
    for (std::size_t v = 0; v < t.recorded.size(); ++v) {
      const auto& r = t.recorded[v];
      out += fmt::format("{}\n        {{\"index\": {}, \"lhs\": {}, \"rhs\": {}, \"slack\": {},\n"
                         "         \"state\": {}}}",
                         v == 0 ? "" : ",", r.index, num(r.report.lhs), num(r.report.rhs),
                         num(r.report.slack), indent(r.state_json, "         "));
    }
    out += t.recorded.empty() ? "]\n    }" : "\n      ]\n    }";
  }
  out += "\n  ]\n}\n";
  return out;
}

}  // namespace fockbound
