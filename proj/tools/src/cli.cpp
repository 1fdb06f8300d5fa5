#include "fockbound_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fockbound/boundary_search.hpp"
#include "fockbound/error.hpp"
#include "fockbound/family_spec.hpp"
#include "fockbound/figures.hpp"
#include "fockbound/moments.hpp"
#include "fockbound/relations.hpp"
#include "fockbound/state_file.hpp"
#include "fockbound/sweep.hpp"
#include "fockbound/two_mode.hpp"

namespace fockbound::cli {
namespace {

struct Globals {
  std::size_t dim = 0;
  std::uint64_t seed = 42;
  double tol = kSlackTolerance;
  std::string out;
};

std::string num(double x) {
  if (x == 0.0) x = 0.0;
  return fmt::format("{:.17g}", x);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::EmptyAmplitudes:
    case ErrorCode::ZeroNorm:
    case ErrorCode::NonFinite: return kParse;
    case ErrorCode::Truncation: return kTruncation;
    case ErrorCode::NonConvergence: return kNonConvergence;
    case ErrorCode::InvalidArgument:
    case ErrorCode::Domain:
    case ErrorCode::Internal: return kUsage;
  }
  return kUsage;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write '{}'", path));
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::vector<RelationId> parse_relations(const std::vector<std::string>& names,
                                        std::vector<RelationId> fallback) {
  if (names.empty()) return fallback;
  std::vector<RelationId> ids;
  for (const auto& n : names) ids.push_back(parse_relation_id(n));
  return ids;
}

const std::vector<RelationId> kSingleMode = {RelationId::HEIS_NX, RelationId::HEIS_NP,
                                             RelationId::UNC,     RelationId::UNC3,
                                             RelationId::UNC4,    RelationId::LEVY_LEBLOND};
const std::vector<RelationId> kTwoMode = {RelationId::TWO_MODE_HEIS, RelationId::TWO_MODE_UNC3,
                                          RelationId::TWO_MODE_UNC3_STRONG};

double parse_number(const std::string& text, std::size_t offset) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError(fmt::format("expected a number, got '{}'", text), offset);
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw ParseError(fmt::format("expected a number, got '{}'", text), offset + used);
  }
  return v;
}

/// "lo:hi:step" (inclusive) or "v1,v2,...".
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> g;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::vector<std::size_t> offsets;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ':') {
        parts.push_back(text.substr(start, i - start));
        offsets.push_back(start);
        start = i + 1;
      }
    }
    if (parts.size() != 3) throw ParseError("grid range must be lo:hi:step", 0);
    const double lo = parse_number(parts[0], offsets[0]);
    const double hi = parse_number(parts[1], offsets[1]);
    const double step = parse_number(parts[2], offsets[2]);
    if (!(step > 0.0) || hi < lo) throw ParseError("grid range needs lo <= hi and step > 0", offsets[2]);
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) g.push_back(std::min(lo + step * static_cast<double>(i), hi));
    return g;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      g.push_back(parse_number(text.substr(start, i - start), start));
      start = i + 1;
    }
  }
  return g;
}

FockState build_state(const FamilySpec& spec, std::size_t dim, std::vector<std::string>* warnings) {
  const std::size_t d = dim != 0 ? dim : recommended_dim(spec);
  const FockState s = make_family_state(spec, d, dim != 0 ? FamilyLimits::unbounded() : FamilyLimits{});
  if (warnings != nullptr) {
    const MomentOptions opts;
    const double top = s.dim() > 2 ? tail_mass(s, 2) : std::norm(s[s.dim() - 1]);
    if (top > opts.warn_tail) {
      warnings->push_back(fmt::format("top-two-level weight {:.3e} exceeds {:.0e} at dim {}", top,
                                      opts.warn_tail, s.dim()));
    }
  }
  return s;
}

int cmd_state_make(const Globals& g, const std::string& spec_text, std::ostream& out) {
  const FamilySpec spec = parse_family_spec(spec_text);
  std::vector<std::string> warnings;
  const FockState s = build_state(spec, g.dim, &warnings);
  Output o(g.out, out);
  o.stream() << serialize(make_state_file(s, to_string(spec), warnings));
  return kOk;
}

int cmd_state_moments(const Globals& g, const std::string& path, std::ostream& out) {
  const MomentSummary m = moments(to_state(read_state_file(path)));
  Output o(g.out, out);
  o.stream() << "mean_n,mean_n2,mean_a_re,mean_a_im,var_n,var_a,anticomm_re,anticomm_im,tail\n"
             << fmt::format("{},{},{},{},{},{},{},{},{}\n", num(m.mean_n), num(m.mean_n2),
                            num(m.mean_a.real()), num(m.mean_a.imag()), num(m.var_n), num(m.var_a),
                            num(m.anticomm.real()), num(m.anticomm.imag()), num(m.tail));
  return kOk;
}

int cmd_check(const Globals& g, const std::string& path, const std::vector<std::string>& names,
              std::ostream& out) {
  const std::vector<RelationId> ids = parse_relations(names, kSingleMode);
  const FockState s = to_state(read_state_file(path));
  const MomentSummary m = moments(s);
  const QuadratureCovariance q = quadrature_covariance(s, 0.0);
  const EOperatorStats e = e_operator_stats(s);
  const auto [nx, np] = check_heisenberg_pair(m, q);
  Output o(g.out, out);
  o.stream() << kRelationCsvHeader << '\n';
  bool ok = true;
  for (RelationId id : ids) {
    RelationReport r;
    switch (id) {
      case RelationId::HEIS_NX: r = nx; break;
      case RelationId::HEIS_NP: r = np; break;
      case RelationId::UNC: r = check_unc(m); break;
      case RelationId::UNC3: r = check_unc3(m); break;
      case RelationId::UNC4: r = check_unc4(m); break;
      case RelationId::LEVY_LEBLOND: r = check_levy_leblond(m.var_n, e.var_e, e.p0); break;
      default:
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("{} needs a two-mode state; use `twomode check`", to_string(id)));
    }
    r = RelationReport::make(r.id, r.lhs, r.rhs, g.tol);
    ok = ok && r.satisfied;
    o.stream() << to_csv_row(r) << '\n';
  }
  return ok ? kOk : kViolation;
}

int cmd_figure(const Globals& g, const std::string& which, double mean_n, std::size_t points,
               std::ostream& out, std::ostream& err) {
  FigureDataset d;
  if (which == "fig1") {
    Figure1Params p;
    p.mean_n = mean_n;
    p.dim = g.dim;
    d = figure1(p);
  } else {
    GaussianSweepParams p;
    p.points = points;
    p.dim = g.dim;
    d = which == "fig2" ? figure2(p) : figure3(p);
  }
  Output o(g.out, out);
  o.stream() << to_csv(d);
  err << fmt::format("{}: {} rows, complete={}\n", which, d.rows(), d.complete ? "true" : "false");
  for (const auto& f : d.failures) err << "  failed: " << f << '\n';
  return kOk;
}

int cmd_frontier(const Globals& g, double mean_n, const std::string& grid_text, std::ostream& out,
                 std::ostream& err) {
  const std::vector<double> grid = parse_grid(grid_text);
  const std::size_t dim = g.dim != 0 ? g.dim : default_dim(mean_n);
  const std::vector<FrontierPoint> pts = trace_frontier(mean_n, grid, dim);
  Output o(g.out, out);
  o.stream() << "var_a,var_n,mean_n,lambda_n,lambda_x,eigenvalue,residual,boundary_var_n,scs_var_n,status\n";
  bool all = true;
  for (const auto& p : pts) {
    const double v = p.point.var_a;
    o.stream() << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", num(v), num(p.point.var_n), num(mean_n),
                              num(p.params.lambda_n), num(p.params.lambda_x), num(p.eigenvalue),
                              num(p.residual), num(boundary_varN(mean_n, v)), num(scs_min_varN(v, mean_n)),
                              to_string(p.status));
    if (p.status == FrontierStatus::Skipped) {
      all = false;
      err << fmt::format("var_a={}: {}\n", num(v), p.diagnostic);
    }
  }
  return all ? kOk : kNonConvergence;
}

int cmd_sweep(const Globals& g, std::size_t count, std::size_t min_dim, std::size_t max_dim,
              const std::vector<std::string>& names, std::ostream& out, std::ostream& err) {
  SweepParams p;
  p.seed = g.seed;
  p.count = count;
  p.min_dim = min_dim;
  p.max_dim = max_dim;
  p.relations = parse_relations(names, {RelationId::UNC3});
  const SweepSummary s = run_sweep(p);
  Output o(g.out, out);
  o.stream() << to_json(s);
  err << fmt::format("runtime_seconds: {:.3f}\n", s.runtime_seconds);
  return s.total_violations() == 0 ? kOk : kViolation;
}

std::size_t two_mode_dim(std::size_t explicit_dim, std::size_t global_dim) {
  return explicit_dim != 0 ? explicit_dim : global_dim;
}

int cmd_twomode_check(const Globals& g, const std::string& s1, const std::string& s2, std::size_t d1,
                      std::size_t d2, std::ostream& out) {
  const TwoModeState st = make_two_mode(parse_family_spec(s1), parse_family_spec(s2),
                                        two_mode_dim(d1, g.dim), two_mode_dim(d2, g.dim));
  const SchwingerMoments sm = schwinger_moments(st);
  Output o(g.out, out);
  o.stream() << kRelationCsvHeader << '\n';
  bool ok = true;
  for (const RelationReport& raw :
       {check_two_mode_heis(sm), check_two_mode_unc3(sm), check_two_mode_unc3_strong(sm)}) {
    const RelationReport r = RelationReport::make(raw.id, raw.lhs, raw.rhs, g.tol);
    ok = ok && r.satisfied;
    o.stream() << to_csv_row(r) << '\n';
  }
  return ok ? kOk : kViolation;
}

int cmd_twomode_audit(const Globals& g, const std::string& s1, const std::string& s2, std::size_t d1,
                      std::size_t d2, std::ostream& out) {
  const TwoModeState st = make_two_mode(parse_family_spec(s1), parse_family_spec(s2),
                                        two_mode_dim(d1, g.dim), two_mode_dim(d2, g.dim));
  const JxJyAudit a = audit_jxjy_identity(st);
  Output o(g.out, out);
  o.stream() << "lhs,rhs,gap,half_n1n2\n"
             << fmt::format("{},{},{},{}\n", num(a.lhs), num(a.rhs), num(a.gap), num(a.half_n1n2));
  return kOk;
}

int cmd_twomode_reduce(const Globals& g, const std::string& s1, double alpha2, std::size_t d1,
                       std::size_t d2, std::ostream& out) {
  const ReductionResult r =
      reduction_check(parse_family_spec(s1), alpha2, two_mode_dim(d1, g.dim), two_mode_dim(d2, 0));
  Output o(g.out, out);
  auto& os = o.stream();
  os << "quantity,mapped,single\n";
  os << fmt::format("mean_n,{},{}\n", num(r.mapped.mean_n), num(r.single.mean_n));
  os << fmt::format("mean_a_re,{},{}\n", num(r.mapped.mean_a.real()), num(r.single.mean_a.real()));
  os << fmt::format("mean_a_im,{},{}\n", num(r.mapped.mean_a.imag()), num(r.single.mean_a.imag()));
  os << fmt::format("var_a,{},{}\n", num(r.mapped.var_a), num(r.single.var_a));
  os << fmt::format("var_n,{},{}\n", num(r.mapped.var_n), num(r.single.var_n));
  os << fmt::format("unc_slack,{},{}\n", num(r.unc.slack), num(check_unc(r.single).slack));
  os << fmt::format("unc3_slack,{},{}\n", num(r.unc3.slack), num(check_unc3(r.single).slack));
  os << fmt::format("deviation,{},0\n", num(r.deviation));
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated-Fock-space toolkit for number/annihilation uncertainty relations",
               "fockbound"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--dim", g.dim, "Fock cutoff (0 picks one per state)");
  app.add_option("--seed", g.seed, "Seed for random sweeps");
  app.add_option("--tol", g.tol, "Slack tolerance for satisfied relations");
  app.add_option("--out", g.out, "Write data here instead of stdout");

  std::function<int()> action;

  auto* state = app.add_subcommand("state", "Build or inspect single-mode states");
  state->require_subcommand(1);
  std::string spec_text, path;
  auto* make = state->add_subcommand("make", "Write a family state as a JSON state file");
  make->add_option("spec", spec_text, "Family spec, e.g. coherent(5) or gauss(25,2)")->required();
  make->callback([&] { action = [&] { return cmd_state_make(g, spec_text, out); }; });
  auto* mom = state->add_subcommand("moments", "Print the moment summary of a state file");
  mom->add_option("file", path)->required();
  mom->callback([&] { action = [&] { return cmd_state_moments(g, path, out); }; });

  std::vector<std::string> relations;
  auto* check = app.add_subcommand("check", "Evaluate uncertainty relations on a state file");
  check->add_option("file", path)->required();
  check->add_option("--relations", relations, "Comma-separated relation ids")->delimiter(',');
  check->callback([&] { action = [&] { return cmd_check(g, path, relations, out); }; });

  std::string figure_id;
  double fig_mean_n = 25.0;
  std::size_t fig_points = 200;
  auto* fig = app.add_subcommand("figure", "Emit figure data as CSV");
  fig->add_option("id", figure_id)->required()->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  fig->add_option("--mean-n", fig_mean_n, "Mean occupation for fig1");
  fig->add_option("--points", fig_points, "Delta grid size for fig2/fig3")->check(CLI::PositiveNumber);
  fig->callback([&] { action = [&] { return cmd_figure(g, figure_id, fig_mean_n, fig_points, out, err); }; });

  double fr_mean_n = 25.0;
  std::string grid_text = "0:25:1";
  auto* fr = app.add_subcommand("frontier", "Trace the minimal (dN)^2 frontier");
  fr->add_option("--mean-n", fr_mean_n, "Target <N>");
  fr->add_option("--grid", grid_text, "var_a grid: lo:hi:step or v1,v2,...");
  fr->callback([&] { action = [&] { return cmd_frontier(g, fr_mean_n, grid_text, out, err); }; });

  std::size_t count = 10000, min_dim = 2, max_dim = 60;
  auto* sw = app.add_subcommand("sweep", "Seeded random-state property sweep (JSON summary)");
  sw->add_option("--count", count)->check(CLI::PositiveNumber);
  sw->add_option("--min-dim", min_dim);
  sw->add_option("--max-dim", max_dim);
  sw->add_option("--relations", relations, "Comma-separated relation ids")->delimiter(',');
  sw->callback([&] { action = [&] { return cmd_sweep(g, count, min_dim, max_dim, relations, out, err); }; });

  auto* tm = app.add_subcommand("twomode", "Schwinger two-mode checks");
  tm->require_subcommand(1);
  std::string spec1, spec2;
  std::size_t dim1 = 0, dim2 = 0;
  double alpha2 = 10.0;
  auto* tmc = tm->add_subcommand("check", "Two-mode relations on a product state");
  auto* tma = tm->add_subcommand("audit", "Jx^2 + Jy^2 identity audit on a product state");
  for (auto* sub : {tmc, tma}) {
    sub->add_option("spec1", spec1)->required();
    sub->add_option("spec2", spec2)->required();
    sub->add_option("--dim1", dim1);
    sub->add_option("--dim2", dim2);
  }
  tmc->callback([&] { action = [&] { return cmd_twomode_check(g, spec1, spec2, dim1, dim2, out); }; });
  tma->callback([&] { action = [&] { return cmd_twomode_audit(g, spec1, spec2, dim1, dim2, out); }; });
  auto* tmr = tm->add_subcommand("reduce", "Large-mode substitution check on spec1 x coherent(alpha2)");
  tmr->add_option("spec1", spec1)->required();
  tmr->add_option("--alpha2", alpha2);
  tmr->add_option("--dim1", dim1);
  tmr->add_option("--dim2", dim2);
  tmr->callback([&] { action = [&] { return cmd_twomode_reduce(g, spec1, alpha2, dim1, dim2, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace fockbound::cli
