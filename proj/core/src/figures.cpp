#include "fockbound/figures.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fockbound/error.hpp"
#include "fockbound/family_spec.hpp"
#include "fockbound/moments.hpp"
#include "fockbound/relations.hpp"

namespace fockbound {
namespace {

std::string num(double x) {
  if (x == 0.0) x = 0.0;
  return fmt::format("{:.17g}", x);
}

std::size_t pick_dim(std::size_t requested, const FamilySpec& spec) {
  return requested != 0 ? requested : recommended_dim(spec);
}

MomentSummary family_moments(const FamilySpec& spec, std::size_t dim) {
  FamilyLimits limits;
  if (dim != 0) limits = FamilyLimits::unbounded();
  return moments(make_family_state(spec, pick_dim(dim, spec), limits));
}

class Fig1Builder {
 public:
  explicit Fig1Builder(FigureDataset& d) : d_(d) {
    d_.columns = {{"var_a", {}}, {"var_n", {}}};
  }
  void add(const std::string& series, double var_a, double var_n) {
    d_.labels.push_back(series);
    d_.columns[0].second.push_back(var_a);
    d_.columns[1].second.push_back(var_n);
  }

 private:
  FigureDataset& d_;
};

template <class F>
FigureDataset gaussian_sweep(FigureId id, const GaussianSweepParams& p, const char* value_name,
                             double (*delta_max)(double), F&& value) {
  FigureDataset d;
  d.id = id;
  d.columns = {{"n0", {}}, {"delta", {}}, {value_name, {}}};
  d.params = {{"points", fmt::format("{}", p.points)},
              {"delta_min", num(p.delta_min)},
              {"dim", p.dim == 0 ? std::string("auto") : fmt::format("{}", p.dim)}};
  for (double n0 : p.n0) {
    for (double delta : log_grid(p.delta_min, delta_max(n0), p.points)) {
      try {
        const double v = value(family_moments(family::GaussianNumber{n0, delta}, p.dim));
        d.columns[0].second.push_back(n0);
        d.columns[1].second.push_back(delta);
        d.columns[2].second.push_back(v);
      } catch (const Error& e) {
        d.complete = false;
        d.failures.push_back(fmt::format("gauss({},{}): {}", num(n0), num(delta), e.what()));
      }
    }
  }
  return d;
}

}  // namespace

std::string_view to_string(FigureId id) noexcept {
  switch (id) {
    case FigureId::FIG1: return "fig1";
    case FigureId::FIG2: return "fig2";
    case FigureId::FIG3: return "fig3";
  }
  return "unknown";
}

std::size_t FigureDataset::rows() const {
  if (!columns.empty()) return columns.front().second.size();
  return labels.size();
}

const std::vector<double>& FigureDataset::column(std::string_view name) const {
  for (const auto& [key, values] : columns) {
    if (key == name) return values;
  }
  throw Error(ErrorCode::InvalidArgument, fmt::format("no column '{}'", name));
}

std::string to_csv(const FigureDataset& d) {
  std::string out;
  bool first = true;
  if (!d.header_label.empty()) {
    out += d.header_label;
    first = false;
  }
  for (const auto& col : d.columns) {
    out += (first ? "" : ",") + col.first;
    first = false;
  }
  out += '\n';
  for (std::size_t r = 0; r < d.rows(); ++r) {
    first = true;
    if (!d.header_label.empty()) {
      out += d.labels[r];
      first = false;
    }
    for (const auto& col : d.columns) {
      out += (first ? "" : ",") + num(col.second[r]);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n < 1) {
    throw Error(ErrorCode::InvalidArgument, "log_grid needs 0 < lo <= hi and n >= 1");
  }
  if (n == 1) return {lo};
  std::vector<double> g(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

double figure2_delta_max(double n0) { return 1.5 * std::sqrt(n0); }
double figure3_delta_max(double n0) { return std::sqrt(0.5 * n0); }

FigureDataset figure1(const Figure1Params& p) {
  FigureDataset d;
  d.id = FigureId::FIG1;
  d.header_label = "series";
  d.params = {{"mean_n", num(p.mean_n)},
              {"curve_points", fmt::format("{}", p.curve_points)},
              {"dim", p.dim == 0 ? std::string("auto") : fmt::format("{}", p.dim)}};
  Fig1Builder rows(d);
  const double N = p.mean_n;
  const auto attempt = [&](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      d.complete = false;
      d.failures.push_back(fmt::format("{}: {}", what, e.what()));
    }
  };

  for (std::size_t i = 0; i < p.curve_points; ++i) {
    const double v = p.curve_points == 1 ? 0.0 : N * static_cast<double>(i) / static_cast<double>(p.curve_points - 1);
    rows.add("boundary", v, boundary_varN(N, v));
  }
  for (std::size_t i = 0; i < p.curve_points; ++i) {
    const double v = p.curve_points == 1 ? 0.0 : N * static_cast<double>(i) / static_cast<double>(p.curve_points - 1);
    attempt(fmt::format("scs at {}", num(v)), [&] { rows.add("scs", v, scs_min_varN(v, N)); });
  }
  attempt("F", [&] {
    if (N != std::round(N)) throw Error(ErrorCode::Domain, "Fock point needs integer <N>");
    const MomentSummary m = family_moments(family::Fock{static_cast<std::size_t>(N)}, p.dim);
    rows.add("F", m.var_a, m.var_n);
  });
  attempt("C", [&] {
    const MomentSummary m = family_moments(family::Coherent{Complex(std::sqrt(N), 0.0)}, p.dim);
    rows.add("C", m.var_a, m.var_n);
  });
  rows.add("Z", 0.0, boundary_varN(N, 0.0));
  for (std::size_t m = 1; m <= p.padd_max_m; ++m) {
    attempt(fmt::format("padd m={}", m), [&] {
      const MomentSummary s = family_moments(family::PhotonAdded{Complex(p.padd_alpha, 0.0), m}, p.dim);
      rows.add("padd", s.var_a, s.var_n);
      rows.add("padd_boundary", s.var_a, boundary_varN(s.mean_n, s.var_a));
    });
  }
  for (double delta : log_grid(0.3, figure3_delta_max(N), p.gauss_points)) {
    attempt(fmt::format("gauss delta={}", num(delta)), [&] {
      const MomentSummary s = family_moments(family::GaussianNumber{N, delta}, p.dim);
      rows.add("gauss", s.var_a, s.var_n);
    });
  }
  return d;
}

FigureDataset figure2(const GaussianSweepParams& p) {
  return gaussian_sweep(FigureId::FIG2, p, "rel_slack", &figure2_delta_max,
                        [](const MomentSummary& m) { return relative_slack(m); });
}

FigureDataset figure3(const GaussianSweepParams& p) {
  return gaussian_sweep(FigureId::FIG3, p, "distance", &figure3_delta_max, [](const MomentSummary& m) {
    return distance_to_boundary(boundary_point(m));
  });
}

}  // namespace fockbound
