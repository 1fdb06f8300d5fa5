#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fockbound/fock_state.hpp"

namespace fockbound {

enum class FigureId { FIG1, FIG2, FIG3 };

std::string_view to_string(FigureId id) noexcept;

/// Column-oriented figure data. `labels` (when present) is the first CSV
/// column and is named header_label; numeric columns follow in order.
struct FigureDataset {
  FigureId id = FigureId::FIG1;
  std::string header_label;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::vector<double>>> columns;
  std::vector<std::pair<std::string, std::string>> params;
  bool complete = true;
  std::vector<std::string> failures;

  std::size_t rows() const;
  const std::vector<double>& column(std::string_view name) const;
};

/// Header line plus one line per row, numbers at 17 significant digits.
std::string to_csv(const FigureDataset& data);

/// n points, logarithmically spaced on [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

struct Figure1Params {
  double mean_n = 25.0;
  std::size_t curve_points = 101;
  /// 0 selects recommended_dim per state.
  std::size_t dim = 0;
  double padd_alpha = 5.0;
  std::size_t padd_max_m = 5;
  std::size_t gauss_points = 40;
};

/// Series (first column): boundary, scs, F, C, Z, padd, padd_boundary, gauss.
/// padd_boundary holds boundary_varN at each photon-added state's own <N>.
FigureDataset figure1(const Figure1Params& p = {});

struct GaussianSweepParams {
  std::vector<double> n0 = {100.0, 25.0, 10.0, 5.0};
  std::size_t points = 200;
  double delta_min = 0.3;
  std::size_t dim = 0;
};

/// Relative UNC3 slack of gauss(N0, delta), delta log-spaced on
/// [delta_min, 1.5 sqrt(N0)].
FigureDataset figure2(const GaussianSweepParams& p = {});

/// Distance of gauss(N0, delta) to the UNC3 boundary, delta log-spaced on
/// [delta_min, sqrt(N0/2)].
FigureDataset figure3(const GaussianSweepParams& p = {});

double figure2_delta_max(double n0);
double figure3_delta_max(double n0);

}  // namespace fockbound
