#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mopuc/opuc.hpp"

namespace mopuc {

// (1/2pi) * integral over the circle of
//   | phi_n^L phi_{n+l}^{L,-1} (phi_{n+l}^L)^{-*} (phi_n^L)^* - I |_2 dtheta,
// by the uniform trapezoid rule on `resolution` points (>= 512). Dominates
// |H_{n+1}|_2 for every l >= 1, which is the decay handle: the integral can
// only be small for all large n when the reflection coefficients die out.
double nevai_integral(const OpucSystem& sys, int n, int ell, int resolution);

// Plain-loop reference; bit-identical to nevai_integral.
double nevai_integral_serial(const OpucSystem& sys, int n, int ell, int resolution);

// |H_{n+1}|_2 <= nevai_integral(n, l) + 1e-9 for every l in [1, l_max].
bool hn_bound_check(const OpucSystem& sys, int n, int l_max, int resolution);

// max over the circle grid of | sqrt(I - H_n H_n^*) phi_n^L(z)
// phi_{n-1}^L(z)^{-1} - z I |_2; bounded by |H_n|_2 for exact systems.
double ratio_deviation(const OpucSystem& sys, int n, int resolution);

struct DecayRow {
  int n = 0;
  double hn_norm = 0.0;
  std::vector<double> nevai_by_ell;       // l = 1 .. min(l_max, N - n)
  std::optional<double> nevai_inf;        // empty when no l fits
  std::optional<double> nevai_sup;
  double ratio_dev = 0.0;
  double ortho_residual = 0.0;
};

struct DecayReport {
  int p = 0;
  int n_max = 0;
  int l_max = 0;
  int resolution = 0;
  int quad_points = 0;
  std::string measure_hash;  // FNV-1a of the canonical measure JSON
  std::string verdict;       // "decaying" | "non-decaying" | "inconclusive"
  std::vector<DecayRow> rows;
};

// Builds the system from the measure, then fills one row per degree
// n = 1..n_max. The verdict is a pinned heuristic: quartile medians of
// hn_norm and nevai_sup must halve for "decaying"; "non-decaying" needs
// min hn_norm >= 0.05 over the second half; anything else (and any
// n_max < 8) is "inconclusive".
DecayReport scan(const MatMeasure& rho, int n_max, int l_max, int resolution);

// n,hn_norm,nevai_inf,nevai_sup,ratio_dev,ortho_residual with %.17g values,
// '.' decimal separator, empty cells where no l fits. Byte-stable.
std::string report_to_csv(const DecayReport& report);
nlohmann::json report_to_json(const DecayReport& report);

}  // namespace mopuc
