#include "mopuc/rakhmanov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mopuc/eig.hpp"
#include "mopuc/json_io.hpp"
#include "mopuc/parallel.hpp"

namespace mopuc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double nevai_sample(const OpucSystem& sys, int n, int ell, double theta) {
  const Complex z = std::polar(1.0, theta);
  const CMat ratio = sys.left(n).eval(z) * inverse(sys.left(n + ell).eval(z));
  const CMat defect = ratio * ratio.adjoint() - CMat::identity(sys.p);
  return spectral_norm(defect);
}

void check_nevai_args(const OpucSystem& sys, int n, int ell, int resolution) {
  if (n < 0 || ell < 1 || n + ell > sys.n_max)
    throw InvalidArgument("need 0 <= n and 1 <= l with n + l inside the system range");
  if (resolution < 512) throw InvalidArgument("grid resolution must be at least 512");
}

double nevai_impl(const OpucSystem& sys, int n, int ell, int resolution, bool parallel) {
  check_nevai_args(sys, n, ell, resolution);
  const std::size_t q = static_cast<std::size_t>(resolution);
  std::vector<double> samples(q, 0.0);
  auto sample_one = [&](std::size_t i) {
    samples[i] = nevai_sample(sys, n, ell, kTwoPi * static_cast<double>(i) / resolution);
  };
  if (parallel) {
    par::for_each_index(q, sample_one);
  } else {
    for (std::size_t i = 0; i < q; ++i) sample_one(i);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < q; ++i) acc += samples[i];
  return acc / resolution;
}

}  // namespace

double nevai_integral(const OpucSystem& sys, int n, int ell, int resolution) {
  return nevai_impl(sys, n, ell, resolution, true);
}

double nevai_integral_serial(const OpucSystem& sys, int n, int ell, int resolution) {
  return nevai_impl(sys, n, ell, resolution, false);
}

bool hn_bound_check(const OpucSystem& sys, int n, int l_max, int resolution) {
  if (l_max < 1 || n + l_max > sys.n_max)
    throw InvalidArgument("need 1 <= l_max with n + l_max inside the system range");
  const double h_next = spectral_norm(sys.reflection(n + 1));
  for (int ell = 1; ell <= l_max; ++ell) {
    if (h_next > nevai_integral(sys, n, ell, resolution) + 1e-9) return false;
  }
  return true;
}

double ratio_deviation(const OpucSystem& sys, int n, int resolution) {
  if (n < 1 || n > sys.n_max) throw InvalidArgument("degree outside the system range");
  if (resolution < 2) throw InvalidArgument("grid resolution must be at least 2");
  const CMat& h = sys.reflection(n);
  const CMat defect_root = psd_sqrt(CMat::identity(sys.p) - h * h.adjoint());
  const std::size_t q = static_cast<std::size_t>(resolution);
  std::vector<double> samples(q, 0.0);
  par::for_each_index(q, [&](std::size_t i) {
    const double theta = kTwoPi * static_cast<double>(i) / resolution;
    const Complex z = std::polar(1.0, theta);
    CMat m = defect_root * sys.left(n).eval(z) * inverse(sys.left(n - 1).eval(z));
    for (int r = 0; r < sys.p; ++r) m(r, r) -= z;
    samples[i] = spectral_norm(m);
  });
  double worst = 0.0;
  for (double s : samples) worst = std::max(worst, s);
  return worst;
}

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string decide_verdict(const DecayReport& report) {
  const int n_max = report.n_max;
  if (n_max < 8) return "inconclusive";

  const int quartile = n_max / 4;
  std::vector<double> h_first, h_last, s_first, s_last;
  for (const auto& row : report.rows) {
    if (row.n <= quartile) {
      h_first.push_back(row.hn_norm);
      if (row.nevai_sup) s_first.push_back(*row.nevai_sup);
    }
    if (row.n > n_max - quartile) {
      h_last.push_back(row.hn_norm);
      if (row.nevai_sup) s_last.push_back(*row.nevai_sup);
    }
  }
  if (!h_first.empty() && !h_last.empty() && !s_first.empty() && !s_last.empty() &&
      median_of(h_last) < 0.5 * median_of(h_first) &&
      median_of(s_last) < 0.5 * median_of(s_first))
    return "decaying";

  double floor_norm = std::numeric_limits<double>::infinity();
  for (const auto& row : report.rows)
    if (row.n > n_max / 2) floor_norm = std::min(floor_norm, row.hn_norm);
  if (std::isfinite(floor_norm) && floor_norm >= 0.05) return "non-decaying";

  return "inconclusive";
}

}  // namespace

DecayReport scan(const MatMeasure& rho, int n_max, int l_max, int resolution) {
  if (n_max < 1) throw InvalidArgument("scan needs n_max >= 1");
  if (l_max < 1) throw InvalidArgument("scan needs l_max >= 1");
  if (resolution < 512) throw InvalidArgument("grid resolution must be at least 512");

  const MomentTable t = compute_moments(rho, 2 * n_max + 2);
  const OpucSystem sys = build_system(t, n_max);

  DecayReport report;
  report.p = sys.p;
  report.n_max = n_max;
  report.l_max = l_max;
  report.resolution = resolution;
  report.quad_points = rho.quad_points();
  report.measure_hash = fnv1a64_hex(rho.to_json().dump());

  for (int n = 1; n <= n_max; ++n) {
    DecayRow row;
    row.n = n;
    row.hn_norm = spectral_norm(sys.reflection(n));
    const int l_fit = std::min(l_max, n_max - n);
    for (int ell = 1; ell <= l_fit; ++ell)
      row.nevai_by_ell.push_back(nevai_integral(sys, n, ell, resolution));
    if (!row.nevai_by_ell.empty()) {
      row.nevai_inf = *std::min_element(row.nevai_by_ell.begin(), row.nevai_by_ell.end());
      row.nevai_sup = *std::max_element(row.nevai_by_ell.begin(), row.nevai_by_ell.end());
    }
    row.ratio_dev = ratio_deviation(sys, n, resolution);
    row.ortho_residual = orthonormality_residual_row(sys, t, n);
    report.rows.push_back(std::move(row));
  }
  report.verdict = decide_verdict(report);
  return report;
}

std::string report_to_csv(const DecayReport& report) {
  std::string out = "n,hn_norm,nevai_inf,nevai_sup,ratio_dev,ortho_residual\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_double17(row.hn_norm);
    out += ',';
    if (row.nevai_inf) out += format_double17(*row.nevai_inf);
    out += ',';
    if (row.nevai_sup) out += format_double17(*row.nevai_sup);
    out += ',';
    out += format_double17(row.ratio_dev);
    out += ',';
    out += format_double17(row.ortho_residual);
    out += '\n';
  }
  return out;
}

nlohmann::json report_to_json(const DecayReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r{{"n", row.n},
                     {"hnNorm", row.hn_norm},
                     {"nevaiByEll", row.nevai_by_ell},
                     {"ratioDev", row.ratio_dev},
                     {"orthoResidual", row.ortho_residual}};
    r["nevaiInf"] = row.nevai_inf ? nlohmann::json(*row.nevai_inf) : nlohmann::json(nullptr);
    r["nevaiSup"] = row.nevai_sup ? nlohmann::json(*row.nevai_sup) : nlohmann::json(nullptr);
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"schema", 1},
                        {"p", report.p},
                        {"N", report.n_max},
                        {"Lmax", report.l_max},
                        {"resolution", report.resolution},
                        {"quadPoints", report.quad_points},
                        {"measureHash", report.measure_hash},
                        {"verdict", report.verdict},
                        {"rows", rows}};
}

}  // namespace mopuc
