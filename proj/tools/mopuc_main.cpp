#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mopuc/eig.hpp"
#include "mopuc/json_io.hpp"
#include "mopuc/kernels.hpp"
#include "mopuc/quadrature.hpp"
#include "mopuc/rakhmanov.hpp"
#include "mopuc/recurrence.hpp"

namespace {

// I/O problems are neither config nor numerics; they map to exit 2 like
// other environment/validation failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j;
  in >> j;
  if (in.fail()) throw IoError("cannot parse " + path);
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  write_text(path, j.dump(2) + "\n");
}

int require_int(const nlohmann::json& j, const char* field, int min_value) {
  if (!j.contains(field)) throw mopuc::InvalidArgument(std::string("config needs ") + field);
  const auto& v = j.at(field);
  if (!v.is_number_integer()) throw mopuc::InvalidArgument(std::string(field) + " must be an integer");
  const int n = v.get<int>();
  if (n < min_value)
    throw mopuc::InvalidArgument(std::string(field) + " must be >= " + std::to_string(min_value));
  return n;
}

int optional_int(const nlohmann::json& j, const char* field, int fallback, int min_value) {
  if (!j.contains(field)) return fallback;
  return require_int(j, field, min_value);
}

// ---------------------------------------------------------------------------
// moments

struct MomentsJob {
  mopuc::MatMeasure rho;
  int order;
};

MomentsJob parse_moments(const nlohmann::json& j) {
  if (!j.contains("measure")) throw mopuc::InvalidArgument("config needs a measure field");
  mopuc::MatMeasure rho = mopuc::MatMeasure::from_json(j.at("measure"));
  int order;
  if (j.contains("M")) {
    order = require_int(j, "M", 0);
  } else if (j.contains("N")) {
    order = 2 * require_int(j, "N", 0) + 2;
  } else {
    throw mopuc::InvalidArgument("config needs M (moment order) or N (system degree)");
  }
  return {std::move(rho), order};
}

int run_moments(const MomentsJob& job, const std::string& out_path) {
  const mopuc::MomentTable t = mopuc::compute_moments(job.rho, job.order);
  nlohmann::json moments = nlohmann::json::array();
  for (int m = -job.order; m <= job.order; ++m)
    moments.push_back({{"m", m}, {"value", mopuc::mat_to_json(t.mu(m))}});
  write_json(out_path, nlohmann::json{{"schema", 1},
                                      {"p", t.dim()},
                                      {"M", job.order},
                                      {"moments", moments}});
  return 0;
}

// ---------------------------------------------------------------------------
// opuc

struct OpucJob {
  mopuc::MatMeasure rho;
  int n_max;
};

OpucJob parse_opuc(const nlohmann::json& j) {
  if (!j.contains("measure")) throw mopuc::InvalidArgument("config needs a measure field");
  return {mopuc::MatMeasure::from_json(j.at("measure")), require_int(j, "N", 0)};
}

int run_opuc(const OpucJob& job, const std::string& out_path) {
  const mopuc::OpucSystem sys = mopuc::build_system(job.rho, job.n_max);
  nlohmann::json out = mopuc::system_to_json(sys);
  out["measureHash"] = mopuc::fnv1a64_hex(job.rho.to_json().dump());
  write_json(out_path, out);
  return 0;
}

// ---------------------------------------------------------------------------
// favard

struct FavardJob {
  mopuc::ReflectionSequence seq;
  std::optional<mopuc::CMat> phi0;
  int quad_points;
};

FavardJob parse_favard(const nlohmann::json& j) {
  FavardJob job{mopuc::sequence_from_json(j), std::nullopt,
                optional_int(j, "quadPoints", mopuc::kDefaultQuadPoints, 2)};
  mopuc::validate(job.seq);
  if (j.contains("phi0")) job.phi0 = mopuc::mat_from_json(j.at("phi0"), job.seq.p);
  return job;
}

int run_favard(const FavardJob& job, const std::string& out_path) {
  const mopuc::OpucSystem sys = job.phi0 ? mopuc::favard_synthesize(job.seq, *job.phi0)
                                         : mopuc::favard_synthesize(job.seq);
  const double discrepancy = mopuc::roundtrip_discrepancy(job.seq, job.quad_points);
  nlohmann::json out{{"schema", 1},
                     {"system", mopuc::system_to_json(sys)},
                     {"roundtripMaxSvDiscrepancy", discrepancy}};
  write_json(out_path, out);
  return 0;
}

// ---------------------------------------------------------------------------
// scan

struct ScanJob {
  mopuc::MatMeasure rho;
  int n_max;
  int l_max;
  int resolution;
};

ScanJob parse_scan(const nlohmann::json& j) {
  if (!j.contains("measure")) throw mopuc::InvalidArgument("config needs a measure field");
  ScanJob job{mopuc::MatMeasure::from_json(j.at("measure")), require_int(j, "N", 1),
              optional_int(j, "Lmax", 8, 1), optional_int(j, "resolution", 1024, 512)};
  if (job.resolution % 2 != 0)
    throw mopuc::InvalidArgument("resolution must be a positive multiple of 2");
  return job;
}

int run_scan(const ScanJob& job, const std::string& out_path, const std::string& csv_path) {
  const mopuc::DecayReport report = mopuc::scan(job.rho, job.n_max, job.l_max, job.resolution);
  write_json(out_path, mopuc::report_to_json(report));
  if (!csv_path.empty()) write_text(csv_path, mopuc::report_to_csv(report));
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyJob {
  std::optional<mopuc::OpucSystem> system;          // from "system"/"systemFile"/"H"/"random"
  std::optional<mopuc::MatMeasure> rho;             // from "measure" + "N"
  int n_max = 0;
};

VerifyJob parse_verify(const nlohmann::json& j) {
  VerifyJob job;
  int sources = 0;
  if (j.contains("measure")) ++sources;
  if (j.contains("system")) ++sources;
  if (j.contains("systemFile")) ++sources;
  if (j.contains("H")) ++sources;
  if (j.contains("random")) ++sources;
  if (sources != 1)
    throw mopuc::InvalidArgument(
        "config needs exactly one of: measure, system, systemFile, H, random");

  if (j.contains("measure")) {
    job.rho = mopuc::MatMeasure::from_json(j.at("measure"));
    job.n_max = require_int(j, "N", 0);
  } else if (j.contains("system")) {
    job.system = mopuc::system_from_json(j.at("system"));
  } else if (j.contains("systemFile")) {
    job.system = mopuc::system_from_json(load_json(j.at("systemFile").get<std::string>()));
  } else if (j.contains("H")) {
    mopuc::ReflectionSequence seq = mopuc::sequence_from_json(j);
    mopuc::validate(seq);
    job.system = mopuc::favard_synthesize(seq);
  } else {
    const auto& r = j.at("random");
    const int p = require_int(r, "p", 1);
    const int n = require_int(r, "N", 1);
    const int seed = optional_int(r, "seed", 0, 0);
    double max_norm = 0.8;
    if (r.contains("maxNorm")) {
      max_norm = r.at("maxNorm").get<double>();
      if (!(max_norm > 0.0 && max_norm <= 1.0 - 1e-8))
        throw mopuc::InvalidArgument("maxNorm must lie in (0, 1 - 1e-8]");
    }
    job.system = mopuc::favard_synthesize(
        mopuc::random_reflection_sequence(p, n, static_cast<std::uint64_t>(seed), max_norm));
  }
  return job;
}

int run_verify(VerifyJob& job, const std::string& out_path) {
  std::optional<mopuc::MomentTable> table;
  if (job.rho) {
    table = mopuc::compute_moments(*job.rho, 2 * job.n_max + 2);
    job.system = mopuc::build_system(*table, job.n_max);
  }
  const mopuc::OpucSystem& sys = *job.system;
  const auto grid = mopuc::default_cd_grid();
  const std::vector<double> angles = mopuc::uniform_circle(128);

  double cd = 0.0, circle = 0.0, ratio_unit = 0.0;
  double hn_slack = -1e300, ratio_slack = -1e300;
  for (int n = 1; n <= sys.n_max; ++n) {
    cd = std::max(cd, mopuc::cd_residual(sys, n, grid));
    circle = std::max(circle, mopuc::circle_identity_residual(sys, n, angles));
    ratio_unit = std::max(ratio_unit, mopuc::ratio_unitarity_deviation(sys, n, angles));
    ratio_slack = std::max(ratio_slack, mopuc::ratio_deviation(sys, n, 512) -
                                            mopuc::spectral_norm(sys.reflection(n)));
  }
  for (int n = 0; n + 1 <= sys.n_max; ++n) {
    const double h_next = mopuc::spectral_norm(sys.reflection(n + 1));
    const int l_fit = std::min(3, sys.n_max - n);
    for (int ell = 1; ell <= l_fit; ++ell)
      hn_slack = std::max(h_next - mopuc::nevai_integral(sys, n, ell, 512), hn_slack);
  }
  const double ladder = sys.n_max >= 1 ? mopuc::leading_ladder_residual(sys) : 0.0;
  const double ortho =
      table ? mopuc::orthonormality_residual(sys, *table) : 0.0;

  const bool pass = cd <= 1e-9 && circle <= 1e-10 && ratio_unit <= 1e-10 && ladder <= 1e-9 &&
                    (sys.n_max < 1 || (hn_slack <= 1e-9 && ratio_slack <= 1e-10)) &&
                    ortho <= 1e-9;

  nlohmann::json out{{"schema", 1},
                     {"p", sys.p},
                     {"N", sys.n_max},
                     {"pass", pass},
                     {"cdResidual", cd},
                     {"circleIdentityResidual", circle},
                     {"ratioUnitarityDeviation", ratio_unit},
                     {"leadingLadderResidual", ladder},
                     {"hnBoundSlack", sys.n_max >= 1 ? nlohmann::json(hn_slack) : nlohmann::json(nullptr)},
                     {"ratioDeviationSlack",
                      sys.n_max >= 1 ? nlohmann::json(ratio_slack) : nlohmann::json(nullptr)},
                     {"orthonormalityResidual", table ? nlohmann::json(ortho) : nlohmann::json(nullptr)}};
  write_json(out_path, out);
  if (!pass) {
    std::cerr << "verify: residual breach\n";
    return kExitNumerical;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix measures on the unit circle: moments, orthonormal polynomial systems, "
               "reflection coefficients, decay diagnostics"};
  app.require_subcommand(1);

  std::string config_path, out_path, csv_path;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file")->required();
    cmd->add_option("--out", out_path, "output JSON file")->required();
  };

  CLI::App* cmd_moments = app.add_subcommand("moments", "trigonometric moment table of a measure");
  add_common(cmd_moments);
  CLI::App* cmd_opuc = app.add_subcommand("opuc", "orthonormal system of a measure");
  add_common(cmd_opuc);
  CLI::App* cmd_favard =
      app.add_subcommand("favard", "synthesize a system from reflection coefficients");
  add_common(cmd_favard);
  CLI::App* cmd_scan = app.add_subcommand("scan", "reflection decay diagnostics over degrees");
  add_common(cmd_scan);
  cmd_scan->add_option("--csv", csv_path, "also write the row table as CSV");
  CLI::App* cmd_verify = app.add_subcommand("verify", "check structural identities of a system");
  add_common(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  // Phase 1: load and validate the config. Anything thrown here is a config
  // problem, exit 2.
  nlohmann::json config;
  std::optional<MomentsJob> moments_job;
  std::optional<OpucJob> opuc_job;
  std::optional<FavardJob> favard_job;
  std::optional<ScanJob> scan_job;
  std::optional<VerifyJob> verify_job;
  try {
    config = load_json(config_path);
    if (cmd_moments->parsed()) moments_job = parse_moments(config);
    if (cmd_opuc->parsed()) opuc_job = parse_opuc(config);
    if (cmd_favard->parsed()) favard_job = parse_favard(config);
    if (cmd_scan->parsed()) scan_job = parse_scan(config);
    if (cmd_verify->parsed()) verify_job = parse_verify(config);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  // Phase 2: compute and write. Library failures here are numerical, exit 3;
  // output I/O failures stay environmental, exit 2.
  try {
    if (moments_job) return run_moments(*moments_job, out_path);
    if (opuc_job) return run_opuc(*opuc_job, out_path);
    if (favard_job) return run_favard(*favard_job, out_path);
    if (scan_job) return run_scan(*scan_job, out_path, csv_path);
    if (verify_job) return run_verify(*verify_job, out_path);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
