#include "mopuc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mopuc/eig.hpp"
#include "mopuc/json_io.hpp"
#include "mopuc/parallel.hpp"
#include "mopuc/quadrature.hpp"

namespace mopuc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double reduce_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

void require_psd(const CMat& m, const char* what) {
  if (hermitian_defect(m) > 1e-10 * (1.0 + m.frobenius_norm()))
    throw NotHermitian(std::string(what) + " must be Hermitian");
  const SpectralDecomp d = eig_hermitian(m);
  const double top = std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
  if (d.eigenvalues.front() < -1e-12 * (1.0 + top))
    throw NotPsd(std::string(what) + " must be PSD");
}

}  // namespace

MatMeasure::MatMeasure(WeightPtr weight, std::vector<Atom> atoms, int quad_points)
    : weight_(std::move(weight)), atoms_(std::move(atoms)), quad_points_(quad_points) {
  if (!weight_) throw InvalidArgument("measure needs a weight");
  if (quad_points_ < 2 || quad_points_ % 2 != 0)
    throw InvalidArgument("quadPoints must be a positive multiple of 2");
  for (auto& atom : atoms_) {
    if (!std::isfinite(atom.theta)) throw InvalidArgument("atom angle must be finite");
    atom.theta = reduce_angle(atom.theta);
    if (atom.mass.dim() != weight_->dim())
      throw DimensionMismatch("atom mass dimension differs from the weight");
    require_psd(atom.mass, "atom mass");
  }
  std::vector<double> angles;
  for (const auto& atom : atoms_) angles.push_back(atom.theta);
  std::sort(angles.begin(), angles.end());
  if (std::adjacent_find(angles.begin(), angles.end()) != angles.end())
    throw InvalidArgument("atom angles must be distinct");
}

nlohmann::json MatMeasure::to_json() const {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& atom : atoms_)
    atoms.push_back({{"theta", atom.theta}, {"mass", mat_to_json(atom.mass)}});
  return nlohmann::json{{"p", dim()},
                        {"weight", weight_->to_json()},
                        {"atoms", atoms},
                        {"quadPoints", quad_points_}};
}

MatMeasure MatMeasure::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("weight"))
    throw InvalidArgument("measure needs a weight field");
  WeightPtr w = weight_from_json(j.at("weight"));
  if (j.contains("p") && j.at("p").get<int>() != w->dim())
    throw DimensionMismatch("declared p differs from the weight dimension");
  std::vector<Atom> atoms;
  if (j.contains("atoms")) {
    for (const auto& a : j.at("atoms"))
      atoms.push_back(Atom{a.at("theta").get<double>(), mat_from_json(a.at("mass"), w->dim())});
  }
  const int q = j.contains("quadPoints") ? j.at("quadPoints").get<int>() : kDefaultQuadPoints;
  return MatMeasure(std::move(w), std::move(atoms), q);
}

MomentTable::MomentTable(int p, int max_order, std::vector<CMat> mu)
    : p_(p), max_order_(max_order), mu_(std::move(mu)) {
  if (p_ < 1) throw InvalidArgument("moment table dimension must be positive");
  if (max_order_ < 0) throw InvalidArgument("moment table order must be nonnegative");
  if (mu_.size() != static_cast<std::size_t>(2 * max_order_ + 1))
    throw DimensionMismatch("moment table needs 2 * max_order + 1 entries");
  for (const auto& m : mu_)
    if (m.dim() != p_) throw DimensionMismatch("moment dimensions differ");
}

const CMat& MomentTable::mu(int m) const {
  if (std::abs(m) > max_order_)
    throw InsufficientMoments("moment order exceeds the table");
  return mu_[static_cast<std::size_t>(m + max_order_)];
}

namespace {

struct SampleGrid {
  std::vector<double> theta;
  std::vector<double> weight;  // includes the 1/2pi of the a.c. part
};

SampleGrid build_grid(const MatMeasure& rho, int q) {
  SampleGrid g;
  const std::vector<double> bp = rho.weight().breakpoints();
  if (bp.empty()) {
    // Smooth periodic density: uniform trapezoid, spectrally accurate.
    g.theta.resize(static_cast<std::size_t>(q));
    g.weight.assign(static_cast<std::size_t>(q), 1.0 / q);
    for (int i = 0; i < q; ++i) g.theta[static_cast<std::size_t>(i)] = kTwoPi * i / q;
    return g;
  }
  // Jumps present: Gauss-Legendre per panel. Nodes are strictly interior, so
  // the density is analytic on every closed panel it is sampled on.
  std::vector<double> edges;
  edges.push_back(0.0);
  for (double t : bp)
    if (t > 0.0 && t < kTwoPi) edges.push_back(t);
  edges.push_back(kTwoPi);
  const QuadRule& base = gauss_legendre(q);
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    if (!(edges[k + 1] > edges[k])) continue;
    const QuadRule panel = map_rule(base, edges[k], edges[k + 1]);
    for (std::size_t i = 0; i < panel.nodes.size(); ++i) {
      g.theta.push_back(panel.nodes[i]);
      g.weight.push_back(panel.weights[i] / kTwoPi);
    }
  }
  return g;
}

// mu_m of the a.c. part alone, on a fixed grid. The loop over sample index is
// always serial and ascending; parallelism is over m only, so serial and
// parallel runs produce identical bits.
std::vector<CMat> weight_moments(const MatMeasure& rho, int max_order, int q, bool parallel) {
  const int p = rho.dim();
  const SampleGrid grid = build_grid(rho, q);
  const std::size_t npts = grid.theta.size();

  std::vector<CMat> samples(npts, CMat(p));
  const Weight& w = rho.weight();
  auto sample_one = [&](std::size_t i) { samples[i] = hermitian_part(w.value(grid.theta[i])); };
  if (parallel) {
    par::for_each_index(npts, sample_one);
  } else {
    for (std::size_t i = 0; i < npts; ++i) sample_one(i);
  }

  const std::size_t count = static_cast<std::size_t>(2 * max_order + 1);
  std::vector<CMat> mu(count, CMat(p));
  auto accumulate_one = [&](std::size_t slot) {
    const int m = static_cast<int>(slot) - max_order;
    CMat acc(p);
    for (std::size_t i = 0; i < npts; ++i) {
      const Complex f = grid.weight[i] * std::polar(1.0, -m * grid.theta[i]);
      acc += samples[i] * f;
    }
    mu[slot] = acc;
  };
  if (parallel) {
    par::for_each_index(count, accumulate_one);
  } else {
    for (std::size_t slot = 0; slot < count; ++slot) accumulate_one(slot);
  }
  return mu;
}

MomentTable assemble_moments(const MatMeasure& rho, int max_order, bool parallel) {
  if (max_order < 0) throw InvalidArgument("moment order must be nonnegative");
  const int p = rho.dim();
  const std::size_t count = static_cast<std::size_t>(2 * max_order + 1);

  std::vector<CMat> mu(count, CMat(p));
  if (rho.weight().analytic_moments()) {
    for (std::size_t slot = 0; slot < count; ++slot) {
      const int m = static_cast<int>(slot) - max_order;
      const auto c = rho.weight().fourier_coefficient(m);
      if (!c) throw InvalidArgument("weight reports analytic moments but gave none");
      mu[slot] = *c;
    }
  } else {
    const int q = rho.quad_points();
    const std::vector<CMat> coarse = weight_moments(rho, max_order, q, parallel);
    std::vector<CMat> fine = weight_moments(rho, max_order, 2 * q, parallel);
    const double scale =
        1.0 + spectral_norm(fine[static_cast<std::size_t>(max_order)]);
    for (std::size_t slot = 0; slot < count; ++slot) {
      if (spectral_norm(fine[slot] - coarse[slot]) > 1e-9 * scale)
        throw QuadratureUnderResolved(
            "moment changed by more than 1e-9 * (1 + |mu_0|) when doubling the grid");
    }
    mu = std::move(fine);
  }

  for (std::size_t slot = 0; slot < count; ++slot) {
    const int m = static_cast<int>(slot) - max_order;
    for (const auto& atom : rho.atoms())
      mu[slot] += atom.mass * std::polar(1.0, -m * atom.theta);
  }
  return MomentTable(p, max_order, std::move(mu));
}

}  // namespace

MomentTable compute_moments(const MatMeasure& rho, int max_order) {
  return assemble_moments(rho, max_order, true);
}

MomentTable compute_moments_serial(const MatMeasure& rho, int max_order) {
  return assemble_moments(rho, max_order, false);
}

CMat moment(const MatMeasure& rho, int m) {
  return compute_moments(rho, std::abs(m)).mu(m);
}

CMat inner_left(const MatPoly& p, const MatPoly& q, const MomentTable& t) {
  if (p.dim() != q.dim() || p.dim() != t.dim())
    throw DimensionMismatch("polynomials and moment table dimensions differ");
  if (std::max(p.deg(), q.deg()) > t.max_order())
    throw InsufficientMoments("moment table too short for these degrees");
  CMat acc(p.dim());
  for (int j = 0; j <= p.deg(); ++j)
    for (int k = 0; k <= q.deg(); ++k) acc += p.coeff(j) * t.mu(k - j) * q.coeff(k).adjoint();
  return acc;
}

CMat inner_right(const MatPoly& p, const MatPoly& q, const MomentTable& t) {
  if (p.dim() != q.dim() || p.dim() != t.dim())
    throw DimensionMismatch("polynomials and moment table dimensions differ");
  if (std::max(p.deg(), q.deg()) > t.max_order())
    throw InsufficientMoments("moment table too short for these degrees");
  CMat acc(p.dim());
  for (int j = 0; j <= p.deg(); ++j)
    for (int k = 0; k <= q.deg(); ++k) acc += p.coeff(j).adjoint() * t.mu(j - k) * q.coeff(k);
  return acc;
}

}  // namespace mopuc
