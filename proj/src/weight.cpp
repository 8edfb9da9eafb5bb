#include "mopuc/weight.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mopuc/eig.hpp"
#include "mopuc/json_io.hpp"

namespace mopuc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double reduce_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

// Every density must be Hermitian PSD pointwise; sampled on a validation grid
// at construction (panel interiors plus a global sweep when smooth).
void check_psd_grid(const Weight& w) {
  std::vector<double> samples;
  const std::vector<double> bp = w.breakpoints();
  if (bp.empty()) {
    for (int i = 0; i < 64; ++i) samples.push_back(kTwoPi * i / 64.0);
  } else {
    std::vector<double> edges;
    edges.push_back(0.0);
    for (double t : bp) edges.push_back(t);
    edges.push_back(kTwoPi);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
      const double lo = edges[k], hi = edges[k + 1];
      if (!(hi > lo)) continue;
      for (int i = 0; i < 17; ++i) samples.push_back(lo + (hi - lo) * (i + 0.5) / 17.0);
    }
  }
  for (double t : samples) {
    const CMat v = w.value(t);
    if (hermitian_defect(v) > 1e-10 * (1.0 + v.frobenius_norm()))
      throw NotHermitian("density is not Hermitian on the validation grid");
    const SpectralDecomp d = eig_hermitian(v);
    const double top = std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
    if (d.eigenvalues.front() < -1e-12 * (1.0 + top))
      throw NotPsd("density is not PSD on the validation grid");
  }
}

void check_psd_matrix(const CMat& m, const char* what) {
  if (hermitian_defect(m) > 1e-10 * (1.0 + m.frobenius_norm()))
    throw NotHermitian(std::string(what) + " must be Hermitian");
  const SpectralDecomp d = eig_hermitian(m);
  const double top = std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
  if (d.eigenvalues.front() < -1e-12 * (1.0 + top))
    throw NotPsd(std::string(what) + " must be PSD");
}

class IdentityLebesgue final : public Weight {
 public:
  explicit IdentityLebesgue(int p) : p_(p) {
    if (p < 1) throw InvalidArgument("dimension must be positive");
  }
  int dim() const override { return p_; }
  CMat value(double) const override { return CMat::identity(p_); }
  bool analytic_moments() const override { return true; }
  std::optional<CMat> fourier_coefficient(int m) const override {
    return m == 0 ? CMat::identity(p_) : CMat(p_);
  }
  nlohmann::json to_json() const override {
    return nlohmann::json{{"type", "identityLebesgue"}, {"p", p_}};
  }

 private:
  int p_;
};

class TrigPolyWeight final : public Weight {
 public:
  explicit TrigPolyWeight(std::vector<CMat> coeffs) : w_(std::move(coeffs)) {
    if (w_.empty()) throw InvalidArgument("trig poly needs at least the constant coefficient");
    p_ = w_.front().dim();
    for (const auto& c : w_)
      if (c.dim() != p_) throw DimensionMismatch("trig poly coefficient dimensions differ");
    w_.front() = hermitian_part(w_.front());
  }
  int dim() const override { return p_; }
  CMat value(double theta) const override {
    CMat v = w_.front();
    for (std::size_t k = 1; k < w_.size(); ++k) {
      const Complex ph = std::polar(1.0, static_cast<double>(k) * theta);
      v += w_[k] * ph;
      v += w_[k].adjoint() * std::conj(ph);
    }
    return v;
  }
  bool analytic_moments() const override { return true; }
  std::optional<CMat> fourier_coefficient(int m) const override {
    const int k = std::abs(m);
    if (k >= static_cast<int>(w_.size())) return CMat(p_);
    return m >= 0 ? w_[static_cast<std::size_t>(k)] : w_[static_cast<std::size_t>(k)].adjoint();
  }
  nlohmann::json to_json() const override {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : w_) coeffs.push_back(mat_to_json(c));
    return nlohmann::json{{"type", "trigPoly"}, {"p", p_}, {"coeffs", coeffs}};
  }

 private:
  std::vector<CMat> w_;
  int p_;
};

class ArcIndicator final : public Weight {
 public:
  ArcIndicator(double a, double b, double eps, CMat inside, CMat outside)
      : a_(a), b_(b), eps_(eps), in_(std::move(inside)), out_(std::move(outside)) {
    if (!(a >= 0.0) || !(b <= kTwoPi) || !(a < b))
      throw InvalidArgument("arc needs 0 <= a < b <= 2pi");
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw InvalidArgument("arc floor must be >= 0");
    check_same_dim(in_, out_);
    check_psd_matrix(in_, "arc inside value");
    check_psd_matrix(out_, "arc outside value");
  }
  int dim() const override { return in_.dim(); }
  CMat value(double theta) const override {
    const double t = reduce_angle(theta);
    return (t >= a_ && t < b_) ? in_ : Complex(eps_, 0.0) * out_;
  }
  std::vector<double> breakpoints() const override {
    std::vector<double> bp;
    if (a_ > 0.0) bp.push_back(a_);
    if (b_ < kTwoPi) bp.push_back(b_);
    return bp;
  }
  nlohmann::json to_json() const override {
    return nlohmann::json{{"type", "arcIndicator"}, {"p", dim()},    {"a", a_},
                          {"b", b_},                {"eps", eps_},   {"inside", mat_to_json(in_)},
                          {"outside", mat_to_json(out_)}};
  }

 private:
  double a_, b_, eps_;
  CMat in_, out_;
};

class DiagonalScalar final : public Weight {
 public:
  explicit DiagonalScalar(std::vector<WeightPtr> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidArgument("diagonal weight needs at least one entry");
    for (const auto& e : entries_) {
      if (!e) throw InvalidArgument("diagonal weight entry is null");
      if (e->dim() != 1) throw DimensionMismatch("diagonal weight entries must be scalar");
    }
  }
  int dim() const override { return static_cast<int>(entries_.size()); }
  CMat value(double theta) const override {
    CMat v(dim());
    for (int i = 0; i < dim(); ++i)
      v(i, i) = entries_[static_cast<std::size_t>(i)]->value(theta)(0, 0);
    return v;
  }
  std::vector<double> breakpoints() const override {
    std::vector<double> bp;
    for (const auto& e : entries_)
      for (double t : e->breakpoints()) bp.push_back(t);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
  }
  bool analytic_moments() const override {
    for (const auto& e : entries_)
      if (!e->analytic_moments()) return false;
    return true;
  }
  std::optional<CMat> fourier_coefficient(int m) const override {
    CMat v(dim());
    for (int i = 0; i < dim(); ++i) {
      const auto c = entries_[static_cast<std::size_t>(i)]->fourier_coefficient(m);
      if (!c) return std::nullopt;
      v(i, i) = (*c)(0, 0);
    }
    return v;
  }
  nlohmann::json to_json() const override {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : entries_) entries.push_back(e->to_json());
    return nlohmann::json{{"type", "diagonalScalar"}, {"entries", entries}};
  }

 private:
  std::vector<WeightPtr> entries_;
};

class Conjugated final : public Weight {
 public:
  Conjugated(CMat u, WeightPtr inner) : u_(std::move(u)), inner_(std::move(inner)) {
    if (!inner_) throw InvalidArgument("conjugated weight needs an inner weight");
    if (u_.dim() != inner_->dim())
      throw DimensionMismatch("conjugating matrix dimension differs from the weight");
    if (!is_unitary(u_, 1e-10)) throw InvalidArgument("conjugating matrix must be unitary");
  }
  int dim() const override { return inner_->dim(); }
  CMat value(double theta) const override { return u_ * inner_->value(theta) * u_.adjoint(); }
  std::vector<double> breakpoints() const override { return inner_->breakpoints(); }
  nlohmann::json to_json() const override {
    return nlohmann::json{
        {"type", "conjugated"}, {"u", mat_to_json(u_)}, {"inner", inner_->to_json()}};
  }

 private:
  CMat u_;
  WeightPtr inner_;
};

class BernsteinSzego final : public Weight {
 public:
  BernsteinSzego(MatPoly phi_left, MatPoly phi_right)
      : phi_left_(std::move(phi_left)), phi_right_(std::move(phi_right)) {
    if (phi_left_.dim() != phi_right_.dim())
      throw DimensionMismatch("left and right polynomial dimensions differ");
    if (phi_left_.deg() != phi_right_.deg())
      throw InvalidArgument("left and right polynomial degrees differ");
  }
  int dim() const override { return phi_left_.dim(); }
  CMat value(double theta) const override {
    const Complex z = std::polar(1.0, theta);
    const CMat b = phi_left_.eval(z);
    return inverse(b.adjoint() * b);
  }
  const MatPoly& phi_left() const { return phi_left_; }
  const MatPoly& phi_right() const { return phi_right_; }
  nlohmann::json to_json() const override {
    return nlohmann::json{{"type", "bernsteinSzego"},
                          {"phiL", poly_to_json(phi_left_)},
                          {"phiR", poly_to_json(phi_right_)}};
  }

 private:
  MatPoly phi_left_;
  MatPoly phi_right_;
};

}  // namespace

WeightPtr make_identity_lebesgue(int p) {
  auto w = std::make_shared<IdentityLebesgue>(p);
  return w;
}

WeightPtr make_trig_poly(std::vector<CMat> coeffs) {
  auto w = std::make_shared<TrigPolyWeight>(std::move(coeffs));
  check_psd_grid(*w);
  return w;
}

WeightPtr make_arc_indicator(double a, double b, double floor_eps, CMat inside, CMat outside) {
  auto w = std::make_shared<ArcIndicator>(a, b, floor_eps, std::move(inside), std::move(outside));
  return w;
}

WeightPtr make_diagonal(std::vector<WeightPtr> entries) {
  auto w = std::make_shared<DiagonalScalar>(std::move(entries));
  return w;
}

WeightPtr make_conjugated(CMat u, WeightPtr inner) {
  auto w = std::make_shared<Conjugated>(std::move(u), std::move(inner));
  return w;
}

WeightPtr make_bernstein_szego(MatPoly phi_left, MatPoly phi_right) {
  auto w = std::make_shared<BernsteinSzego>(std::move(phi_left), std::move(phi_right));
  check_psd_grid(*w);
  return w;
}

WeightPtr weight_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw InvalidArgument("weight needs a type field");
  const std::string type = j.at("type").get<std::string>();
  if (type == "identityLebesgue") {
    return make_identity_lebesgue(j.at("p").get<int>());
  }
  if (type == "trigPoly") {
    const auto& cj = j.at("coeffs");
    if (!cj.is_array() || cj.empty()) throw InvalidArgument("trigPoly needs coeffs");
    const int p = j.contains("p") ? j.at("p").get<int>() : 0;
    std::vector<CMat> coeffs;
    for (const auto& e : cj) coeffs.push_back(mat_from_json(e, p));
    return make_trig_poly(std::move(coeffs));
  }
  if (type == "arcIndicator") {
    const int p = j.contains("p") ? j.at("p").get<int>() : 0;
    return make_arc_indicator(j.at("a").get<double>(), j.at("b").get<double>(),
                              j.at("eps").get<double>(), mat_from_json(j.at("inside"), p),
                              mat_from_json(j.at("outside"), p));
  }
  if (type == "diagonalScalar") {
    std::vector<WeightPtr> entries;
    for (const auto& e : j.at("entries")) entries.push_back(weight_from_json(e));
    return make_diagonal(std::move(entries));
  }
  if (type == "conjugated") {
    return make_conjugated(mat_from_json(j.at("u")), weight_from_json(j.at("inner")));
  }
  if (type == "bernsteinSzego") {
    return make_bernstein_szego(poly_from_json(j.at("phiL")), poly_from_json(j.at("phiR")));
  }
  throw InvalidArgument("unknown weight type: " + type);
}

}  // namespace mopuc
