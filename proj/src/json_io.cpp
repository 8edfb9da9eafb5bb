#include "mopuc/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace mopuc {

nlohmann::json mat_to_json(const CMat& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return entries;
}

CMat mat_from_json(const nlohmann::json& j, int expected_dim) {
  if (!j.is_array()) throw InvalidArgument("matrix must be a JSON array of [re, im] pairs");
  const std::size_t n = j.size();
  const int p = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
  if (p < 1 || static_cast<std::size_t>(p) * static_cast<std::size_t>(p) != n)
    throw InvalidArgument("matrix entry count is not a perfect square");
  if (expected_dim > 0 && p != expected_dim)
    throw DimensionMismatch("matrix dimension does not match the declared p");
  std::vector<Complex> entries;
  entries.reserve(n);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw InvalidArgument("matrix entry must be a [re, im] number pair");
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return CMat(p, std::move(entries));
}

nlohmann::json poly_to_json(const MatPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k <= p.deg(); ++k) coeffs.push_back(mat_to_json(p.coeff(k)));
  return nlohmann::json{{"p", p.dim()}, {"deg", p.deg()}, {"coeffs", coeffs}};
}

MatPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("deg") || !j.contains("coeffs"))
    throw InvalidArgument("polynomial needs fields p, deg, coeffs");
  const int p = j.at("p").get<int>();
  const int deg = j.at("deg").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != deg + 1)
    throw InvalidArgument("coefficient count must equal deg + 1");
  std::vector<CMat> c;
  c.reserve(coeffs.size());
  for (const auto& e : coeffs) c.push_back(mat_from_json(e, p));
  return MatPoly(std::move(c));
}

nlohmann::json system_to_json(const OpucSystem& sys) {
  nlohmann::json phi_left = nlohmann::json::array();
  nlohmann::json phi_right = nlohmann::json::array();
  nlohmann::json reflections = nlohmann::json::array();
  for (const auto& p : sys.phi_left) phi_left.push_back(poly_to_json(p));
  for (const auto& p : sys.phi_right) phi_right.push_back(poly_to_json(p));
  for (const auto& h : sys.reflections) reflections.push_back(mat_to_json(h));
  return nlohmann::json{
      {"schema", 1},
      {"p", sys.p},
      {"N", sys.n_max},
      {"normalization", sys.normalization == Normalization::kRecurrence ? "recurrence" : "hpd"},
      {"phiL", phi_left},
      {"phiR", phi_right},
      {"H", reflections}};
}

OpucSystem system_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("N") || !j.contains("phiL") ||
      !j.contains("phiR") || !j.contains("H"))
    throw InvalidArgument("system needs fields p, N, phiL, phiR, H");
  OpucSystem sys;
  sys.p = j.at("p").get<int>();
  sys.n_max = j.at("N").get<int>();
  if (sys.p < 1 || sys.n_max < 0) throw InvalidArgument("system has invalid p or N");
  const std::string norm =
      j.contains("normalization") ? j.at("normalization").get<std::string>() : "recurrence";
  if (norm != "recurrence" && norm != "hpd")
    throw InvalidArgument("normalization must be recurrence or hpd");
  sys.normalization = norm == "recurrence" ? Normalization::kRecurrence : Normalization::kHpd;

  const auto& pl = j.at("phiL");
  const auto& pr = j.at("phiR");
  const auto& hs = j.at("H");
  if (static_cast<int>(pl.size()) != sys.n_max + 1 ||
      static_cast<int>(pr.size()) != sys.n_max + 1 ||
      static_cast<int>(hs.size()) != sys.n_max)
    throw InvalidArgument("system field lengths do not match N");
  for (int n = 0; n <= sys.n_max; ++n) {
    sys.phi_left.push_back(poly_from_json(pl[static_cast<std::size_t>(n)]));
    sys.phi_right.push_back(poly_from_json(pr[static_cast<std::size_t>(n)]));
    if (sys.phi_left.back().dim() != sys.p || sys.phi_right.back().dim() != sys.p)
      throw DimensionMismatch("system polynomial dimension differs from p");
    if (sys.phi_left.back().deg() != n || sys.phi_right.back().deg() != n)
      throw InvalidArgument("system polynomial formal degree must equal its index");
  }
  for (const auto& h : hs) sys.reflections.push_back(mat_from_json(h, sys.p));
  return sys;
}

nlohmann::json sequence_to_json(const ReflectionSequence& seq) {
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : seq.h) hs.push_back(mat_to_json(h));
  return nlohmann::json{{"p", seq.p}, {"H", hs}};
}

ReflectionSequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("H"))
    throw InvalidArgument("reflection sequence needs fields p and H");
  ReflectionSequence seq;
  seq.p = j.at("p").get<int>();
  for (const auto& h : j.at("H")) seq.h.push_back(mat_from_json(h, seq.p));
  return seq;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char byte : s) {
    h ^= byte;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view s) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(s)));
  return std::string(buf);
}

std::string format_double17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

}  // namespace mopuc
