#include "mopuc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace mopuc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

QuadRule compute_gauss_legendre(int n) {
  QuadRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const std::size_t slot = static_cast<std::size_t>(n - 1 - i);  // ascending nodes
    rule.nodes[slot] = x;
    rule.weights[slot] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const QuadRule& gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("quadrature order must be positive");
  static std::map<int, QuadRule> cache;
  static std::mutex mutex;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

QuadRule map_rule(const QuadRule& base, double a, double b) {
  if (!(b > a)) throw InvalidArgument("quadrature interval is empty");
  QuadRule out;
  const std::size_t n = base.nodes.size();
  out.nodes.resize(n);
  out.weights.resize(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (std::size_t i = 0; i < n; ++i) {
    out.nodes[i] = mid + half * base.nodes[i];
    out.weights[i] = half * base.weights[i];
  }
  return out;
}

std::vector<double> uniform_circle(int q) {
  if (q < 1) throw InvalidArgument("grid size must be positive");
  std::vector<double> theta(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) theta[static_cast<std::size_t>(i)] = kTwoPi * i / q;
  return theta;
}

CMat integrate_circle(const std::vector<double>& theta, const std::vector<CMat>& values) {
  if (theta.empty()) throw EmptyGrid("integration grid is empty");
  if (theta.size() != values.size())
    throw DimensionMismatch("grid and sample counts differ");
  const std::size_t q = theta.size();
  for (std::size_t i = 0; i < q; ++i) {
    if (!(theta[i] >= 0.0) || !(theta[i] < kTwoPi))
      throw InvalidArgument("grid angles must lie in [0, 2pi)");
    if (i > 0 && !(theta[i] > theta[i - 1]))
      throw InvalidArgument("grid angles must be strictly increasing");
  }
  const int p = values[0].dim();
  CMat acc(p);
  for (std::size_t i = 0; i < q; ++i) {
    const std::size_t j = (i + 1) % q;
    const double dt = (j == 0 ? theta[0] + kTwoPi - theta[i] : theta[j] - theta[i]);
    acc += (0.5 * dt) * (values[i] + values[j]);
  }
  acc *= Complex(1.0 / kTwoPi, 0.0);
  return acc;
}

}  // namespace mopuc
