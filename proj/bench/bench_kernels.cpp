// Timing comparison between the worker-pool kernels and their plain-loop
// reference paths, plus a bit-equality audit of the results. The parallel
// side honors MOPUC_THREADS.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mopuc/measure.hpp"
#include "mopuc/opuc.hpp"
#include "mopuc/parallel.hpp"
#include "mopuc/rakhmanov.hpp"
#include "mopuc/recurrence.hpp"
#include "mopuc/weight.hpp"

using mopuc::Atom;
using mopuc::CMat;
using mopuc::Complex;
using mopuc::MatMeasure;
using mopuc::MomentTable;
using mopuc::OpucSystem;
using Clock = std::chrono::steady_clock;

namespace {

double time_once(const char* label, const std::function<void()>& body) {
  const auto start = Clock::now();
  body();
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("  %-34s %8.3f ms\n", label, 1e3 * s);
  return s;
}

bool tables_equal(const MomentTable& a, const MomentTable& b) {
  if (a.max_order() != b.max_order() || a.dim() != b.dim()) return false;
  for (int m = -a.max_order(); m <= a.max_order(); ++m) {
    const auto& da = a.mu(m).data();
    const auto& db = b.mu(m).data();
    for (std::size_t i = 0; i < da.size(); ++i)
      if (da[i].real() != db[i].real() || da[i].imag() != db[i].imag()) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::printf("worker pool: %d thread(s); set MOPUC_THREADS to override\n",
              mopuc::par::thread_count());

  // A quadrature-path measure: conjugated so every moment needs the grid, at
  // a resolution high enough for the loop to be worth splitting.
  const double r = 1.0 / std::sqrt(2.0);
  CMat u(3);
  u(0, 0) = r;
  u(0, 1) = r;
  u(1, 0) = Complex(0.0, r);
  u(1, 1) = Complex(0.0, -r);
  u(2, 2) = 1.0;
  CMat w0 = CMat::identity(3);
  CMat w1(3);
  w1(0, 0) = 0.45;
  w1(1, 1) = 0.3;
  w1(2, 2) = 0.15;
  w1(0, 1) = Complex(0.1, 0.05);
  const MatMeasure rho(
      mopuc::make_conjugated(u, mopuc::make_trig_poly({w0, w1})),
      {Atom{1.0, 0.25 * CMat::identity(3)}}, 16384);
  const int order = 48;

  std::printf("moment table, p=3, order %d, %d grid points:\n", order, rho.quad_points());
  MomentTable serial_table = mopuc::compute_moments_serial(rho, order);
  MomentTable parallel_table = mopuc::compute_moments(rho, order);
  const double t_moments_serial =
      time_once("plain loop", [&] { serial_table = mopuc::compute_moments_serial(rho, order); });
  const double t_moments_parallel =
      time_once("worker pool", [&] { parallel_table = mopuc::compute_moments(rho, order); });
  std::printf("  speedup %.2fx, results %s\n", t_moments_serial / t_moments_parallel,
              tables_equal(serial_table, parallel_table) ? "bit-identical" : "DIFFER");

  // Decay integrals over a batch of degrees on a fixed system.
  const OpucSystem sys =
      mopuc::favard_synthesize(mopuc::random_reflection_sequence(3, 20, 7, 0.7));
  const int resolution = 8192;
  std::vector<double> serial_vals, parallel_vals;
  auto nevai_batch = [&](bool parallel) {
    std::vector<double> out;
    for (int n = 0; n + 2 <= sys.n_max; n += 2)
      out.push_back(parallel ? mopuc::nevai_integral(sys, n, 2, resolution)
                             : mopuc::nevai_integral_serial(sys, n, 2, resolution));
    return out;
  };
  std::printf("decay integrals, p=3, N=%d, resolution %d:\n", sys.n_max, resolution);
  serial_vals = nevai_batch(false);
  parallel_vals = nevai_batch(true);
  const double t_nevai_serial = time_once("plain loop", [&] { serial_vals = nevai_batch(false); });
  const double t_nevai_parallel =
      time_once("worker pool", [&] { parallel_vals = nevai_batch(true); });
  bool same = serial_vals.size() == parallel_vals.size();
  for (std::size_t i = 0; same && i < serial_vals.size(); ++i)
    same = serial_vals[i] == parallel_vals[i];
  std::printf("  speedup %.2fx, results %s\n", t_nevai_serial / t_nevai_parallel,
              same ? "bit-identical" : "DIFFER");

  // The pool can also be disabled globally; confirm that path matches too.
  mopuc::par::set_enabled(false);
  const std::vector<double> gated = nevai_batch(true);
  mopuc::par::set_enabled(true);
  bool gate_same = gated.size() == parallel_vals.size();
  for (std::size_t i = 0; gate_same && i < gated.size(); ++i)
    gate_same = gated[i] == parallel_vals[i];
  std::printf("disabled-pool path %s the worker-pool results\n",
              gate_same ? "matches" : "DOES NOT match");

  return (tables_equal(serial_table, parallel_table) && same && gate_same) ? 0 : 1;
}
