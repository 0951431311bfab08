// Timing comparison of the serial reference paths against the OpenMP kernels:
// boundary sweeps, see-saw restarts, Monte Carlo shards, the polytope grid
// oracle, and the multistart planar-correlation search.

#include <chrono>
#include <cstdio>
#include <random>

#include "rotbox/bell.hpp"
#include "rotbox/games.hpp"
#include "rotbox/qset.hpp"
#include "rotbox/rset.hpp"

namespace {

using rotbox::Exec;

template <class F>
double time_ms(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("%-28s %13s %13s %9s   (%d threads)\n", "kernel", "serial",
              "openmp", "speedup", rotbox::hardware_threads());

  {
    rotbox::rset::Direction v1 = rotbox::rset::Direction::zero(3);
    rotbox::rset::Direction v2 = rotbox::rset::Direction::zero(3);
    v1.w[3] = 1.0;  // c_2
    v2.w[6] = 1.0;  // s_3
    double s = 0, p = 0;
    s = time_ms([&] { (void)rotbox::rset::boundary_sweep(v1, v2, 3, 48, Exec::Serial); });
    p = time_ms([&] { (void)rotbox::rset::boundary_sweep(v1, v2, 3, 48, Exec::Parallel); });
    report("boundary_sweep (48 angles)", s, p);
  }

  {
    rotbox::rset::Direction dir = rotbox::rset::Direction::zero(3);
    dir.w[3] = 1.0;
    dir.w[6] = 1.0;
    rotbox::qset::SeesawOptions opts;
    opts.restarts = 64;
    opts.seed = 7;
    double s = 0, p = 0;
    opts.exec = Exec::Serial;
    s = time_ms([&] { (void)rotbox::qset::seesaw(dir, 3, opts); });
    opts.exec = Exec::Parallel;
    p = time_ms([&] { (void)rotbox::qset::seesaw(dir, 3, opts); });
    report("seesaw (64 restarts)", s, p);
  }

  {
    rotbox::TrigPoly box({0.4, 0.0, 0.35, 0.0}, {0.25, 0.0, 0.25});
    double s = 0, p = 0;
    s = time_ms([&] { (void)rotbox::games::game_monte_carlo(box, 4000000, 3, Exec::Serial); });
    p = time_ms([&] { (void)rotbox::games::game_monte_carlo(box, 4000000, 3, Exec::Parallel); });
    report("game_monte_carlo (4e6)", s, p);
  }

  {
    double s = 0, p = 0;
    s = time_ms([&] { (void)rotbox::qset::polytope_grid_oracle(250, Exec::Serial); });
    p = time_ms([&] { (void)rotbox::qset::polytope_grid_oracle(250, Exec::Parallel); });
    report("polytope_grid_oracle (250)", s, p);
  }

  {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    rotbox::bell::CorrelationTensor t = rotbox::bell::CorrelationTensor::zero(4);
    for (auto& v : t.t) v = u(rng);
    double s = 0, p = 0;
    s = time_ms([&] { (void)rotbox::bell::nagata_inequality(t, Exec::Serial); });
    p = time_ms([&] { (void)rotbox::bell::nagata_inequality(t, Exec::Parallel); });
    report("nagata multistart (N=4)", s, p);
  }

  return 0;
}
