// Serial vs OpenMP timings for the sweep evaluator and the pairwise Jordan kernel.
//
//   bench_sweep [--max-order 16] [--rings z4,z8] [--jobs 4] [--repeat 3]

#include <chrono>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include <CLI11.hpp>

#include "symj/checker.hpp"
#include "symj/sweep.hpp"

using namespace symj;

namespace {

template <class F>
double best_of(int repeat, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(12) << serial << std::setw(12) << parallel << std::setw(10) << std::setprecision(2)
            << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel timings"};
  SweepConfig cfg;
  cfg.rings = {"z4", "z8", "z4xz4", "z4xz2", "dual-z4"};
  int jobs = omp_get_max_threads();
  int repeat = 3;
  app.add_option("--max-order", cfg.max_order);
  app.add_option("--rings", cfg.rings)->delimiter(',');
  app.add_option("--jobs", jobs);
  app.add_option("--repeat", repeat);
  CLI11_PARSE(app, argc, argv);

  const auto inst = enumerate_instances(cfg);
  std::cout << inst.size() << " instances, " << jobs << " threads (" << omp_get_num_procs()
            << " processors)\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "serial s"
            << std::setw(12) << "omp s" << std::setw(11) << "speedup\n";

  for (Mode m : {Mode::Verify, Mode::Lemmas}) {
    const double s = best_of(repeat, [&] { serial::evaluate(inst, m); });
    const double p = best_of(repeat, [&] { omp::evaluate(inst, m, jobs); });
    row("sweep/" + to_string(m), s, p);
  }

  // Largest generator families: the pair kernel on its own.
  std::vector<std::vector<GroupRingElement>> families;
  for (const auto& i : inst) {
    auto g = symmetric_generators(i.tau, i.sigma).all();
    if (g.size() >= 12) families.push_back(std::move(g));
  }
  omp_set_num_threads(jobs);
  std::size_t sink = 0;
  const double ks = best_of(repeat, [&] {
    for (const auto& f : families) sink += check_anticommutative(f).holds;
  });
  const double kp = best_of(repeat, [&] {
    for (const auto& f : families) sink += check_anticommutative_parallel(f).holds;
  });
  row("pair-kernel(" + std::to_string(families.size()) + " families)", ks, kp);
  std::cout << "anticommuting family evaluations: " << sink << "\n";
  return 0;
}
