// Timing comparison of the serial reference kernels against their OpenMP
// counterparts on a midsize group. The two paths must produce identical
// results; the benchmark asserts that before printing the table.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "cgt/bsgs.hpp"
#include "cgt/classes.hpp"
#include "cgt/groupops.hpp"
#include "cgt/machale.hpp"
#include "cgt/oracle.hpp"

using namespace cgt;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Perm> center_elements(const StabilizerChain& chain) {
  return oracle::enumerate_elements(center(chain).group(), 100000).elements;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-34s %10.3fs %10.3fs %9.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t draws = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;

  // wreath(2, A6): order 2^6 * 360 = 23040, degree 12 -- big enough that the
  // conjugacy tests dominate, small enough to finish in seconds.
  std::vector<Perm> a6_gens;
  for (std::size_t i = 2; i < 6; ++i) {
    std::vector<Point> img(6);
    for (std::size_t j = 0; j < 6; ++j) img[j] = static_cast<Point>(j);
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    a6_gens.emplace_back(std::move(img));
  }
  WreathProduct w = wreath_imprimitive(2, PermGroup(6, a6_gens));
  StabilizerChain chain = StabilizerChain::build(w.group);
  std::printf("group: wreath(2, A6), order %s, degree %zu, %d threads\n",
              chain.order().to_string().c_str(), chain.degree(), omp_get_max_threads());

  // class enumeration
  RandomStream rng_serial(7), rng_parallel(7);
  EnumerateOptions serial_opts, parallel_opts;
  serial_opts.parallel = false;
  parallel_opts.parallel = true;
  auto t0 = std::chrono::steady_clock::now();
  ClassInventory inv_serial = enumerate_classes(chain, center_elements(chain), rng_serial, serial_opts);
  double enum_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  ClassInventory inv_parallel =
      enumerate_classes(chain, center_elements(chain), rng_parallel, parallel_opts);
  double enum_parallel = seconds_since(t0);
  if (inv_serial.classes().size() != inv_parallel.classes().size()) {
    std::fprintf(stderr, "kernel mismatch: %zu vs %zu classes\n", inv_serial.classes().size(),
                 inv_parallel.classes().size());
    return 1;
  }
  for (std::size_t i = 0; i < inv_serial.classes().size(); ++i) {
    if (!(inv_serial.classes()[i].representative == inv_parallel.classes()[i].representative)) {
      std::fprintf(stderr, "kernel mismatch at class %zu\n", i);
      return 1;
    }
  }

  // batch class assignment
  std::vector<Perm> batch;
  RandomStream rng(99);
  batch.reserve(draws);
  for (std::size_t i = 0; i < draws; ++i) batch.push_back(chain.random_element(rng));
  t0 = std::chrono::steady_clock::now();
  auto serial_assign = assign_batch_serial(inv_serial, chain, batch);
  double assign_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel_assign = assign_batch_parallel(inv_serial, chain, batch);
  double assign_parallel = seconds_since(t0);
  if (serial_assign != parallel_assign) {
    std::fprintf(stderr, "assign kernel mismatch\n");
    return 1;
  }

  // witness coverage of the commutator classes, on wreath(2, A5) where the
  // reference commutator set is cheap to enumerate
  std::vector<Perm> a5_gens;
  for (std::size_t i = 2; i < 5; ++i) {
    std::vector<Point> img(5);
    for (std::size_t j = 0; j < 5; ++j) img[j] = static_cast<Point>(j);
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    a5_gens.emplace_back(std::move(img));
  }
  WreathProduct w5 = wreath_imprimitive(2, PermGroup(5, a5_gens));
  StabilizerChain chain5 = StabilizerChain::build(w5.group);
  RandomStream crng5(7);
  EnumerateOptions eo5;
  ClassInventory inv5 = enumerate_classes(chain5, center_elements(chain5), crng5, eo5);
  RandomStream wrng_serial(3), wrng_parallel(3);
  machale::WitnessOptions wopts_serial, wopts_parallel;
  wopts_serial.parallel = false;
  wopts_parallel.parallel = true;
  t0 = std::chrono::steady_clock::now();
  auto wit_serial =
      machale::generate_witnesses(chain5, inv5, std::nullopt, wrng_serial, wopts_serial);
  double witness_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto wit_parallel =
      machale::generate_witnesses(chain5, inv5, std::nullopt, wrng_parallel, wopts_parallel);
  double witness_parallel = seconds_since(t0);
  if (wit_serial.size() != wit_parallel.size()) {
    std::fprintf(stderr, "witness kernel mismatch\n");
    return 1;
  }

  std::printf("%zu classes, %zu assignment draws, %zu witnesses\n\n", inv_serial.classes().size(),
              draws, wit_serial.size());
  std::printf("%-34s %11s %11s %10s\n", "kernel", "serial", "openmp", "speedup");
  row("class enumeration", enum_serial, enum_parallel);
  row("batch class assignment", assign_serial, assign_parallel);
  row("commutator witness coverage", witness_serial, witness_parallel);
  return 0;
}
