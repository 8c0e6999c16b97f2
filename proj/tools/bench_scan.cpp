// Compares the OpenMP completeness-scan kernel against the serial
// reference on the two abc monoids and checks the reports agree.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sbw/catalog.hpp"
#include "sbw/ces.hpp"
#include "sbw/reversing.hpp"

using namespace sbw;

namespace {

double run_ms(const Presentation& p, const PositiveWordPartition& part,
              int bound, bool parallel, ScanReport* out) {
  auto t0 = std::chrono::steady_clock::now();
  *out = completeness_scan(p, part, bound, ReversingLimits{}, parallel);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same(const ScanReport& a, const ScanReport& b) {
  return a.counterexamples == b.counterexamples && a.stuck == b.stuck &&
         a.bound_exceeded == b.bound_exceeded &&
         a.equal_pairs == b.equal_pairs;
}

}  // namespace

int main(int argc, char** argv) {
  int bound = argc > 1 ? std::atoi(argv[1]) : 5;
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  int rc = 0;
  for (const char* family :
       {"torus2_complete_candidate", "free_central2"}) {
    Presentation p = build_presentation(family, {});
    const SolverInstance& inst = p.alphabet.size() == 3
                                     ? SolverInstance::torus3()
                                     : SolverInstance::free2();
    auto part = PositiveWordPartition::from_solver(inst, p, bound);
    ScanReport serial, parallel;
    double ts = run_ms(p, part, bound, false, &serial);
    double tp = run_ms(p, part, bound, true, &parallel);
    std::cout << family << " bound " << bound << ": "
              << serial.equal_pairs << " equal pairs\n"
              << "  serial   " << ts << " ms\n"
              << "  parallel " << tp << " ms  (speedup " << ts / tp
              << "x)\n";
    if (!same(serial, parallel)) {
      std::cout << "  MISMATCH between serial and parallel reports\n";
      rc = 1;
    }
  }
  return rc;
}
