// Compares the serial reference kernels against the OpenMP versions on a
// medium-sized instance and checks that the outputs are identical.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "funcfield/enumerate.hpp"
#include "funcfield/text.hpp"

using namespace funcfield;
namespace chrono = std::chrono;

namespace {

double seconds_since(chrono::steady_clock::time_point t0) {
  return chrono::duration_cast<chrono::microseconds>(chrono::steady_clock::now() - t0)
             .count() /
         1e6;
}

}  // namespace

int main(int argc, char** argv) {
  long N = argc > 1 ? std::atol(argv[1]) : 120;
  int max_jobs = 4;
#ifdef _OPENMP
  max_jobs = std::min(8, omp_get_max_threads());
#endif

  SimpleRecurrence rec({parse_ratfunc("x"), parse_ratfunc("x+1")},
                       {parse_ratfunc("1"), parse_ratfunc("-1")});
  SSet s({parse_poly("x"), parse_poly("x+1")}, true);

  std::cout << "s-unit pair enumeration, N = " << N << "\n";
  auto t0 = chrono::steady_clock::now();
  auto serial = enumerate_sunit_sums_serial(rec, 2, s, N);
  double t_serial = seconds_since(t0);
  std::cout << "  serial: " << t_serial << " s, " << serial.size() << " solutions\n";
  for (int jobs = 2; jobs <= max_jobs; jobs *= 2) {
    t0 = chrono::steady_clock::now();
    auto par = enumerate_sunit_sums(rec, 2, s, N, jobs);
    double t_par = seconds_since(t0);
    std::cout << "  " << jobs << " jobs: " << t_par << " s, speedup "
              << (t_par > 0 ? t_serial / t_par : 0.0)
              << (par == serial ? "" : "  MISMATCH") << "\n";
  }

  SimpleRecurrence U({parse_ratfunc("x-1"), parse_ratfunc("x-2")},
                     {parse_ratfunc("1"), parse_ratfunc("1")});
  SimpleRecurrence V({parse_ratfunc("x-1"), parse_ratfunc("x-2")},
                     {parse_ratfunc("1"), parse_ratfunc("-2")});
  SimpleRecurrence W({parse_ratfunc("x-2"), parse_ratfunc("x-1")},
                     {parse_ratfunc("1"), parse_ratfunc("-2")});
  long M = N / 2;
  std::cout << "triple-zero scan, N = " << M << "\n";
  t0 = chrono::steady_clock::now();
  auto tser = enumerate_triple_fast(U, V, W, M, false, 1);
  double t_tser = seconds_since(t0);
  std::cout << "  serial: " << t_tser << " s, " << tser.size() << " solutions\n";
  for (int jobs = 2; jobs <= max_jobs; jobs *= 2) {
    t0 = chrono::steady_clock::now();
    auto tpar = enumerate_triple_fast(U, V, W, M, false, jobs);
    double t_tpar = seconds_since(t0);
    std::cout << "  " << jobs << " jobs: " << t_tpar << " s, speedup "
              << (t_tpar > 0 ? t_tser / t_tpar : 0.0)
              << (tpar == tser ? "" : "  MISMATCH") << "\n";
  }
  return 0;
}
