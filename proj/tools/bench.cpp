// Compares the serial reference kernels against their OpenMP versions on the
// three data-parallel sweeps and reports wall time plus result equality.

#include <chrono>
#include <cstdio>
#include <string>

#include "leib/identities.hpp"
#include "leib/parallel.hpp"
#include "leib/report.hpp"
#include "leib/series.hpp"
#include "leib/special_numbers.hpp"
#include "leib/unipoly.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Row {
  std::string name;
  double serial_ms;
  double parallel_ms;
  bool equal;
};

Row bench_series_product(unsigned order) {
  leib::TruncSeries a(order), b(order);
  for (unsigned n = 0; n <= order; ++n) {
    a.set_coeff(n, leib::leibnitz_polynomial(n % 24));
    b.set_coeff(n, leib::UniPoly::monomial(n % 7, leib::Rational(static_cast<long>(n) + 1,
                                                                 2 * n + 3)));
  }
  auto t0 = Clock::now();
  leib::TruncSeries serial = leib::mul(a, b, leib::Exec::serial);
  double ts = ms_since(t0);
  auto t1 = Clock::now();
  leib::TruncSeries parallel = leib::mul(a, b, leib::Exec::parallel);
  double tp = ms_since(t1);
  return {"cauchy-product order=" + std::to_string(order), ts, tp, serial == parallel};
}

Row bench_triangle(unsigned n_max) {
  auto t0 = Clock::now();
  auto serial = leib::cross_check_triangle(n_max, leib::Exec::serial);
  double ts = ms_since(t0);
  auto t1 = Clock::now();
  auto parallel = leib::cross_check_triangle(n_max, leib::Exec::parallel);
  double tp = ms_since(t1);
  return {"triangle-sweep n=" + std::to_string(n_max), ts, tp,
          !serial.has_value() && !parallel.has_value()};
}

Row bench_identity_suite(unsigned depth) {
  leib::RunConfig cfg;
  cfg.depth = depth;
  auto t0 = Clock::now();
  leib::VerificationReport serial = leib::run_all(cfg, leib::Exec::serial);
  double ts = ms_since(t0);
  auto t1 = Clock::now();
  leib::VerificationReport parallel = leib::run_all(cfg, leib::Exec::parallel);
  double tp = ms_since(t1);
  return {"identity-suite depth=" + std::to_string(depth), ts, tp,
          leib::to_csv(serial) == leib::to_csv(parallel) && serial.all_pass()};
}

void print_row(const Row& r) {
  std::printf("%-32s %10.1f ms %10.1f ms %7.2fx   %s\n", r.name.c_str(), r.serial_ms,
              r.parallel_ms, r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
              r.equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  std::printf("threads available: %d\n", leib::max_threads());
  std::printf("%-32s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");
  Row rows[] = {
      bench_series_product(quick ? 48u : 160u),
      bench_triangle(quick ? 60u : 260u),
      bench_identity_suite(quick ? 8u : 24u),
  };
  bool all_equal = true;
  for (const Row& r : rows) {
    print_row(r);
    all_equal = all_equal && r.equal;
  }
  return all_equal ? 0 : 1;
}
