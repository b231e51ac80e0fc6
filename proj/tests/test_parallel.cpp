#include <doctest.h>

#include "leib/identities.hpp"
#include "leib/parallel.hpp"
#include "leib/series.hpp"
#include "leib/special_numbers.hpp"
#include "support.hpp"

using namespace leib;

// The OpenMP kernels must be bit-identical to their serial references.

TEST_CASE("parallel Cauchy product matches serial") {
  test_support::RandomRationals gen(1717);
  for (int i = 0; i < 4; ++i) {
    TruncSeries a(40), b(40);
    for (unsigned n = 0; n <= 40; ++n) {
      a.set_coeff(n, gen.next_poly(5));
      b.set_coeff(n, gen.next_poly(5));
    }
    CHECK(mul(a, b, Exec::serial) == mul(a, b, Exec::parallel));
  }
}

TEST_CASE("parallel triangle sweep matches serial") {
  CHECK(cross_check_triangle(60, Exec::serial) == std::nullopt);
  CHECK(cross_check_triangle(60, Exec::parallel) == std::nullopt);
}

TEST_CASE("parallel identity suite reproduces the serial report byte for byte") {
  RunConfig cfg;
  cfg.depth = 6;
  VerificationReport serial = run_all(cfg, Exec::serial);
  VerificationReport parallel = run_all(cfg, Exec::parallel);
  CHECK(serial.all_pass());
  CHECK(to_json(serial) == to_json(parallel));
  CHECK(to_csv(serial) == to_csv(parallel));
  CHECK(to_markdown(serial) == to_markdown(parallel));
}
