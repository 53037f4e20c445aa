#include <doctest.h>

#include <numeric>

#include "icolor/error.hpp"
#include "icolor/obstruction.hpp"

using namespace icolor;

namespace {

// Counts multiples of d among a..b.
std::int64_t multiples_in(std::int64_t a, std::int64_t b, std::int64_t d) {
  std::int64_t n = 0;
  for (std::int64_t x = a; x <= b; ++x) n += x % d == 0;
  return n;
}

}  // namespace

TEST_CASE("worked certificates") {
  const ParityCertificate c11 = parity_certificate(1, 1);
  CHECK(c11 == ParityCertificate{1, 1, 2, 1, 1, 1, 3});
  const ParityCertificate c22 = parity_certificate(2, 2);
  CHECK(c22 == ParityCertificate{2, 2, 3, 1, 1, 1, 5});
  CHECK(c22.d_w + c22.m * c22.d_u + c22.n * c22.d_v == c22.total);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(parity_certificate(1, 2), NoObstruction);
  CHECK_THROWS_AS(parity_certificate(0, 3), PreconditionError);
  CHECK_THROWS_AS(gcd_colorability(3, 0), PreconditionError);
  CHECK_THROWS_AS(parity_certificate(INT64_MAX, 1), LimitsError);
}

TEST_CASE("gcd test") {
  CHECK(gcd_colorability(1, 2));
  CHECK_FALSE(gcd_colorability(1, 1));
  CHECK_FALSE(gcd_colorability(2, 5));
  CHECK(gcd_colorability(1, 6));
  CHECK(gcd_of_shifted(5, 11) == 6);
}

TEST_CASE("property: counts match direct enumeration of multiples of d") {
  // w sees 1..m+n, u_i sees n+1 consecutive colors, v_j sees m+1.
  for (std::int64_t m = 1; m <= 40; ++m) {
    for (std::int64_t n = 1; n <= 40; ++n) {
      const std::int64_t d = std::gcd(m + 1, n + 1);
      if (d == 1) continue;
      CAPTURE(m);
      CAPTURE(n);
      const ParityCertificate c = parity_certificate(m, n);
      CHECK(c.d == d);
      CHECK(c.d_w == multiples_in(1, m + n, d));
      for (std::int64_t start = 1; start <= 5; ++start) {
        CHECK(c.d_u == multiples_in(start, start + n, d));
        CHECK(c.d_v == multiples_in(start, start + m, d));
      }
      CHECK(c.total == c.d_w + m * c.d_u + n * c.d_v);
      CHECK(c.total % 2 == 1);
      CHECK_NOTHROW(c.self_check());
    }
  }
}

TEST_CASE("property: certificates are symmetric in m and n") {
  for (std::int64_t m = 1; m <= 60; ++m) {
    for (std::int64_t n = 1; n <= 60; ++n) {
      if (gcd_colorability(m, n)) continue;
      const ParityCertificate a = parity_certificate(m, n);
      const ParityCertificate b = parity_certificate(n, m);
      CHECK(a.d == b.d);
      CHECK(a.d_w == b.d_w);
      CHECK(a.d_u == b.d_v);
      CHECK(a.total == b.total);
    }
  }
}

TEST_CASE("tampered certificates fail the self check") {
  ParityCertificate c = parity_certificate(3, 5);
  c.d_w += 1;
  CHECK_THROWS_AS(c.self_check(), InvariantViolation);
}

TEST_CASE("certificate JSON round-trips") {
  const ParityCertificate c = parity_certificate(5, 7);
  CHECK(certificate_from_json(to_json(c)) == c);
  CHECK(to_json(c).dump() == R"({"d":2,"d_u":4,"d_v":3,"d_w":6,"m":5,"n":7,"total":47})");
}
