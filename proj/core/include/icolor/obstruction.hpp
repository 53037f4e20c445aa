#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

#include "icolor/error.hpp"

namespace icolor {

// Counting certificate that K_{1,m,n} has no interval coloring when
// d = gcd(m+1, n+1) > 1. Call an edge a d-edge when its color is a multiple of
// d. After shifting any interval coloring so that w sees exactly 1..m+n, each
// vertex sees a fixed number of d-edges:
//   w:   (m+n+2)/d - 1
//   u_i: (n+1)/d        (its n+1 consecutive colors)
//   v_j: (m+1)/d        (its m+1 consecutive colors)
// The sum over all vertices counts every d-edge twice, yet equals
// 2(m+1)(n+1)/d - 1, which is odd.
struct ParityCertificate {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t d_w = 0;
  std::int64_t d_u = 0;
  std::int64_t d_v = 0;
  std::int64_t total = 0;

  // Recomputes the per-vertex counts and the total both by summation and by
  // the closed form; throws InvariantViolation on any mismatch, remainder or
  // even total.
  void self_check() const;

  friend bool operator==(const ParityCertificate&, const ParityCertificate&) = default;
};

std::int64_t gcd_of_shifted(std::int64_t m, std::int64_t n);

// True iff gcd(m+1, n+1) = 1. Throws PreconditionError for m < 1 or n < 1.
bool gcd_colorability(std::int64_t m, std::int64_t n);

// Throws NoObstruction when gcd(m+1, n+1) = 1, PreconditionError for
// non-positive parameters, LimitsError on 64-bit overflow.
ParityCertificate parity_certificate(std::int64_t m, std::int64_t n);

nlohmann::json to_json(const ParityCertificate& cert);
ParityCertificate certificate_from_json(const nlohmann::json& j);

// Raised by the constructor when asked to color K_{1,m,n} with
// gcd(m+1, n+1) > 1.
class NotColorable : public Error {
 public:
  explicit NotColorable(ParityCertificate cert);
  const ParityCertificate& certificate() const { return cert_; }

 private:
  ParityCertificate cert_;
};

}  // namespace icolor
