#include "icolor/obstruction.hpp"

#include <numeric>
#include <string>

namespace icolor {

namespace {

void require_positive(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) {
    throw PreconditionError("parameters must be positive, got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
  }
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw LimitsError("integer overflow in certificate arithmetic");
  }
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw LimitsError("integer overflow in certificate arithmetic");
  }
  return out;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (num % den != 0) {
    throw InvariantViolation(std::string(what) + ": " + std::to_string(num) +
                             " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

std::string describe(const ParityCertificate& c) {
  return "certificate(m=" + std::to_string(c.m) + ", n=" + std::to_string(c.n) +
         ", d=" + std::to_string(c.d) + ")";
}

}  // namespace

std::int64_t gcd_of_shifted(std::int64_t m, std::int64_t n) {
  require_positive(m, n);
  return std::gcd(checked_add(m, 1), checked_add(n, 1));
}

bool gcd_colorability(std::int64_t m, std::int64_t n) { return gcd_of_shifted(m, n) == 1; }

ParityCertificate parity_certificate(std::int64_t m, std::int64_t n) {
  const std::int64_t d = gcd_of_shifted(m, n);
  if (d == 1) {
    throw NoObstruction("gcd(" + std::to_string(m + 1) + ", " + std::to_string(n + 1) +
                        ") = 1; K_{1,m,n} is interval colorable and has no certificate");
  }
  ParityCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.d = d;
  // d divides (m+1) + (n+1), so floor((m+n)/d) = (m+n+2)/d - 1 exactly.
  cert.d_w = exact_div(checked_add(checked_add(m, n), 2), d, "d-edges at w") - 1;
  cert.d_u = exact_div(checked_add(n, 1), d, "d-edges at u_i");
  cert.d_v = exact_div(checked_add(m, 1), d, "d-edges at v_j");
  cert.total = checked_add(cert.d_w, checked_add(checked_mul(m, cert.d_u), checked_mul(n, cert.d_v)));
  cert.self_check();
  return cert;
}

void ParityCertificate::self_check() const {
  if (d <= 1 || m < 1 || n < 1) {
    throw InvariantViolation(describe(*this) + " has no obstruction parameters");
  }
  if (std::gcd(checked_add(m, 1), checked_add(n, 1)) != d) {
    throw InvariantViolation(describe(*this) + " records the wrong gcd");
  }
  const std::int64_t floor_w = checked_add(m, n) / d;
  const std::int64_t exact_w = exact_div(checked_add(checked_add(m, n), 2), d, "d-edges at w") - 1;
  if (floor_w != exact_w || d_w != floor_w) {
    throw InvariantViolation(describe(*this) + " has a wrong count at w");
  }
  if (d_u != exact_div(checked_add(n, 1), d, "d-edges at u_i") ||
      d_v != exact_div(checked_add(m, 1), d, "d-edges at v_j")) {
    throw InvariantViolation(describe(*this) + " has a wrong count at u_i or v_j");
  }
  const std::int64_t summed =
      checked_add(d_w, checked_add(checked_mul(m, d_u), checked_mul(n, d_v)));
  const std::int64_t closed =
      exact_div(checked_mul(2, checked_mul(checked_add(m, 1), checked_add(n, 1))), d, "closed form") - 1;
  if (summed != total || closed != total) {
    throw InvariantViolation(describe(*this) + ": summed total " + std::to_string(summed) +
                             ", closed form " + std::to_string(closed) + ", recorded " +
                             std::to_string(total));
  }
  if (total % 2 == 0) {
    throw InvariantViolation(describe(*this) + " has an even total");
  }
}

nlohmann::json to_json(const ParityCertificate& cert) {
  return {{"m", cert.m},     {"n", cert.n},     {"d", cert.d},        {"d_w", cert.d_w},
          {"d_u", cert.d_u}, {"d_v", cert.d_v}, {"total", cert.total}};
}

ParityCertificate certificate_from_json(const nlohmann::json& j) {
  ParityCertificate cert;
  cert.m = j.at("m").get<std::int64_t>();
  cert.n = j.at("n").get<std::int64_t>();
  cert.d = j.at("d").get<std::int64_t>();
  cert.d_w = j.at("d_w").get<std::int64_t>();
  cert.d_u = j.at("d_u").get<std::int64_t>();
  cert.d_v = j.at("d_v").get<std::int64_t>();
  cert.total = j.at("total").get<std::int64_t>();
  return cert;
}

NotColorable::NotColorable(ParityCertificate cert)
    : Error("K_{1," + std::to_string(cert.m) + "," + std::to_string(cert.n) +
            "} is not interval colorable: gcd(m+1, n+1) = " + std::to_string(cert.d)),
      cert_(cert) {}

}  // namespace icolor
