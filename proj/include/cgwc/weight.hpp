#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace cgwc {

// Edge weights and budgets. kInfWeight is the dedicated +infinity sentinel:
// it compares above every finite value and arithmetic with it saturates.
using Weight = std::int64_t;

inline constexpr Weight kInfWeight = std::numeric_limits<Weight>::max();

inline bool is_inf(Weight w) { return w == kInfWeight; }

inline Weight sat_add(Weight a, Weight b) {
  if (is_inf(a) || is_inf(b)) return kInfWeight;
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) return kInfWeight;
  return r;
}

inline Weight sat_mul(Weight a, Weight b) {
  if (a == 0 || b == 0) return 0;
  if (is_inf(a) || is_inf(b)) return kInfWeight;
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) return kInfWeight;
  return r;
}

// a^b, saturating.
inline Weight sat_pow(Weight a, Weight b) {
  if (b <= 0) return 1;
  if (a <= 1) return a;  // 0 and 1 are fixed points for positive exponents
  if (is_inf(a) || is_inf(b)) return kInfWeight;
  Weight r = 1;
  for (Weight i = 0; i < b; ++i) {
    r = sat_mul(r, a);
    if (is_inf(r)) return kInfWeight;
  }
  return r;
}

inline std::string weight_to_string(Weight w) {
  return is_inf(w) ? "inf" : std::to_string(w);
}

}  // namespace cgwc
