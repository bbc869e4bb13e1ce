#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbifold {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// error taxonomy
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ORBIFOLD_DEFINE_ERROR(Name)       \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

ORBIFOLD_DEFINE_ERROR(ZeroInputError);
ORBIFOLD_DEFINE_ERROR(NotPrimeError);
ORBIFOLD_DEFINE_ERROR(OverflowError);
ORBIFOLD_DEFINE_ERROR(NotMFullError);
ORBIFOLD_DEFINE_ERROR(InvariantViolationError);
ORBIFOLD_DEFINE_ERROR(ModulusTooLargeError);
ORBIFOLD_DEFINE_ERROR(NotStabilizedError);
ORBIFOLD_DEFINE_ERROR(TailDominatesError);
ORBIFOLD_DEFINE_ERROR(TooLargeError);
ORBIFOLD_DEFINE_ERROR(TooLargeToEnumerateError);
ORBIFOLD_DEFINE_ERROR(DeltaOutOfRangeError);
ORBIFOLD_DEFINE_ERROR(DegenerateInputError);
ORBIFOLD_DEFINE_ERROR(ConfigInvalidError);
ORBIFOLD_DEFINE_ERROR(ResourceGuardError);

#undef ORBIFOLD_DEFINE_ERROR

// ---------------------------------------------------------------------------
// checked 64-bit arithmetic; overflow is a hard error, never wraparound
// ---------------------------------------------------------------------------

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

inline i64 checked_pow(i64 base, int exp) {
  if (exp < 0) throw InvariantViolationError("negative exponent");
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// floor of the m-th root, by binary search with exactness check
inline i64 iroot(i64 x, int m) {
  if (x < 0) throw InvariantViolationError("iroot of negative");
  if (m < 1) throw InvariantViolationError("iroot order < 1");
  if (m == 1 || x <= 1) return x;
  i64 lo = 0, hi = 2;
  auto pow_le = [&](i64 r) {
    u128 p = 1;
    for (int i = 0; i < m; ++i) {
      p *= static_cast<u128>(r);
      if (p > static_cast<u128>(x)) return false;
    }
    return true;
  };
  while (pow_le(hi)) hi *= 2;
  while (lo + 1 < hi) {
    i64 mid = lo + (hi - lo) / 2;
    if (pow_le(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

std::string to_string_u128(u128 v);
std::string to_string_i128(i128 v);

}  // namespace orbifold
