#pragma once

#include <vector>

#include "orbifold/common.hpp"

namespace orbifold::mfull {

// Canonical form of an m-full integer:
//   x = sign * u^m * prod_{r=1}^{m-1} v_r^{m+r},
// with each v_r squarefree and the v_r pairwise coprime. v_r = 1 marks an
// absent factor. The form is unique.
struct Decomposition {
  int sign = 1;  // +1 or -1
  int m = 2;
  i64 u = 1;
  std::vector<i64> v;  // v[r-1] = v_r, size m-1

  i64 value() const;  // checked compose without invariant re-validation
};

// true iff every prime exponent in |x| is >= m
bool is_mfull(i64 x, int m);

// unique decomposition; throws NotMFullError if is_mfull(x, m) fails
Decomposition decompose(i64 x, int m);

// validates the squarefree/coprime invariants, then evaluates; throws
// InvariantViolationError or OverflowError
i64 compose(const Decomposition& d);

// all positive m-full integers <= B, ascending. Generated by iterating
// (v_{m-1},...,v_1, u) tuples with pruning, not by scanning.
std::vector<i64> enumerate_mfull(i64 B, int m);

// same enumeration, but yielding the full decompositions (sign = +1),
// ordered by value
std::vector<Decomposition> enumerate_decompositions(i64 B, int m);

}  // namespace orbifold::mfull
