#pragma once

#include <complex>
#include <vector>

#include "orbifold/common.hpp"

namespace orbifold::expsums {

// Complete exponential sum  sum_{k=0}^{q-1} e( a*A*(H*k+h)^m / q ).
struct CompleteSumSpec {
  i64 q = 1;  // modulus >= 1
  i64 a = 0;  // residue with gcd(a, q) = 1
  i64 A = 1;  // integer coefficient (houses c_j * gamma_j); nonzero
  i64 H = 1;  // progression modulus >= 1
  i64 h = 0;  // progression shift, 0 <= h < H
  int m = 2;  // exponent >= 2
};

// The phase a*A*(H*k+h)^m is reduced mod q in exact integer arithmetic
// before any floating conversion.
std::complex<double> complete_sum(const CompleteSumSpec& s);

// Congruence system  sum_j A_j (H k_j + h_j)^{m_j} == N.
struct LocalSystem {
  std::vector<i64> coeff;  // A_j, one per coordinate
  std::vector<int> m;      // exponents m_j >= 2
  i64 H = 1;
  std::vector<i64> shift;  // h_j; empty means all zero
  i64 target = 0;          // N

  std::size_t size() const { return coeff.size(); }
};

// #{ k mod p^T : system holds mod p^T }, by exact enumeration (per-coordinate
// value histograms folded mod p^T). restrict_mask bit j forces p | k_j.
// Guards: p^T <= 10^6, <= 8 coordinates, bounded fold work; violations throw
// ModulusTooLargeError.
u128 count_solutions_mod(i64 p, int T, const LocalSystem& sys, u64 restrict_mask = 0);

struct LocalFactor {
  i64 p = 2;
  int T = 1;
  u128 numerator = 0;    // solution count at level T
  u128 denominator = 1;  // p^{nT}, n = coordinates - 1
  bool stabilized = false;

  double value() const;
};

struct LocalFactorOptions {
  int T_max = 6;
  u64 fold_budget = 80'000'000;  // per-level enumeration guard
};

// primitivity=false: N(p^T)/p^{nT}, the Euler factor of the singular series.
// primitivity=true: density of solutions having some coordinate k_j with
// p not dividing k_j among the coordinates whose v-block is prime to p
// (v_touched[j] = true marks p | v_{j,1}...v_{j,m_j-1}); requires H=1, h=0.
// Levels are raised until two consecutive densities agree exactly, or the
// lifting criterion proves stabilization; stabilized=false when T_max or the
// work guard is hit first.
LocalFactor local_factor(i64 p, const LocalSystem& sys, bool primitivity,
                         const std::vector<bool>& v_touched = {},
                         const LocalFactorOptions& opts = {});

}  // namespace orbifold::expsums
