#pragma once

#include <utility>
#include <vector>

#include "orbifold/common.hpp"

namespace orbifold::nt {

// Prime-exponent form of |x|; primes strictly increasing, exponents >= 1.
struct Factorization {
  std::vector<std::pair<i64, int>> factors;

  i64 value() const;  // product of p^e (checked)
  int exponent_of(i64 p) const;
  bool all_exponents_at_least(int m) const;
};

u64 mulmod(u64 a, u64 b, u64 mod);
u64 powmod(u64 base, u64 exp, u64 mod);

bool is_prime(u64 n);

// Exact factorization of |x|. Trial division by small primes, then
// Miller-Rabin / Brent rho for the 63-bit remainder.
Factorization factorize(i64 x);

// largest e with p^e | x
int valuation(i64 x, i64 p);

bool is_squarefree(i64 x);

// true iff lcm(gcd(m_0,p-1),...,gcd(m_n,p-1)) equals the product of the gcds,
// i.e. the m_i-th power residue conditions mod p are independent.
bool independent_power_residues(i64 p, const std::vector<int>& m);

std::vector<i64> primes_up_to(i64 n);

}  // namespace orbifold::nt
