#include "orbifold/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace orbifold {

std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string_i128(i128 v) {
  if (v < 0) return "-" + to_string_u128(static_cast<u128>(-v));
  return to_string_u128(static_cast<u128>(v));
}

}  // namespace orbifold

namespace orbifold::nt {

i64 Factorization::value() const {
  i64 v = 1;
  for (const auto& [p, e] : factors) v = checked_mul(v, checked_pow(p, e));
  return v;
}

int Factorization::exponent_of(i64 p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

bool Factorization::all_exponents_at_least(int m) const {
  for (const auto& [p, e] : factors)
    if (e < m) return false;
  return true;
}

u64 mulmod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>(static_cast<u128>(a) * b % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 r = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic base set for 64-bit inputs
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

const std::vector<i64>& small_primes() {
  static const std::vector<i64> primes = primes_up_to(100000);
  return primes;
}

// Brent's cycle variant of Pollard rho; deterministic increment schedule.
u64 brent_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    u64 ys = y;
    const u64 m = 128;
    for (u64 r = 1; d == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      // backtrack
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<i64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(static_cast<i64>(n));
    return;
  }
  u64 d = brent_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(i64 x) {
  if (x == 0) throw ZeroInputError("factorize(0)");
  u64 n = x < 0 ? static_cast<u64>(-(x + 1)) + 1 : static_cast<u64>(x);
  Factorization f;
  for (i64 p : small_primes()) {
    if (static_cast<u64>(p) * static_cast<u64>(p) > n) break;
    if (n % static_cast<u64>(p) == 0) {
      int e = 0;
      while (n % static_cast<u64>(p) == 0) {
        n /= static_cast<u64>(p);
        ++e;
      }
      f.factors.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::vector<i64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      f.factors.emplace_back(rest[i], static_cast<int>(j - i));
      i = j;
    }
  }
  return f;
}

int valuation(i64 x, i64 p) {
  if (x == 0) throw ZeroInputError("valuation of 0");
  if (p < 2 || !is_prime(static_cast<u64>(p))) throw NotPrimeError("valuation: p not prime");
  u64 n = x < 0 ? static_cast<u64>(-(x + 1)) + 1 : static_cast<u64>(x);
  int e = 0;
  while (n % static_cast<u64>(p) == 0) {
    n /= static_cast<u64>(p);
    ++e;
  }
  return e;
}

bool is_squarefree(i64 x) {
  if (x < 1) throw InvariantViolationError("is_squarefree requires x >= 1");
  if (x == 1) return true;
  Factorization f = factorize(x);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const auto& pe) { return pe.second == 1; });
}

bool independent_power_residues(i64 p, const std::vector<int>& m) {
  if (p < 2 || !is_prime(static_cast<u64>(p))) throw NotPrimeError("p not prime");
  for (int mi : m)
    if (mi < 2) throw InvariantViolationError("exponents must be >= 2");
  i64 l = 1;
  i64 prod = 1;
  for (int mi : m) {
    i64 g = std::gcd<i64>(mi, p - 1);
    l = std::lcm(l, g);
    prod = checked_mul(prod, g);
  }
  return l == prod;
}

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> primes;
  if (n < 2) return primes;
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  for (i64 i = 2; i <= n; ++i) {
    if (!comp[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      for (i64 j = i * i; j <= n; j += i) comp[static_cast<std::size_t>(j)] = true;
    }
  }
  return primes;
}

}  // namespace orbifold::nt
