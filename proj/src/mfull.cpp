#include "orbifold/mfull.hpp"

#include <algorithm>
#include <numeric>

#include "orbifold/numtheory.hpp"

namespace orbifold::mfull {

namespace {

void check_m(int m) {
  if (m < 2 || m > 62) throw InvariantViolationError("exponent m out of range [2,62]");
}

// squarefree flags for 1..limit via smallest-prime-factor sieve
std::vector<bool> squarefree_table(i64 limit) {
  std::vector<bool> sf(static_cast<std::size_t>(limit) + 1, true);
  if (limit >= 0) sf[0] = false;
  for (i64 p = 2; p * p <= limit; ++p) {
    i64 pp = p * p;
    if (!sf[static_cast<std::size_t>(p)] && p > 2 && pp > limit) continue;
    for (i64 j = pp; j <= limit; j += pp) sf[static_cast<std::size_t>(j)] = false;
  }
  return sf;
}

}  // namespace

i64 Decomposition::value() const {
  i64 x = checked_pow(u, m);
  for (std::size_t r = 1; r <= v.size(); ++r)
    x = checked_mul(x, checked_pow(v[r - 1], m + static_cast<int>(r)));
  return sign > 0 ? x : -x;
}

bool is_mfull(i64 x, int m) {
  if (x == 0) throw ZeroInputError("is_mfull(0)");
  check_m(m);
  if (x == 1 || x == -1) return true;
  return nt::factorize(x).all_exponents_at_least(m);
}

Decomposition decompose(i64 x, int m) {
  if (!is_mfull(x, m)) throw NotMFullError("decompose: input is not m-full");
  Decomposition d;
  d.sign = x < 0 ? -1 : 1;
  d.m = m;
  d.u = 1;
  d.v.assign(static_cast<std::size_t>(m - 1), 1);
  // each exponent e >= m splits uniquely as e = k*m + (m + r), k >= 0,
  // 0 <= r < m; r = 0 puts the prime in u only
  for (const auto& [p, e] : nt::factorize(x).factors) {
    int r = e % m;
    int k;
    if (r == 0) {
      k = e / m;
    } else {
      k = (e - m - r) / m;
      d.v[static_cast<std::size_t>(r - 1)] = checked_mul(d.v[static_cast<std::size_t>(r - 1)], p);
    }
    for (int i = 0; i < k; ++i) d.u = checked_mul(d.u, p);
  }
  return d;
}

i64 compose(const Decomposition& d) {
  check_m(d.m);
  if (d.sign != 1 && d.sign != -1) throw InvariantViolationError("sign must be +-1");
  if (d.u < 1) throw InvariantViolationError("u must be >= 1");
  if (d.v.size() != static_cast<std::size_t>(d.m - 1))
    throw InvariantViolationError("v must have m-1 entries");
  for (std::size_t i = 0; i < d.v.size(); ++i) {
    if (d.v[i] < 1) throw InvariantViolationError("v entries must be >= 1");
    if (!nt::is_squarefree(d.v[i])) throw InvariantViolationError("v entry not squarefree");
    for (std::size_t j = i + 1; j < d.v.size(); ++j)
      if (std::gcd(d.v[i], d.v[j]) != 1) throw InvariantViolationError("v entries not coprime");
  }
  return d.value();
}

namespace {

// Recursion over v_{m-1},...,v_1 (largest weight first), pruning on the
// accumulated weight prod v_r^{m+r}; innermost u ranges to (B/weight)^(1/m).
void enumerate_rec(i64 B, int m, int r, i64 weight, std::vector<i64>& v,
                   const std::vector<bool>& sf, std::vector<Decomposition>& out) {
  if (r == 0) {
    // u^m * weight <= B  <=>  u^m <= floor(B / weight), both sides integers
    i64 umax = iroot(B / weight, m);
    for (i64 u = 1; u <= umax; ++u) {
      Decomposition d;
      d.sign = 1;
      d.m = m;
      d.u = u;
      d.v = v;
      out.push_back(std::move(d));
    }
    return;
  }
  int exp = m + r;
  for (i64 cand = 1;; ++cand) {
    u128 w = static_cast<u128>(weight);
    bool over = false;
    for (int i = 0; i < exp; ++i) {
      w *= static_cast<u128>(cand);
      if (w > static_cast<u128>(B)) {
        over = true;
        break;
      }
    }
    if (over) break;
    if (!sf[static_cast<std::size_t>(cand)]) continue;
    bool coprime = true;
    for (int rr = r + 1; rr < m; ++rr) {
      if (std::gcd(v[static_cast<std::size_t>(rr - 1)], cand) != 1) {
        coprime = false;
        break;
      }
    }
    if (!coprime) continue;
    v[static_cast<std::size_t>(r - 1)] = cand;
    enumerate_rec(B, m, r - 1, static_cast<i64>(w), v, sf, out);
    v[static_cast<std::size_t>(r - 1)] = 1;
  }
}

}  // namespace

std::vector<Decomposition> enumerate_decompositions(i64 B, int m) {
  check_m(m);
  if (B < 1) throw InvariantViolationError("B must be >= 1");
  // v_r^(m+1) <= v_r^(m+r) <= B caps every v candidate
  i64 vcap = iroot(B, m + 1) + 1;
  auto sf = squarefree_table(vcap + 1);
  std::vector<i64> v(static_cast<std::size_t>(m - 1), 1);
  std::vector<Decomposition> out;
  enumerate_rec(B, m, m - 1, 1, v, sf, out);
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) { return a.value() < b.value(); });
  return out;
}

std::vector<i64> enumerate_mfull(i64 B, int m) {
  auto decs = enumerate_decompositions(B, m);
  std::vector<i64> out;
  out.reserve(decs.size());
  for (const auto& d : decs) out.push_back(d.value());
  return out;
}

}  // namespace orbifold::mfull
