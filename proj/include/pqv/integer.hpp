#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "pqv/errors.hpp"

namespace pqv {

using Int = mpz_class;
using Rat = mpq_class;

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int powmod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

inline Int invmod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("invmod: not invertible");
  return r;
}

// Nonnegative remainder.
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// g = s*a + t*b
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline unsigned long valuation(Int& n, const Int& q) {
  unsigned long v = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    ++v;
  }
  return v;
}

inline std::vector<uint32_t> primes_up_to(uint32_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<uint32_t> out;
  for (uint32_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j <= n; j += i) comp[j] = true;
    }
  }
  return out;
}

struct Factorization {
  std::vector<std::pair<Int, unsigned>> primes;  // (prime, exponent), ascending
  Int cofactor = 1;                              // 1 when fully factored
  bool complete() const { return cofactor == 1; }
};

// Trial division by all primes <= cap; the unfactored part is left in cofactor
// (tagged prime if it passes Miller-Rabin).
inline Factorization trial_factor(Int n, uint64_t cap) {
  Factorization f;
  if (n < 0) n = -n;
  if (n <= 1) return f;
  auto push = [&](const Int& q) {
    unsigned e = static_cast<unsigned>(valuation(n, q));
    if (e) f.primes.emplace_back(q, e);
  };
  push(2);
  for (Int q = 3; q * q <= n && mpz_cmp_ui(q.get_mpz_t(), cap) <= 0; q += 2) push(q);
  if (n > 1) {
    Int root = isqrt(n);
    if (root * root <= n && root <= Int(cap) && root * root == n) {
      // n = q^2 with q <= cap would have been caught above; nothing to do
    }
    if (n > 1 && (is_probable_prime(n) || isqrt(n) <= Int(cap)))
      f.primes.emplace_back(n, 1), n = 1;
  }
  f.cofactor = n;
  return f;
}

namespace detail {

inline Int pollard_rho(const Int& n, unsigned long seed) {
  // Brent's cycle-finding variant.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  while (true) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 2) + 1;
    Int x = y, d = 1, q = 1, ys = y;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = mod(y * y + c, n);
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = mod(y * y + c, n);
          q = mod(q * abs(x - y), n);
        }
        d = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = mod(ys * ys + c, n);
        d = gcd(abs(x - ys), n);
      }
    }
    if (d != n) return d;
  }
}

inline void factor_rec(Int n, std::vector<Int>& out, unsigned long seed) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho(n, seed);
  factor_rec(d, out, seed + 1);
  factor_rec(n / d, out, seed + 1);
}

}  // namespace detail

// Full factorization: trial division, then Pollard rho on the cofactor.
inline Factorization factor(const Int& n) {
  Factorization f = trial_factor(n, 100000);
  if (!f.complete()) {
    std::vector<Int> rest;
    detail::factor_rec(f.cofactor, rest, 1);
    std::sort(rest.begin(), rest.end());
    for (size_t i = 0; i < rest.size();) {
      size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      f.primes.emplace_back(rest[i], unsigned(j - i));
      i = j;
    }
    f.cofactor = 1;
    std::sort(f.primes.begin(), f.primes.end());
  }
  return f;
}

inline bool is_squarefree(const Int& n) {
  for (auto& [q, e] : factor(n).primes)
    if (e > 1) return false;
  return true;
}

}  // namespace pqv
