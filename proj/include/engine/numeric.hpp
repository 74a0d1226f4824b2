// Exact arithmetic layer: arbitrary-precision integers and rationals plus
// small number-theoretic helpers used throughout the engine. All counting
// is exact; no floating point exists anywhere in the core.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace engine {

using BigInt = mpz_class;
using BigRat = mpq_class;

// gmpxx has no long long overloads; LP64 long covers the range.
inline BigInt big(long long v) { return BigInt(static_cast<long>(v)); }

// Error raised on bad user input (unknown group, parse failure, caps).
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

// Error raised when a structural invariant the mathematics guarantees is
// violated; reaching this state means the engine itself is defective.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw EngineError(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

// Rational from an integer pair; keeps the value canonical (reduced,
// positive denominator) as all BigRat arithmetic assumes.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  internal_check(den != 0, "rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline BigRat make_rat(long num, long den) {
  return make_rat(BigInt(num), BigInt(den));
}

// Renders "p/q", or just "p" for integers.
inline std::string rat_str(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline BigInt rat_num(const BigRat& q) { return q.get_num(); }

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime divisors, ascending.
inline std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Largest power of p dividing n (the p-part); p_part(1, p) = 1.
inline long long p_part(long long n, long long p) {
  internal_check(n > 0 && p >= 2, "p_part requires n > 0, p >= 2");
  long long out = 1;
  while (n % p == 0) {
    out *= p;
    n /= p;
  }
  return out;
}

inline long long p_prime_part(long long n, long long p) {
  return n / p_part(n, p);
}

// True when every prime divisor of n lies in pi (so 1 qualifies for any pi).
inline bool is_pi_number(long long n, const std::vector<long long>& pi) {
  for (long long p : pi)
    while (n % p == 0) n /= p;
  return n == 1;
}

inline long long euler_totient(long long n) {
  long long out = n;
  for (long long p : prime_factors(n)) out = out / p * (p - 1);
  return out;
}

inline BigInt factorial(long long n) {
  BigInt f = 1;
  for (long long i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace engine
