#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asdc {

using Int = mpz_class;
using Rat = mpq_class;

struct NotPrime : std::domain_error {
  explicit NotPrime(const std::string& what) : std::domain_error(what) {}
};

// Deterministic Miller-Rabin below 2^64, GMP's test above (far beyond the
// primes this engine ever sees).
bool is_prime(const Int& n);

// v_p(x); std::nullopt stands for +infinity (x = 0). Throws NotPrime.
std::optional<long> padic_val(const Rat& x, const Int& p);
std::optional<long> padic_val(const Int& x, const Int& p);

// Canonicalized fraction constructor (mpq_class's two-argument constructor
// does not reduce).
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// Parses "num/den" or "num"; denominator must be nonzero.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& x);

Int binomial(unsigned long n, unsigned long k);
Int int_pow(const Int& base, unsigned long e);

// lcm of the denominator of x with acc, in place.
void lcm_denominator(Int& acc, const Rat& x);

std::vector<long> divisors(long n);
long euler_phi(long n);
long index_gamma0(long n);  // [SL2(Z) : Gamma0(N)] = N * prod (1 + 1/p)

}  // namespace asdc
