#include "asdc/rational.hpp"

#include <algorithm>

namespace asdc {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool mr_witness(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return false;
  u64 x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // This base set is a proven deterministic witness set for n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    if (mr_witness(n, a, d, s)) return false;
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n <= 0) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::optional<long> padic_val(const Int& x, const Int& p) {
  if (!is_prime(p)) throw NotPrime("padic_val: " + p.get_str() + " is not prime");
  if (x == 0) return std::nullopt;
  Int tmp;
  mp_bitcnt_t v = mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return (long)v;
}

std::optional<long> padic_val(const Rat& x, const Int& p) {
  if (!is_prime(p)) throw NotPrime("padic_val: " + p.get_str() + " is not prime");
  if (x == 0) return std::nullopt;
  Int tmp;
  long vn = (long)mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t());
  long vd = (long)mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t());
  return vn - vd;
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void lcm_denominator(Int& acc, const Rat& x) {
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), x.get_den().get_mpz_t());
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

long index_gamma0(long n) {
  long num = n, den = 1, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      num *= p + 1;
      den *= p;
    }
  }
  if (m > 1) {
    num *= m + 1;
    den *= m;
  }
  return num / den;
}

}  // namespace asdc
