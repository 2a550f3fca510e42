#pragma once

#include <map>
#include <string>
#include <vector>

#include "asdc/qseries.hpp"

namespace asdc {

struct FractionalWeightError : std::domain_error {
  explicit FractionalWeightError(const std::string& w) : std::domain_error(w) {}
};
struct FractionalOrderError : std::domain_error {
  explicit FractionalOrderError(const std::string& w) : std::domain_error(w) {}
};

// Finite product prod_d eta(d z)^{r_d} with every d dividing the level.
struct EtaQuotient {
  long level = 1;
  std::map<long, long> exponents;  // d -> r_d, r_d nonzero

  EtaQuotient() = default;
  EtaQuotient(long level, std::map<long, long> exps);

  long exponent_sum() const;        // sum r_d (twice the weight)
  bool integral_weight() const { return exponent_sum() % 2 == 0; }
  long weight_times_two() const { return exponent_sum(); }
  Rat order_at_infinity() const;    // (1/24) sum d r_d
  // Newman's second integrality condition, (1/24) sum (N/d) r_d in Z;
  // equivalently the order at the cusp 0 is an integer.
  bool newman_order_at_zero_integral() const;

  // Quadratic character (s/.) with s = prod d^{r_d}, times (-1)^weight;
  // returns the squarefree part of (-1)^k * s (Ligozat/Newman criterion).
  Int character_discriminant() const;

  EtaQuotient times(const EtaQuotient& other) const;  // merge exponent maps
  EtaQuotient power(long e) const;

  std::string to_string() const;  // "eta(1)^5 * eta(5)^-1" style
};

struct CuspOrder {
  long denom_c;        // cusp class a/c, keyed by c | N
  Rat order;           // vanishing order in the local variable (Ligozat)
  long multiplicity;   // number of cusp classes with this denominator
  long width;          // N / (c * gcd(c, N/c))
};

// One row per divisor c of the level; the entry with c = N is the cusp at
// infinity.  Orders of an eta quotient depend only on c.
struct CuspOrderTable {
  long level = 1;
  std::vector<CuspOrder> entries;

  const CuspOrder& at_infinity() const;
  const CuspOrder& at_denominator(long c) const;
  bool all_nonnegative() const;
  // sum over cusp classes of the local orders (= k * index / 12 for
  // holomorphic-on-H forms; 0 in weight 0).
  Rat class_weighted_sum() const;
};

// Pentagonal-number expansion of prod_{n>=1} (1 - q^n), exact below prec.
// The q^(1/24) prefactor is the callers' bookkeeping (order at infinity).
QSeries eta_series(long prec);

// q^(ord_inf) prod_d prod_n (1 - q^(dn))^{r_d}.  Requires integral weight and
// integral order at infinity.
QSeries eta_quotient_series(const EtaQuotient& e, long prec);

CuspOrderTable cusp_orders(const EtaQuotient& e);
bool is_holomorphic(const EtaQuotient& e);

// Theta(z)^2 = (sum_{n in Z} q^(n^2))^2: coefficient of q^n counts ordered
// representations of n as a sum of two squares.
QSeries jacobi_theta_sq(long prec);

// sum_{n>=1} sigma_k(n) q^(dn)
QSeries sigma_series(long k, long d, long prec);

// 1 - 24 sum sigma_1(n) q^n (the weight-2 quasi-modular series; used for
// E2(z) - d E2(dz) combinations and log-derivative checks).
QSeries e2_series(long prec);

}  // namespace asdc
