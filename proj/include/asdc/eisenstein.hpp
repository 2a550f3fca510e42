#pragma once

#include <vector>

#include "asdc/characters.hpp"
#include "asdc/qseries.hpp"

namespace asdc {

struct ParityError : std::domain_error {
  explicit ParityError(const std::string& w) : std::domain_error(w) {}
};

// Bernoulli number B_m (B_1 = -1/2), memoized behind a mutex.
Rat bernoulli_number(unsigned long m);

// Bernoulli polynomial B_k(x).
Rat bernoulli_poly(unsigned long k, const Rat& x);

// Generalized Bernoulli number B_{k,psi} = f^(k-1) sum_{a=1..f} psi(a) B_k(a/f)
// for psi primitive of conductor f.  For f = 1 this is B_k(1), i.e. the
// ordinary Bernoulli number for k >= 2 and +1/2 at k = 1.
Rat gen_bernoulli(unsigned long k, const DirichletChar& psi);

// One term alpha * E_{k,chi,psi}(d z) of an Eisenstein combination.
struct EisensteinElement {
  long weight = 0;
  DirichletChar chi;   // primitive, conductor L
  DirichletChar psi;   // primitive, conductor R
  long dilation = 1;
  Rat coefficient = 1;

  bool parity_ok() const { return chi.parity() * psi.parity() == ((weight % 2 == 0) ? 1 : -1); }
  std::string to_string() const;
};

struct EisensteinCombo {
  long level = 1;
  DirichletChar character;  // ambient character mod level
  std::vector<EisensteinElement> elements;

  QSeries expansion(long prec) const;
};

// E_{k,chi,psi}(d z): constant term -B_{k,psi}/(2k) when chi is trivial
// (conductor 1), zero otherwise; coefficient of q^(dn) is
// sum_{m|n} psi(m) chi(n/m) m^(k-1).  chi, psi must be primitive and satisfy
// the parity condition.  Weights 1 and 2 are supported for bookkeeping and
// generator recipes; at weight 2 both characters trivial is rejected (that
// series is not modular -- use e2_diff_series).
QSeries eisenstein_series(long k, const DirichletChar& chi, const DirichletChar& psi, long d, long prec);

// E2(z) - d E2(dz), modular of weight 2 on Gamma0(d).
QSeries e2_diff_series(long d, long prec);

// Classical normalization E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for even
// k >= 4, dilated by d.  This is E_{k,1,1}(dz) scaled to constant term 1; the
// single conversion point between the two conventions.
QSeries classical_eisenstein(long k, long d, long prec);
Rat classical_eisenstein_scale(long k);  // E_k = scale * E_{k,1,1}, scale = -2k/B_k

// All basis elements E_{k,chi,psi}(dz) of the weight-k Eisenstein space of
// Gamma0(N) with character eps: primitive real pairs with R*L*d | N,
// chi*psi = eps mod N and the parity matching k.  Sorted by (L, R, d).
// Requires k >= 3 (the op-level contract; weight 1/2 counting is handled by
// the dimension routines).
std::vector<EisensteinElement> eisenstein_basis(long k, long N, const DirichletChar& eps);

// Enumeration behind eisenstein_basis without the k >= 3 restriction; at
// k = 1 unordered pairs are deduplicated, at k = 2 the all-trivial elements
// are dropped when eps is principal (their differences remain modular and are
// counted separately by the dimension routines).
std::vector<EisensteinElement> eisenstein_elements_any_weight(long k, long N, const DirichletChar& eps);

}  // namespace asdc
