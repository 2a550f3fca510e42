#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "asdc/rational.hpp"

namespace asdc {

struct DivisionByZeroSeries : std::domain_error {
  DivisionByZeroSeries() : std::domain_error("division by series that is zero to precision") {}
};
struct CompositionOrderError : std::domain_error {
  explicit CompositionOrderError(const std::string& w) : std::domain_error(w) {}
};
struct ReversionOrderError : std::domain_error {
  explicit ReversionOrderError(const std::string& w) : std::domain_error(w) {}
};
struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& w) : std::runtime_error(w) {}
};

// Truncated Laurent series over exact rationals.  A series stores the
// coefficients of q^lead .. q^(prec-1); every coefficient below prec is known
// exactly.  Normal form: the coefficient at lead is nonzero.  A series that is
// zero to its precision stores no coefficients and has lead == prec, so
// prec > lead holds exactly for nonzero series.  Values are immutable after
// construction; all operations are pure.
class QSeries {
 public:
  // Zero to precision `prec`.
  static QSeries zero(long prec);
  // c * q^exp, known below `prec`.
  static QSeries monomial(const Rat& c, long exp, long prec);
  static QSeries constant(const Rat& c, long prec) { return monomial(c, 0, prec); }

  // Coefficients of q^lead .. q^(lead + coeffs.size() - 1); prec is implied.
  QSeries(long lead, std::vector<Rat> coeffs);
  // Same, with explicit precision >= lead + coeffs.size() (the tail is zero).
  QSeries(long lead, std::vector<Rat> coeffs, long prec);

  bool is_zero() const { return c_.empty(); }
  long lead() const { return lead_; }
  long prec() const { return prec_; }

  // Coefficient of q^n; n must be < prec.
  const Rat& coeff(long n) const;

  QSeries truncated(long prec) const;
  QSeries shifted(long k) const;  // multiply by q^k

  std::string to_string(long max_terms = 12) const;

  friend QSeries operator-(const QSeries& a);
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rat& c, const QSeries& a);
  friend QSeries operator/(const QSeries& a, const QSeries& b);

 private:
  QSeries() = default;
  void normalize();

  long lead_ = 0;
  long prec_ = 0;
  std::vector<Rat> c_;
};

// Multiplicative inverse of a series nonzero to precision.
QSeries inverse(const QSeries& a);

// q d/dq: multiplies the coefficient of q^n by n.
QSeries theta(const QSeries& a);

// a^e for integer e; negative e requires a nonzero to precision.
QSeries pow(const QSeries& a, long e);

// f(t(q)) for a power series f (lead >= 0) and t with lead >= 1.
QSeries compose(const QSeries& f, const QSeries& t);

// Compositional inverse of t = c1 q + ... (c1 nonzero): the series s with
// t(s(q)) = s(t(q)) = q to precision.  Newton iteration with doubling
// precision.
QSeries revert(const QSeries& t);

// Equality of all coefficients below min(a.prec, b.prec, through).
bool agree_to(const QSeries& a, const QSeries& b, long through);

}  // namespace asdc
