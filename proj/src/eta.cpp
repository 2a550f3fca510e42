#include "asdc/eta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace asdc {

EtaQuotient::EtaQuotient(long lvl, std::map<long, long> exps) : level(lvl), exponents(std::move(exps)) {
  if (level < 1) throw std::invalid_argument("EtaQuotient: level must be positive");
  for (auto it = exponents.begin(); it != exponents.end();) {
    if (it->second == 0) {
      it = exponents.erase(it);
      continue;
    }
    if (it->first < 1 || level % it->first != 0)
      throw std::invalid_argument("EtaQuotient: dilation " + std::to_string(it->first) +
                                  " does not divide level " + std::to_string(level));
    ++it;
  }
}

long EtaQuotient::exponent_sum() const {
  long s = 0;
  for (auto& [d, r] : exponents) s += r;
  return s;
}

Rat EtaQuotient::order_at_infinity() const {
  long s = 0;
  for (auto& [d, r] : exponents) s += d * r;
  return make_rat(s, 24);
}

bool EtaQuotient::newman_order_at_zero_integral() const {
  long s = 0;
  for (auto& [d, r] : exponents) s += (level / d) * r;
  return s % 24 == 0;
}

Int EtaQuotient::character_discriminant() const {
  Int s = 1;
  for (auto& [d, r] : exponents) {
    long e = r >= 0 ? r : -r;
    // only the parity of the exponent matters for the squarefree part
    if (e % 2 == 1) s *= d;
  }
  if ((exponent_sum() / 2) % 2 != 0) s = -s;
  // squarefree kernel
  Int out = s < 0 ? Int(-1) : Int(1);
  Int m = abs(s);
  for (Int p = 2; p * p <= m; ++p) {
    long e = 0;
    while (m % p == 0) m /= p, ++e;
    if (e % 2 == 1) out *= p;
  }
  out *= m;
  return out;
}

EtaQuotient EtaQuotient::times(const EtaQuotient& other) const {
  long lvl = std::lcm(level, other.level);
  std::map<long, long> exps = exponents;
  for (auto& [d, r] : other.exponents) exps[d] += r;
  return EtaQuotient(lvl, std::move(exps));
}

EtaQuotient EtaQuotient::power(long e) const {
  std::map<long, long> exps;
  if (e != 0)
    for (auto& [d, r] : exponents) exps[d] = r * e;
  return EtaQuotient(level, std::move(exps));
}

std::string EtaQuotient::to_string() const {
  if (exponents.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, r] : exponents) {
    if (!first) os << " * ";
    os << "eta(" << d << ")";
    if (r != 1) os << "^" << r;
    first = false;
  }
  return os.str();
}

QSeries eta_series(long prec) {
  if (prec < 1) throw std::invalid_argument("eta_series: prec must be >= 1");
  std::vector<Rat> c((size_t)prec, Rat(0));
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 >= prec && e2 >= prec) break;
    Rat s((k % 2 == 0) ? 1 : -1);
    if (e1 < prec) c[(size_t)e1] += s;
    if (k > 0 && e2 < prec) c[(size_t)e2] += s;
  }
  return QSeries(0, std::move(c));
}

QSeries eta_quotient_series(const EtaQuotient& e, long prec) {
  if (!e.integral_weight())
    throw FractionalWeightError("eta quotient " + e.to_string() + " has odd exponent sum");
  Rat oi = e.order_at_infinity();
  if (oi.get_den() != 1)
    throw FractionalOrderError("eta quotient " + e.to_string() + " has non-integral order at infinity");
  long lead = (long)oi.get_num().get_si();
  long terms = prec - lead;
  if (terms < 1) return QSeries::zero(prec);
  QSeries acc = QSeries::constant(1, terms);
  for (auto& [d, r] : e.exponents) {
    long sub = (terms + d - 1) / d;
    QSeries base = eta_series(sub);
    // substitute q -> q^d
    std::vector<Rat> dil((size_t)terms, Rat(0));
    for (long n = 0; n < sub; ++n)
      if (n * d < terms) dil[(size_t)(n * d)] = base.coeff(n);
    acc = acc * pow(QSeries(0, std::move(dil)), r);
    acc = acc.truncated(terms);
  }
  return acc.shifted(lead);
}

CuspOrderTable cusp_orders(const EtaQuotient& e) {
  CuspOrderTable table;
  table.level = e.level;
  long N = e.level;
  for (long c : divisors(N)) {
    Rat sum(0);
    for (auto& [d, r] : e.exponents) {
      long g = std::gcd(c, d);
      sum += make_rat(g * g * r, std::gcd(c, N / c) * c * d);
    }
    CuspOrder row;
    row.denom_c = c;
    row.order = make_rat(N, 24) * sum;
    row.multiplicity = euler_phi(std::gcd(c, N / c));
    row.width = N / (c * std::gcd(c, N / c));
    table.entries.push_back(row);
  }
  return table;
}

const CuspOrder& CuspOrderTable::at_infinity() const { return at_denominator(level); }

const CuspOrder& CuspOrderTable::at_denominator(long c) const {
  for (auto& row : entries)
    if (row.denom_c == c) return row;
  throw std::out_of_range("no cusp class with denominator " + std::to_string(c));
}

bool CuspOrderTable::all_nonnegative() const {
  return std::all_of(entries.begin(), entries.end(), [](const CuspOrder& r) { return r.order >= 0; });
}

Rat CuspOrderTable::class_weighted_sum() const {
  Rat s(0);
  for (auto& row : entries) s += row.multiplicity * row.order;
  return s;
}

bool is_holomorphic(const EtaQuotient& e) { return cusp_orders(e).all_nonnegative(); }

QSeries jacobi_theta_sq(long prec) {
  if (prec < 1) throw std::invalid_argument("jacobi_theta_sq: prec must be >= 1");
  std::vector<Rat> c((size_t)prec, Rat(0));
  c[0] = 1;
  for (long n = 1; n * n < prec; ++n) c[(size_t)(n * n)] = 2;
  QSeries theta1(0, std::move(c));
  return (theta1 * theta1).truncated(prec);
}

QSeries sigma_series(long k, long d, long prec) {
  if (prec < 1 || d < 1 || k < 1) throw std::invalid_argument("sigma_series: bad arguments");
  std::vector<Rat> c((size_t)prec, Rat(0));
  long nmax = (prec - 1) / d;
  for (long m = 1; m <= nmax; ++m) {
    Int mk = int_pow(m, (unsigned long)k);
    for (long j = m; j <= nmax; j += m) c[(size_t)(j * d)] += Rat(mk);
  }
  return QSeries(0, std::move(c));
}

QSeries e2_series(long prec) {
  if (prec < 1) throw std::invalid_argument("e2_series: prec must be >= 1");
  return QSeries::constant(1, prec) - Rat(24) * sigma_series(1, 1, prec);
}

}  // namespace asdc
