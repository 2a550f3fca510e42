#include "asdc/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace asdc {

QSeries QSeries::zero(long prec) {
  QSeries r;
  r.lead_ = prec;
  r.prec_ = prec;
  return r;
}

QSeries QSeries::monomial(const Rat& c, long exp, long prec) {
  QSeries r;
  r.prec_ = prec;
  if (c == 0 || exp >= prec) {
    r.lead_ = prec;
    return r;
  }
  r.lead_ = exp;
  r.c_.assign((size_t)(prec - exp), Rat(0));
  r.c_[0] = c;
  return r;
}

QSeries::QSeries(long lead, std::vector<Rat> coeffs)
    : lead_(lead), prec_(lead + (long)coeffs.size()), c_(std::move(coeffs)) {
  normalize();
}

QSeries::QSeries(long lead, std::vector<Rat> coeffs, long prec) : lead_(lead), prec_(prec) {
  if (prec < lead + (long)coeffs.size())
    throw std::invalid_argument("QSeries: prec below stored coefficients");
  c_ = std::move(coeffs);
  c_.resize((size_t)(prec - lead), Rat(0));
  normalize();
}

void QSeries::normalize() {
  size_t i = 0;
  while (i < c_.size() && c_[i] == 0) ++i;
  if (i == c_.size()) {
    c_.clear();
    lead_ = prec_;
    return;
  }
  if (i > 0) {
    c_.erase(c_.begin(), c_.begin() + (long)i);
    lead_ += (long)i;
  }
}

const Rat& QSeries::coeff(long n) const {
  static const Rat kZero(0);
  if (n >= prec_) throw PrecisionExhausted("coefficient at q^" + std::to_string(n) + " beyond precision");
  if (n < lead_) return kZero;
  return c_[(size_t)(n - lead_)];
}

QSeries QSeries::truncated(long prec) const {
  if (prec >= prec_) return *this;
  QSeries r;
  r.prec_ = prec;
  if (lead_ >= prec) {
    r.lead_ = prec;
    return r;
  }
  r.lead_ = lead_;
  r.c_.assign(c_.begin(), c_.begin() + (prec - lead_));
  r.normalize();
  return r;
}

QSeries QSeries::shifted(long k) const {
  QSeries r = *this;
  r.lead_ += k;
  r.prec_ += k;
  return r;
}

std::string QSeries::to_string(long max_terms) const {
  if (is_zero()) return "O(q^" + std::to_string(prec_) + ")";
  std::ostringstream os;
  long shown = 0;
  for (long n = lead_; n < prec_ && shown < max_terms; ++n) {
    const Rat& c = coeff(n);
    if (c == 0) continue;
    if (shown > 0) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (a != 1 || n == 0) os << a.get_str();
    if (n != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (n != 1) os << "^" << n;
    }
    ++shown;
  }
  os << " + O(q^" << prec_ << ")";
  return os.str();
}

QSeries operator-(const QSeries& a) {
  QSeries r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long prec = std::min(a.prec_, b.prec_);
  long lead = std::min(a.lead_, b.lead_);
  if (lead >= prec) return QSeries::zero(prec);
  QSeries r;
  r.lead_ = lead;
  r.prec_ = prec;
  r.c_.assign((size_t)(prec - lead), Rat(0));
  for (long n = std::max(lead, a.lead_); n < std::min(prec, a.prec_); ++n) r.c_[(size_t)(n - lead)] = a.c_[(size_t)(n - a.lead_)];
  for (long n = std::max(lead, b.lead_); n < std::min(prec, b.prec_); ++n) r.c_[(size_t)(n - lead)] += b.c_[(size_t)(n - b.lead_)];
  r.normalize();
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  long prec = std::min(a.prec_ + b.lead_, b.prec_ + a.lead_);
  if (a.is_zero() || b.is_zero()) return QSeries::zero(prec);
  long lead = a.lead_ + b.lead_;
  QSeries r;
  r.lead_ = lead;
  r.prec_ = prec;
  r.c_.assign((size_t)(prec - lead), Rat(0));
  long terms = prec - lead;
  for (long i = 0; i < (long)a.c_.size() && i < terms; ++i) {
    if (a.c_[(size_t)i] == 0) continue;
    long jmax = std::min<long>((long)b.c_.size(), terms - i);
    for (long j = 0; j < jmax; ++j) {
      if (b.c_[(size_t)j] == 0) continue;
      r.c_[(size_t)(i + j)] += a.c_[(size_t)i] * b.c_[(size_t)j];
    }
  }
  r.normalize();
  return r;
}

QSeries operator*(const Rat& c, const QSeries& a) {
  if (c == 0) return QSeries::zero(a.prec_);
  QSeries r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

QSeries inverse(const QSeries& a) {
  if (a.is_zero()) throw DivisionByZeroSeries();
  // a = q^lead * u with u a unit; invert u by the standard recurrence.
  long terms = a.prec() - a.lead();
  std::vector<Rat> u((size_t)terms);
  for (long i = 0; i < terms; ++i) u[(size_t)i] = a.coeff(a.lead() + i);
  std::vector<Rat> v((size_t)terms, Rat(0));
  v[0] = 1 / u[0];
  for (long n = 1; n < terms; ++n) {
    Rat s(0);
    for (long k = 1; k <= n; ++k)
      if (u[(size_t)k] != 0) s += u[(size_t)k] * v[(size_t)(n - k)];
    v[(size_t)n] = -s * v[0];
  }
  return QSeries(-a.lead(), std::move(v));
}

QSeries operator/(const QSeries& a, const QSeries& b) {
  if (b.is_zero()) throw DivisionByZeroSeries();
  return a * inverse(b);
}

QSeries theta(const QSeries& a) {
  if (a.is_zero()) return a;
  std::vector<Rat> c((size_t)(a.prec() - a.lead()));
  for (long n = a.lead(); n < a.prec(); ++n) c[(size_t)(n - a.lead())] = n * a.coeff(n);
  return QSeries(a.lead(), std::move(c), a.prec());
}

QSeries pow(const QSeries& a, long e) {
  if (e == 0) {
    // Precision of a^0: the unit part of a contributes no uncertainty.
    return QSeries::constant(1, a.is_zero() ? a.prec() : a.prec() - a.lead());
  }
  if (e < 0) return pow(inverse(a), -e);
  if (a.is_zero()) return QSeries::zero(a.prec() + (e - 1) * a.lead());
  QSeries acc = QSeries::constant(1, a.prec() - a.lead());
  QSeries base = a;
  long n = e;
  while (n) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

QSeries compose(const QSeries& f, const QSeries& t) {
  if (!f.is_zero() && f.lead() < 0)
    throw CompositionOrderError("compose: f must be a power series (lead >= 0)");
  if (!t.is_zero() && t.lead() < 1)
    throw CompositionOrderError("compose: t must have lead >= 1");
  long tlead = t.is_zero() ? t.prec() : t.lead();
  long prec = std::min(t.prec(), f.prec() * std::max(tlead, 1L));
  if (f.is_zero()) return QSeries::zero(prec);
  if (t.is_zero()) return QSeries::constant(f.coeff(0), prec);
  // Horner over the coefficients of f, truncating at the target precision.
  QSeries acc = QSeries::zero(prec);
  for (long n = f.prec() - 1; n >= 0; --n) {
    acc = (acc * t).truncated(prec);
    const Rat& c = f.coeff(n);
    if (c != 0) acc = acc + QSeries::constant(c, prec);
  }
  return acc;
}

QSeries revert(const QSeries& t) {
  if (t.is_zero() || t.lead() != 1)
    throw ReversionOrderError("revert: series must have lead exactly 1 with nonzero coefficient");
  long prec = t.prec();
  if (prec < 2) throw ReversionOrderError("revert: need at least one known coefficient");
  Rat c1 = t.coeff(1);
  // s correct through q^m means t(s) = q + O(q^(m+1)).
  QSeries s = QSeries::monomial(1 / c1, 1, 2);
  long m = 1;
  while (m < prec - 1) {
    long m2 = std::min(2 * m, prec - 1);
    // Lift s to precision m2 + 1 (unknown upper coefficients start at zero).
    QSeries lifted(1, [&] {
      std::vector<Rat> v((size_t)m2, Rat(0));
      for (long n = 1; n <= m && n < s.prec(); ++n) v[(size_t)(n - 1)] = s.coeff(n);
      return v;
    }());
    QSeries q = QSeries::monomial(1, 1, m2 + 1);
    QSeries err = compose(t.truncated(m2 + 1), lifted) - q;
    QSeries tp = theta(t.truncated(m2 + 1));  // q t'(q) shifted: use d/dq = theta/q
    // t'(q) = theta(t)/q
    QSeries deriv = tp.shifted(-1);
    QSeries corr = err / compose(deriv, lifted);
    s = (lifted - corr).truncated(m2 + 1);
    m = m2;
  }
  return s.truncated(prec);
}

bool agree_to(const QSeries& a, const QSeries& b, long through) {
  long hi = std::min({a.prec(), b.prec(), through + 1});
  long lo = std::min(a.lead(), b.lead());
  for (long n = lo; n < hi; ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

}  // namespace asdc
