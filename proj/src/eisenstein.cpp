#include "asdc/eisenstein.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

#include "asdc/eta.hpp"

namespace asdc {

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli;  // B_0, B_1, ...
}  // namespace

Rat bernoulli_number(unsigned long m) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (g_bernoulli.empty()) {
    g_bernoulli.push_back(Rat(1));
    g_bernoulli.push_back(Rat(-1, 2));
  }
  while (g_bernoulli.size() <= m) {
    unsigned long n = g_bernoulli.size();
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    Rat s(0);
    for (unsigned long j = 0; j < n; ++j) s += Rat(binomial(n + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-s / Rat(binomial(n + 1, n)));
  }
  return g_bernoulli[m];
}

Rat bernoulli_poly(unsigned long k, const Rat& x) {
  Rat s(0);
  Rat xp(1);
  // B_k(x) = sum_j C(k,j) B_j x^(k-j); accumulate from j = k downward
  for (long j = (long)k; j >= 0; --j) {
    s += Rat(binomial(k, (unsigned long)j)) * bernoulli_number((unsigned long)j) * xp;
    xp *= x;
  }
  return s;
}

Rat gen_bernoulli(unsigned long k, const DirichletChar& psi) {
  if (!psi.is_primitive())
    throw std::invalid_argument("gen_bernoulli: character must be primitive");
  long f = psi.conductor();
  Rat s(0);
  for (long a = 1; a <= f; ++a) {
    int v = psi(a);
    if (v != 0) s += v * bernoulli_poly(k, make_rat(a, f));
  }
  Rat fk(1);
  if (k >= 1) fk = Rat(int_pow(f, k - 1));
  return fk * s;
}

std::string EisensteinElement::to_string() const {
  std::ostringstream os;
  os << "E_{" << weight << "," << chi.label() << "," << psi.label() << "}";
  if (dilation != 1) os << "(" << dilation << "z)";
  return os.str();
}

QSeries eisenstein_series(long k, const DirichletChar& chi, const DirichletChar& psi, long d, long prec) {
  if (k < 1) throw std::invalid_argument("eisenstein_series: weight must be >= 1");
  if (!chi.is_primitive() || !psi.is_primitive())
    throw std::invalid_argument("eisenstein_series: characters must be primitive");
  if (d < 1) throw std::invalid_argument("eisenstein_series: dilation must be positive");
  int want = (k % 2 == 0) ? 1 : -1;
  if (chi.parity() * psi.parity() != want)
    throw ParityError("eisenstein_series: parity of " + chi.label() + "*" + psi.label() +
                      " does not match weight " + std::to_string(k));
  if (k == 2 && chi.conductor() == 1 && psi.conductor() == 1)
    throw std::invalid_argument("eisenstein_series: weight-2 all-trivial series is not modular");
  if (prec < 1) throw std::invalid_argument("eisenstein_series: prec must be >= 1");

  std::vector<Rat> c((size_t)prec, Rat(0));
  if (chi.conductor() == 1) c[0] = -gen_bernoulli((unsigned long)k, psi) / Rat(2 * k);
  long nmax = (prec - 1) / d;
  for (long m = 1; m <= nmax; ++m) {
    int pm = psi(m);
    if (pm == 0) continue;
    Int mk = int_pow(m, (unsigned long)(k - 1));
    for (long j = 1; m * j <= nmax; ++j) {
      int cj = chi(j);
      if (cj == 0) continue;
      c[(size_t)(d * m * j)] += Rat(pm * cj) * Rat(mk);
    }
  }
  return QSeries(0, std::move(c));
}

QSeries e2_diff_series(long d, long prec) {
  if (d < 2) throw std::invalid_argument("e2_diff_series: dilation must be >= 2");
  QSeries e2 = e2_series(prec);
  long sub = (prec + d - 1) / d;
  QSeries e2d = e2_series(sub);
  std::vector<Rat> dil((size_t)prec, Rat(0));
  for (long n = 0; n < sub; ++n)
    if (n * d < prec) dil[(size_t)(n * d)] = e2d.coeff(n);
  return e2 - Rat(d) * QSeries(0, std::move(dil));
}

Rat classical_eisenstein_scale(long k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("classical Eisenstein needs even weight >= 4");
  return Rat(-2 * k) / bernoulli_number((unsigned long)k);
}

QSeries classical_eisenstein(long k, long d, long prec) {
  Rat scale = classical_eisenstein_scale(k);
  DirichletChar triv = DirichletChar::principal(1);
  return scale * eisenstein_series(k, triv, triv, d, prec);
}

std::vector<EisensteinElement> eisenstein_elements_any_weight(long k, long N, const DirichletChar& eps) {
  if (k < 1) throw std::invalid_argument("eisenstein basis: weight must be >= 1");
  int want = (k % 2 == 0) ? 1 : -1;
  std::vector<DirichletChar> primitives = {DirichletChar::principal(1)};
  for (long m : {3L, 5L, 7L, 13L})
    if (N % m == 0) primitives.push_back(DirichletChar::jacobi(m, m));
  if (N % 4 == 0) primitives.push_back(DirichletChar::kronecker_m4(4));

  std::vector<EisensteinElement> out;
  for (const auto& chi : primitives) {
    for (const auto& psi : primitives) {
      long L = chi.conductor(), R = psi.conductor();
      if (chi.parity() * psi.parity() != want) continue;
      if ((long)(L * R) > N || N % (L * R) != 0) continue;
      // chi * psi must equal eps as characters mod N
      bool match = true;
      for (long n = 0; n < N && match; ++n) {
        long g = std::gcd(n, N);
        int lhs = (g == 1 || N == 1) ? chi(n) * psi(n) : 0;
        if (lhs != eps(n)) match = false;
      }
      if (!match) continue;
      if (k == 1 && L > R) continue;  // E_{1,chi,psi} = E_{1,psi,chi}
      if (k == 1 && L == R && chi.kind != psi.kind && (int)chi.kind > (int)psi.kind) continue;
      if (k == 2 && L == 1 && R == 1) continue;  // handled by E2 differences
      for (long d : divisors(N / (L * R))) {
        EisensteinElement e;
        e.weight = k;
        e.chi = chi;
        e.psi = psi;
        e.dilation = d;
        out.push_back(e);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const EisensteinElement& a, const EisensteinElement& b) {
    long la = a.chi.conductor(), lb = b.chi.conductor();
    long ra = a.psi.conductor(), rb = b.psi.conductor();
    return std::tie(la, ra, a.dilation) < std::tie(lb, rb, b.dilation);
  });
  return out;
}

std::vector<EisensteinElement> eisenstein_basis(long k, long N, const DirichletChar& eps) {
  if (k < 3) throw std::invalid_argument("eisenstein_basis: weight must be >= 3");
  return eisenstein_elements_any_weight(k, N, eps);
}

QSeries EisensteinCombo::expansion(long prec) const {
  QSeries acc = QSeries::zero(prec);
  for (const auto& e : elements) {
    if (e.coefficient == 0) continue;
    acc = acc + e.coefficient * eisenstein_series(e.weight, e.chi, e.psi, e.dilation, prec);
  }
  return acc;
}

}  // namespace asdc
