#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asdc/eta.hpp"

using namespace asdc;

namespace {

// Naive truncated product prod_{n<=prec} (1 - q^n), term by term.
QSeries naive_eta_oracle(long prec) {
  QSeries acc = QSeries::constant(1, prec);
  for (long n = 1; n < prec; ++n) {
    std::vector<Rat> f((size_t)prec, Rat(0));
    f[0] = 1;
    f[(size_t)n] = -1;
    acc = (acc * QSeries(0, std::move(f))).truncated(prec);
  }
  return acc;
}

// Ordered representations of n as a^2 + b^2 with a, b in Z.
long r2_oracle(long n) {
  long count = 0;
  for (long a = -64; a <= 64; ++a)
    for (long b = -64; b <= 64; ++b)
      if (a * a + b * b == n) ++count;
  return count;
}

Rat sigma_oracle(long k, long n) {
  Int s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += int_pow(d, (unsigned long)k);
  return Rat(s);
}

const std::vector<EtaQuotient>& table2_entries() {
  static const std::vector<EtaQuotient> v = {
      EtaQuotient(2, {{2, 24}, {1, -24}}),
      EtaQuotient(3, {{3, 12}, {1, -12}}),
      EtaQuotient(4, {{1, 8}, {4, 16}, {2, -24}}),
      EtaQuotient(5, {{5, 6}, {1, -6}}),
      EtaQuotient(6, {{2, 6}, {6, 6}, {1, -6}, {3, -6}}),
      EtaQuotient(7, {{7, 4}, {1, -4}}),
      EtaQuotient(8, {{2, 2}, {8, 4}, {1, -4}, {4, -2}}),
      EtaQuotient(9, {{9, 3}, {1, -3}}),
      EtaQuotient(10, {{5, 2}, {10, 2}, {1, -2}, {2, -2}}),
      EtaQuotient(12, {{4, 2}, {12, 2}, {1, -2}, {3, -2}}),
      EtaQuotient(13, {{13, 2}, {1, -2}}),
      EtaQuotient(16, {{2, 1}, {16, 2}, {1, -2}, {8, -1}}),
      EtaQuotient(18, {{2, 1}, {3, 1}, {18, 2}, {1, -2}, {6, -1}, {9, -1}}),
      EtaQuotient(25, {{25, 1}, {1, -1}}),
  };
  return v;
}

const std::vector<EtaQuotient>& table4_entries() {
  static const std::vector<EtaQuotient> v = {
      EtaQuotient(2, {{2, 16}, {1, -8}}),   EtaQuotient(2, {{1, 16}, {2, -8}}),
      EtaQuotient(3, {{3, 6}, {1, 6}}),     EtaQuotient(3, {{1, 18}, {3, -6}}),
      EtaQuotient(3, {{3, 9}, {1, -3}}),    EtaQuotient(5, {{5, 4}, {1, 4}}),
      EtaQuotient(5, {{1, 10}, {5, -2}}),   EtaQuotient(5, {{5, 5}, {1, -1}}),
      EtaQuotient(7, {{1, 10}, {7, 2}}),    EtaQuotient(7, {{1, 14}, {7, -2}}),
      EtaQuotient(7, {{1, 3}, {7, 3}}),     EtaQuotient(13, {{1, 24}}),
      EtaQuotient(13, {{1, 26}, {13, -2}}), EtaQuotient(13, {{1, 11}, {13, 1}}),
  };
  return v;
}

}  // namespace

TEST_CASE("pentagonal expansion equals the naive product") {
  long prec = 60;
  QSeries fast = eta_series(prec);
  QSeries naive = naive_eta_oracle(prec);
  CHECK(agree_to(fast, naive, prec - 1));
  CHECK(fast.coeff(0) == 1);
  CHECK(fast.coeff(1) == -1);
  CHECK(fast.coeff(2) == -1);
  CHECK(fast.coeff(5) == 1);
  CHECK(fast.coeff(7) == 1);   // 7 = k(3k-1)/2 at k = -2
  CHECK(fast.coeff(6) == 0);   // 6 is not generalized pentagonal
  CHECK(fast.coeff(11) == 0);
  CHECK(agree_to(eta_series(1), QSeries::constant(1, 1), 0));
}

TEST_CASE("paper eta quotient expansions") {
  long prec = 9;
  QSeries t5 = eta_quotient_series(EtaQuotient(5, {{5, 6}, {1, -6}}), prec);
  std::vector<long> t5_expect = {1, 6, 27, 98, 315, 912, 2456, 6210};
  for (size_t i = 0; i < t5_expect.size(); ++i) CHECK(t5.coeff(1 + (long)i) == t5_expect[i]);

  QSeries t6 = eta_quotient_series(EtaQuotient(6, {{2, 6}, {6, 6}, {1, -6}, {3, -6}}), prec);
  std::vector<long> t6_expect = {1, 6, 21, 68, 198, 510, 1248, 2904};
  for (size_t i = 0; i < t6_expect.size(); ++i) CHECK(t6.coeff(1 + (long)i) == t6_expect[i]);

  QSeries f5 = eta_quotient_series(EtaQuotient(5, {{1, 5}, {5, -1}}), prec);
  std::vector<long> f5_expect = {1, -5, 5, 10, -15, -5, -10, 30, 25};
  for (size_t i = 0; i < f5_expect.size(); ++i) CHECK(f5.coeff((long)i) == f5_expect[i]);

  QSeries f6 = eta_quotient_series(EtaQuotient(6, {{1, 4}, {3, 4}, {2, -2}, {6, -2}}), prec);
  std::vector<long> f6_expect = {1, -4, 4, -4, 20, -24, 4, -32, 52};
  for (size_t i = 0; i < f6_expect.size(); ++i) CHECK(f6.coeff((long)i) == f6_expect[i]);
}

TEST_CASE("eta quotient validity errors") {
  CHECK_THROWS_AS(eta_quotient_series(EtaQuotient(5, {{1, 3}}), 5), FractionalWeightError);
  CHECK_THROWS_AS(eta_quotient_series(EtaQuotient(5, {{1, 2}}), 5), FractionalOrderError);
  CHECK_THROWS(EtaQuotient(5, {{2, 2}}));  // 2 does not divide 5
}

TEST_CASE("cusp orders") {
  EtaQuotient t5(5, {{5, 6}, {1, -6}});
  CuspOrderTable tab = cusp_orders(t5);
  CHECK(tab.at_infinity().order == 1);
  CHECK(tab.at_denominator(1).order == -1);
  CHECK(tab.class_weighted_sum() == 0);  // weight-0 valence

  // orders at infinity match series leads
  for (const auto& e : table2_entries()) {
    QSeries s = eta_quotient_series(e, 4);
    CHECK(Rat(s.lead()) == cusp_orders(e).at_infinity().order);
    CHECK(s.coeff(s.lead()) == 1);
  }

  // all-nonnegative exponents give nonnegative orders
  EtaQuotient delta(4, {{1, 24}});
  CHECK(is_holomorphic(delta));
  for (const auto& row : cusp_orders(delta).entries) CHECK(row.order >= 0);
}

TEST_CASE("holomorphy checks") {
  CHECK(is_holomorphic(EtaQuotient(2, {{2, 16}, {1, -8}})));
  CHECK(!is_holomorphic(EtaQuotient(5, {{5, 6}, {1, -6}})));  // weight 0 nonconstant
  CHECK(is_holomorphic(EtaQuotient(1, {{1, 24}})));
}

TEST_CASE("valence identity on bundled entries") {
  // sum over cusp classes of local orders = k * [SL2(Z):Gamma0(N)] / 12
  auto check = [](const EtaQuotient& e) {
    Rat expected = make_rat(e.weight_times_two() * index_gamma0(e.level), 24);
    CHECK(cusp_orders(e).class_weighted_sum() == expected);
  };
  for (const auto& e : table2_entries()) check(e);
  for (const auto& e : table4_entries()) check(e);
}

TEST_CASE("exponent map sums map to series products") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<long> expo(-3, 3);
  long prec = 15;
  for (int trial = 0; trial < 20; ++trial) {
    std::map<long, long> ea, eb;
    for (long d : {1L, 2L, 3L, 6L}) {
      ea[d] = expo(rng) * 2;
      eb[d] = expo(rng) * 2;
    }
    EtaQuotient a(6, ea), b(6, eb);
    if (a.order_at_infinity().get_den() != 1 || b.order_at_infinity().get_den() != 1) continue;
    EtaQuotient ab = a.times(b);
    QSeries lhs = eta_quotient_series(ab, prec);
    QSeries rhs = eta_quotient_series(a, prec) * eta_quotient_series(b, prec);
    CHECK(agree_to(lhs, rhs, prec - 5));
  }
}

TEST_CASE("theta squared") {
  QSeries th = jacobi_theta_sq(12);
  CHECK(th.coeff(0) == 1);
  std::vector<long> expect = {1, 4, 4, 0, 4, 8};
  for (size_t n = 0; n < expect.size(); ++n) {
    CHECK(th.coeff((long)n) == expect[n]);
    CHECK(th.coeff((long)n) == r2_oracle((long)n));
  }
  for (long n = 0; n < 12; ++n) CHECK(th.coeff(n) == r2_oracle(n));

  // Theta^2 equals the classical eta expression eta(2z)^10 / (eta(z)^4 eta(4z)^4)
  QSeries viaeta = eta_quotient_series(EtaQuotient(4, {{2, 10}, {1, -4}, {4, -4}}), 12);
  CHECK(agree_to(th, viaeta, 11));
}

TEST_CASE("divisor power series") {
  QSeries s51 = sigma_series(5, 1, 6);
  std::vector<long> expect = {1, 33, 244, 1057};
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(s51.coeff(1 + (long)i) == expect[i]);
    CHECK(s51.coeff(1 + (long)i) == sigma_oracle(5, 1 + (long)i));
  }

  QSeries s34 = sigma_series(3, 4, 16);
  CHECK(s34.coeff(4) == 1);
  CHECK(s34.coeff(8) == 9);
  CHECK(s34.coeff(12) == 28);
  CHECK(s34.coeff(5) == 0);
  CHECK(s34.coeff(8) == sigma_oracle(3, 2));

  CHECK(sigma_series(3, 7, 6).is_zero());  // prec <= d
}
