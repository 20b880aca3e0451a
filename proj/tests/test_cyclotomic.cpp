#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mckay/cyclotomic.hpp"

#include <random>

using namespace mckay;

namespace {

CycNum zeta(long n, long k = 1) { return CycNum::root_of_unity(n, k); }

// Random element of Q(zeta_N) with small integer coordinates.
CycNum random_cyc(std::mt19937& rng, long n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  VecQ c = VecQ::Zero(euler_phi(n));
  for (long i = 0; i < c.size(); ++i) c(i) = coeff(rng);
  return CycNum::from_coeffs(n, std::move(c));
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
  // Phi_1 = x - 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  // Phi_105 is the first with a coefficient of magnitude 2
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == static_cast<size_t>(euler_phi(105)) + 1);
  bool has_two = false;
  for (const auto& c : p105) has_two = has_two || abs(c) == 2;
  CHECK(has_two);
}

TEST_CASE("root_of_unity basics") {
  CHECK(zeta(4, 2) == CycNum(-1));
  CHECK(zeta(1, 0) == CycNum(1));
  CHECK(zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4) == CycNum(-1));
  CHECK(multiplicative_order(zeta(12, 8), 20) == 3);  // 12/gcd(12,8)
  CHECK(multiplicative_order(zeta(7, 3), 20) == 7);
}

TEST_CASE("arithmetic across orders") {
  CHECK(zeta(3) * zeta(3, 2) == CycNum(1));
  CycNum mixed = zeta(4) + zeta(3);
  CHECK(mixed.order() == 12);
  CHECK(mixed - zeta(3) == zeta(4));

  CycNum c = CycNum(1) / (CycNum(1) + zeta(5));
  CHECK(c * (CycNum(1) + zeta(5)) == CycNum(1));

  CHECK_THROWS_AS(CycNum(1) / CycNum(0), DivisionByZero);
}

TEST_CASE("rationals round-trip at every order") {
  for (long n : {1L, 2L, 5L, 8L, 12L}) {
    CycNum q = CycNum(Rat(7, 2)).embedded(n * 1);  // order-1 value
    CycNum r = CycNum(Rat(7, 2)) * zeta(n, 0);
    CHECK(r.is_rational());
    CHECK(r.as_rational() == Rat(7, 2));
    CHECK(q == r);
  }
}

TEST_CASE("conjugation") {
  CHECK(conj(zeta(3)) == zeta(3, 2));
  CHECK(conj(CycNum(Rat(7, 2))) == CycNum(Rat(7, 2)));
  CycNum a = CycNum(1) + zeta(4);
  CHECK(a * conj(a) == CycNum(2));
  CHECK(conj(conj(a)) == a);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240917);
  for (int iter = 0; iter < 60; ++iter) {
    long n = std::vector<long>{1, 2, 3, 4, 5, 6, 8, 12}[rng() % 8];
    CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("roots of unity sum to zero") {
  for (long n : {2L, 3L, 6L, 7L, 12L}) {
    CycNum sum(0);
    for (long k = 0; k < n; ++k) sum = sum + zeta(n, k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("conjugation is a ring automorphism") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    long n = std::vector<long>{3, 4, 5, 7, 9, 12}[rng() % 6];
    CycNum a = random_cyc(rng, n), b = random_cyc(rng, n);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
  }
}

TEST_CASE("pow matches repeated multiplication") {
  CycNum a = zeta(7) + CycNum(2);
  CycNum acc(1);
  for (int i = 0; i < 5; ++i) acc = acc * a;
  CHECK(a.pow(5) == acc);
  CHECK(a.pow(-2) * a.pow(2) == CycNum(1));
  CHECK(a.pow(0) == CycNum(1));
}
