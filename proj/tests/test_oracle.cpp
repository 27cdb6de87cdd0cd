#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "motivic/oracle.hpp"

using namespace motivic;

TEST_CASE("finite field arithmetic") {
  for (int q : {2, 3, 4, 5, 8, 9, 16, 25, 27}) {
    const FiniteField F(q);
    CHECK(F.q() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.mul(a, 1) == a);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      int ap = 1;
      for (int i = 0; i < F.p(); ++i) ap = F.mul(ap, F.pth_root(a));
      CHECK(ap == a);
      for (int b = 0; b < q; ++b) CHECK(F.sub(F.add(a, b), b) == a);
    }
    CHECK(F.from_int(F.p()) == 0);
  }
  CHECK_THROWS(FiniteField(6));
  CHECK_THROWS(FiniteField(1));
}

TEST_CASE("polynomials over finite fields") {
  const FiniteField F(3);
  const FqPoly x_minus_1 = {F.neg(1), 1};
  const FqPoly x_plus_1 = {1, 1};
  const FqPoly f = fq::mul(F, fq::mul(F, x_minus_1, x_minus_1), x_plus_1);
  CHECK(fq::degree(f) == 3);
  CHECK_FALSE(fq::is_squarefree(F, f));
  CHECK(fq::multiplicity_pattern(F, f) == IntPartition{2, 1});
  const auto dec = fq::squarefree_decomposition(F, f);
  CHECK(dec.at(1) == x_plus_1);
  CHECK(dec.at(2) == x_minus_1);
  const auto [quot, rem] = fq::divmod(F, f, x_plus_1);
  CHECK(rem.empty());
  CHECK(fq::degree(quot) == 2);

  // zero derivative in characteristic 3
  const FqPoly cube = {0, 0, 0, 1};
  CHECK(fq::multiplicity_pattern(F, cube) == IntPartition{3});
  // x^3 + 2 = (x + 2)^3 over F_3
  CHECK(fq::multiplicity_pattern(F, FqPoly{2, 0, 0, 1}) == IntPartition{3});

  // irreducible x^2 + 1 over F_3 is squarefree with two simple geometric roots
  CHECK(fq::multiplicity_pattern(F, FqPoly{1, 0, 1}) == IntPartition{1, 1});
  CHECK(fq::monic_from_index(F, 2, 0) == FqPoly{0, 0, 1});
}

TEST_CASE("configuration counts") {
  CHECK(count_w_lambda(Curve::A1, 2, {1, 1}) == 2);
  CHECK(count_w_lambda(Curve::P1, 2, {1, 1}) == 4);
  for (int n = 1; n <= 4; ++n) CHECK(count_w_lambda(Curve::A1, 3, IntPartition{n}) == 3);
  CHECK(count_w_lambda(Curve::A1, 2, {}) == 1);
  for (int q : {2, 3})
    for (const IntPartition& lam : {IntPartition{1, 1}, IntPartition{2, 1}, IntPartition{2, 2}, IntPartition{3, 1, 1}})
      for (Curve X : {Curve::A1, Curve::P1})
        CHECK(count_w_lambda(X, q, lam) == count_pattern_divisors(X, q, lam));
}

TEST_CASE("singular polynomial counts") {
  CHECK(count_sym_s(2, 2, 1) == 2);
  CHECK(count_sym_s(2, 3, 1) == 4);
  for (int q : {2, 3})
    for (int j = 2; j <= 5; ++j) {
      const Integer qj = [&] {
        Integer r = 1;
        for (int i = 0; i < j; ++i) r *= q;
        return r;
      }();
      CHECK(count_sym_s(q, j, 0) == qj - qj / q);
      const auto hist = sym_s_histogram(q, j);
      Integer total = 0;
      for (const auto& h : hist) total += h;
      CHECK(total == qj);
    }
}

TEST_CASE("hypersurface fractions") {
  CHECK(count_hyper_s(2, 3, 0) == Rational(3, 8));
  CHECK(count_hyper_s(2, 2, 1) == Rational(3, 8));
  for (int q : {2, 3})
    for (int j = 1; j <= 5; ++j) {
      Rational total = 0;
      for (int s = 0; s <= j; ++s) total += count_hyper_s(q, j, s);
      Integer qj1 = 1;
      for (int i = 0; i <= j; ++i) qj1 *= q;
      CHECK(total == Rational(qj1 - 1, qj1));
    }
}

TEST_CASE("exponential formula") {
  std::vector<Integer> affine, point, line;
  Integer qr = 1;
  for (int r = 1; r <= 6; ++r) {
    qr *= 3;
    affine.push_back(qr);
    point.push_back(1);
    line.push_back(qr + 1);
  }
  const auto a = exp_formula_sym_counts(affine, 6);
  const auto p = exp_formula_sym_counts(point, 6);
  const auto l = exp_formula_sym_counts(line, 6);
  Integer qn = 1, geo = 1;
  for (int n = 0; n <= 6; ++n) {
    CHECK(a[n] == qn);
    CHECK(p[n] == 1);
    CHECK(l[n] == geo);
    qn *= 3;
    geo += qn;
  }
  CHECK_THROWS_AS(exp_formula_sym_counts({1, 2}, 2), InvalidPointCounts);
  CHECK_THROWS(exp_formula_sym_counts({1}, 3));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(count_sym_s(2, 30, 0), GuardError);
  CHECK_THROWS_AS(count_sym_s(2, 3, 0, kMaxGuard + 1), GuardError);
  CHECK_NOTHROW(count_sym_s(2, 3, 0, 100));
  CHECK_THROWS_AS(count_sym_s(2, 10, 0, 100), GuardError);
  CHECK_THROWS_AS(integer_power_density(2, 3, 0, 1'000'000'000'000LL), GuardError);
  CHECK_THROWS_AS(check_guard(11, 10, "test"), GuardError);
  CHECK_NOTHROW(check_guard(10, 10, "test"));
}

TEST_CASE("integer power divisibility") {
  // 1 - 1/ζ(2): numbers divisible by a square > 1
  const auto sq = integer_power_density(2, 2, 0, 100'000);
  CHECK(sq.bound == 100'000);
  CHECK(std::fabs(sq.fraction.get_d() - (1 - 6 / (M_PI * M_PI))) < 5e-3);
  CHECK(std::fabs(integer_power_prediction(2, 2, 0) - (1 - 6 / (M_PI * M_PI))) < 1e-9);
  CHECK(integer_power_density(2, 2, 0, 10).count == 3);  // 4, 8, 9
  CHECK(std::fabs(riemann_zeta(2) - M_PI * M_PI / 6) < 1e-12);
  CHECK(std::fabs(riemann_zeta(4) - std::pow(M_PI, 4) / 90) < 1e-12);
}
