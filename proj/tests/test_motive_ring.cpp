#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivic/series.hpp"

using namespace motivic;

namespace {

using S = TruncSeries<MotivicClass>;

MotivicClass L(int k = 1) { return MotivicClass::L(k); }
MotivicClass Sy(int i, int p = 1) { return MotivicClass::S(i, p); }

S poly(std::vector<MotivicClass> c, int order) {
  c.resize(static_cast<std::size_t>(order) + 1);
  return S(std::move(c), Grading::MultiplicitySum);
}

S zeta_A1(int N) {
  S z(N);
  for (int n = 0; n <= N; ++n) z[n] = L(n);
  return z;
}

}  // namespace

TEST_CASE("Laurent polynomials") {
  const LaurentL x = lefschetz(2) - lefschetz(0) + LaurentL(4) * lefschetz(-3);
  CHECK(dimension(x) == 2);
  CHECK(dimension(LaurentL()) == kNegInfDim);
  CHECK(truncate(x, 2) == lefschetz(2) - lefschetz(0));
  CHECK(x.str() == "L^2 - 1 + 4*L^-3");
  const Rational at2 = evaluate<Rational>(x, Rational(2), Rational(1, 2));
  CHECK(at2 == Rational(7, 2));
  // (1 - L^-1)^{-1} = Σ L^-k
  const LaurentL inv = truncated_inverse(LaurentL(1) - lefschetz(-1), 5);
  LaurentL geo;
  for (int k = 0; k <= 5; ++k) geo += lefschetz(-k);
  CHECK(inv == geo);
}

TEST_CASE("motivic classes") {
  const MotivicClass a = Sy(2) - Sy(1);
  CHECK(a.str() == "S_2 - S_1");
  CHECK((Sy(1) * Sy(1)).str() == "S_1^2");
  CHECK(dimension(Sy(3) * L(-2), 1) == 1);
  CHECK(dimension(L(5), 1) == 5);
  CHECK(dimension(MotivicClass(), 1) == kNegInfDim);
  CHECK((a - a).is_zero());
  CHECK(L(2).is_pure_L());
  CHECK_FALSE(Sy(1).is_pure_L());
  CHECK(L(2).to_laurent() == lefschetz(2));
  CHECK_THROWS_AS(Sy(1).to_laurent(), SymbolicEvaluationError);
  CHECK((L(1) * Sy(1) * 3).str() == "3*L*S_1");
  CHECK(sym_product({2, 1, 1}) == Sy(2) * Sy(1, 2));
}

TEST_CASE("series multiplication") {
  const S one_plus_t = poly({1, 1}, 4);
  const S one_minus_t = poly({1, -1}, 4);
  CHECK(one_plus_t * one_minus_t == poly({1, 0, -1}, 4));
  CHECK(zeta_A1(8) * poly({1, -L()}, 8) == S::one(8));
}

TEST_CASE("series inverse") {
  S z(6);
  for (int n = 0; n <= 6; ++n) z[n] = Sy(n);
  CHECK(z * series_inverse(z) == S::one(6));
  CHECK(series_inverse(poly({1, -1}, 5)) == S::geometric(5, MotivicClass(1)));

  TruncSeries<Rational> f(3);
  f[0] = 1;
  f[1] = -2;
  const auto g = series_inverse(f);
  CHECK(g[0] == 1);
  CHECK(g[1] == 2);
  CHECK(g[2] == 4);
  CHECK(g[3] == 8);

  TruncSeries<Rational> bad(3);
  bad[1] = 1;
  CHECK_THROWS_AS(series_inverse(bad), NotInvertible);
  CHECK_THROWS_AS(series_inverse(poly({Sy(1)}, 2)), NotInvertible);
}

TEST_CASE("substitution and shifts") {
  CHECK(compose_power(poly({1, 1}, 4), 2) == poly({1, 0, 1}, 4));
  const S z3 = compose_power(zeta_A1(7), 3);
  CHECK(z3 == poly({1, 0, 0, L(), 0, 0, L(2)}, 7));

  const S up = shift_up(poly({1, 2, 3}, 4), 2);
  CHECK(up == poly({0, 0, 1, 2, 3}, 4));
  const S down = shift_down(up, 2);
  CHECK(down.order() == 2);
  CHECK(down == poly({1, 2, 3}, 2));
  CHECK_THROWS_AS(shift_down(poly({1, 2}, 3), 1), ConsistencyError);
}

TEST_CASE("gradings do not mix") {
  const S a = S::one(3);
  const S b = S::one(3, Grading::PointCount);
  CHECK_THROWS_AS(a + b, SeriesMismatch);
  CHECK_THROWS_AS(a * b, SeriesMismatch);
  CHECK_FALSE(a == b);
  CHECK(regrade(b, Grading::MultiplicitySum) == a);
  CHECK_THROWS_AS(S::one(3) + S::one(4), SeriesMismatch);
}

TEST_CASE("evaluation at negative powers of L") {
  // Z_A1(L^-2) = Σ L^-n
  const auto ev = eval_at_L_power(zeta_A1(12), 2, 1, 8);
  LaurentL geo;
  for (int k = 0; k <= 8; ++k) geo += lefschetz(-k);
  CHECK(ev.value == MotivicClass(geo));
  CHECK(ev.tail_indicator < -8);

  // a point: Σ t^n at L^-1
  const auto pt = eval_at_L_power(S::geometric(10, MotivicClass(1)), 1, 0, 6);
  LaurentL g1;
  for (int k = 0; k <= 6; ++k) g1 += lefschetz(-k);
  CHECK(pt.value == MotivicClass(g1));

  CHECK_THROWS_AS(eval_at_L_power(zeta_A1(6), 1, 1, 4), DivergenceError);

  S sym(4);
  for (int n = 0; n <= 4; ++n) sym[n] = Sy(n);
  CHECK_THROWS_AS(eval_at_L_power(sym, 2, 1, 3), SymbolicEvaluationError);
  const auto symbolic = eval_at_L_power(sym, 2, 1, 3, true);
  CHECK(symbolic.value == MotivicClass(1) + Sy(1) * L(-2) + Sy(2) * L(-4) + Sy(3) * L(-6));
}
