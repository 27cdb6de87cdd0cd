#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "motivic/genfun.hpp"

using namespace motivic;

namespace {

std::string counts_model(int q, int d, int n) {
  std::string s = "counts:q=" + std::to_string(q) + ",N=[";
  long qr = 1;
  for (int r = 1; r <= n; ++r) {
    long v = 1;
    for (int i = 0; i < d; ++i) v *= qr * q;
    s += (r > 1 ? "," : "") + std::to_string(v);
    qr *= q;
  }
  return s + "]";
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/motivic_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("symmetric power classes") {
  const Target L = Target::parse("motivic-L");
  CHECK(sym_class(XModel::parse("A^2"), 3, L) == "L^6");
  CHECK(sym_class(XModel::parse("P1"), 3, L) == "L^3 + L^2 + L + 1");
  CHECK(sym_class(XModel::parse("pt"), 5, L) == "1");
  CHECK(sym_class(XModel::parse("counts:q=2,N=[2,4]"), 2, Target::parse("count")) == "4");
  CHECK(sym_class(XModel::parse("P2"), 2, L) == "L^4 + L^3 + 2*L^2 + L + 1");
  CHECK(sym_class(XModel::parse("euler:2"), 3, Target::parse("euler")) == "4");
  CHECK(sym_class(XModel::parse("euler:-2"), 3, Target::parse("euler")) == "0");
  CHECK(sym_class(XModel::parse("hd:1+uv"), 2, Target::parse("hodge-deligne")) ==
        sym_class(XModel::parse("P1"), 2, Target::parse("hodge-deligne")));
}

TEST_CASE("specializing classes") {
  const MotivicClass c = MotivicClass::S(2) - MotivicClass::S(1);
  CHECK(specialize_class(c, XModel::parse("P1"), Target::parse("count:q=2")) == "4");
  CHECK(specialize_class(c, XModel::parse("A^1"), Target::parse("motivic-L")) == "L^2 - L");
  CHECK(specialize_class(MotivicClass::L(7), XModel::parse("A^1"), Target::parse("euler")) == "1");
  CHECK(specialize_class(MotivicClass::L(2), XModel::parse("A^1"), Target::parse("hodge-deligne")) == "u^2*v^2");
}

TEST_CASE("Hodge-Deligne models") {
  // an elliptic curve: odd cohomology enters with negative exponent
  const XModel E = XModel::parse("hd:1-u-v+uv");
  CHECK(E.dim() == 1);
  CHECK_FALSE(E.l_expansion(3).has_value());
  CHECK(natural_target(E, Target::parse("motivic-L")).kind == Target::Kind::Hodge);
  const auto D = hodge_domain(E, 3);
  CHECK(D.S(1) == parse_hodge("1-u-v+uv"));
  // t^2 coefficient of (1 - ut)(1 - vt) / ((1 - t)(1 - uvt))
  CHECK(D.S(2) == parse_hodge("1-u-v+2uv-u^2v-uv^2+u^2v^2"));
  CHECK(euler_domain(E, 3).S(2) == 0);
}

TEST_CASE("negative binomial coefficients") {
  CHECK(negative_binomial_coeffs(Integer(2), 3) == std::vector<Integer>{1, 2, 3, 4});
  CHECK(negative_binomial_coeffs(Integer(-2), 3) == std::vector<Integer>{1, -2, 1, 0});
  CHECK(negative_binomial_coeffs(Integer(0), 2) == std::vector<Integer>{1, 0, 0});
}

TEST_CASE("Euler characteristics of configuration spaces") {
  CHECK(macdonald_check(2, 6));
  CHECK(macdonald_check(0, 6));
  CHECK(macdonald_check(-2, 4));
  const auto D = euler_domain(XModel::parse("euler:2"), 6);
  const Rational expect[] = {1, 2, 1, 0, 0};
  for (int j = 0; j <= 4; ++j) CHECK(D.image(w_class_profile(j == 0 ? IntPartition{} : IntPartition{j})) == expect[j]);
}

TEST_CASE("stratification") {
  const XModel A1 = XModel::parse("A^1"), pt = XModel::parse("pt"), P1 = XModel::parse("P1");
  CHECK(stratification_check(A1, pt, P1, Target::parse("motivic-L"), 8));
  CHECK(stratification_check(A1, pt, P1, Target::parse("count:q=5"), 8));
  CHECK_FALSE(stratification_check(A1, A1, P1, Target::parse("motivic-L"), 4));
  const XModel empty = XModel::parse("counts:q=2,N=[0,0,0,0,0,0],d=0");
  CHECK(stratification_check(A1, empty, A1, Target::parse("count:q=2"), 6));
  // A^2 = (A^2 minus a line) + A^1 over F_3
  std::string U = "counts:q=3,N=[";
  long qr = 1;
  for (int r = 1; r <= 6; ++r) {
    qr *= 3;
    U += (r > 1 ? "," : "") + std::to_string(qr * qr - qr);
  }
  U += "]";
  CHECK(stratification_check(XModel::parse(U), A1, XModel::parse("A^2"), Target::parse("count:q=3"), 6));
  CHECK_THROWS_AS(stratification_check(A1, pt, P1, Target::parse("symbolic"), 4), ModelError);
}

TEST_CASE("product with a line") {
  CHECK(product_with_line_check(XModel::parse("counts:q=2,N=[1,1,1,1,1,1]"), 6));
  std::string p1 = "counts:q=2,N=[";
  for (int r = 1; r <= 6; ++r) p1 += (r > 1 ? "," : "") + std::to_string((1L << r) + 1);
  CHECK(product_with_line_check(XModel::parse(p1 + "]"), 6));
  CHECK(product_with_line_check(XModel::parse(counts_model(3, 1, 6)), 6));
  CHECK_THROWS_AS(product_with_line_check(XModel::parse("P1"), 4), ModelError);
}

TEST_CASE("point-count models") {
  const XModel X = XModel::parse(counts_model(2, 1, 5));
  CHECK(X.dim() == 1);
  CHECK(XModel::parse(counts_model(2, 2, 5)).dim() == 2);
  const auto D = count_domain(X, std::nullopt, 5);
  for (int n = 0; n <= 5; ++n) CHECK(D.S(n) == Rational(mpz_class(1) << n));
  CHECK_THROWS_AS(count_domain(X, std::nullopt, 6), InsufficientModelData);
  CHECK_THROWS_AS(count_domain(X, Integer(3), 3), ModelError);
  // N_r = 1 is a point
  const auto pt = count_domain(XModel::parse("counts:q=2,N=[1,1,1]"), std::nullopt, 3);
  for (int n = 0; n <= 3; ++n) CHECK(pt.S(n) == 1);
  // not the counts of any variety
  CHECK_THROWS(count_domain(XModel::parse("counts:q=2,N=[1,2]"), std::nullopt, 2));
  CHECK(natural_target(X, Target::parse("motivic-L")).kind == Target::Kind::Count);
}

TEST_CASE("model files and shorthand") {
  const std::string json_path =
      write_temp("p1.json", R"({"kind": "PointCounts", "params": {"q": 2, "N": [3, 5, 9, 17]}})");
  const XModel j = XModel::parse("@" + json_path);
  CHECK(j.dim() == 1);
  CHECK(count_domain(j, std::nullopt, 4).S(4) == 31);

  const std::string csv_path = write_temp("a2.csv", "kind,AffineSpace\nd,2\n");
  CHECK(XModel::parse("@" + csv_path).dim() == 2);

  const XModel rt = XModel::from_json_text(XModel::parse("hd:1+uv").to_json_text());
  CHECK(rt.name() == XModel::parse("hd:1+uv").name());

  CHECK_THROWS_AS(XModel::parse("nonsense"), ModelError);
  CHECK_THROWS_AS(XModel::from_json_text(R"({"kind": "AffineSpace", "colour": 1})"), ModelError);
  CHECK_THROWS_AS(XModel::parse("counts:N=[1]"), ModelError);
  CHECK_THROWS_AS(Target::parse("count:q=1"), ModelError);
  CHECK(Target::parse("count:q=7").q == Integer(7));
  CHECK(XModel::parse("symbolic:d=3").dim() == 3);
  CHECK(XModel::parse("P3").dim() == 3);
  std::remove(json_path.c_str());
  std::remove(csv_path.c_str());
}

TEST_CASE("symbolic tables") {
  const XModel T = XModel::from_json_text(R"({"kind": "SymTable", "params": {"d": 1, "sym": ["1", "L+1", "L^2+L+1"]}})");
  CHECK(model_capacity(T) == 2);
  CHECK(motivic_domain(T, 2).S(2) == parse_laurent("L^2+L+1"));
  CHECK_THROWS_AS(motivic_domain(T, 3), InsufficientModelData);
}
