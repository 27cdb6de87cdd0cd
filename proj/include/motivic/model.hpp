#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "motivic/laurent.hpp"
#include "motivic/motivic_class.hpp"
#include "motivic/series.hpp"

namespace motivic {

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Model kinds. Each knows its dimension d.
struct Symbolic {
  int d = 1;
};
struct AffineSpace {
  int d = 1;
};
struct ProjLine {};
struct ProjSpace {
  int n = 1;
};
struct PointCounts {
  Integer q;
  std::vector<Integer> N;  // N[r-1] = #X(F_{q^r})
  int d = 1;
};
struct EulerChar {
  long chi = 0;
  int d = 0;
};
struct HodgeDeligne {
  HodgePoly e;
  int d = 0;
};
struct SymTable {
  int d = 0;
  std::vector<LaurentL> sym;  // sym[0] must be 1
};

class XModel {
 public:
  using Kind = std::variant<Symbolic, AffineSpace, ProjLine, ProjSpace, PointCounts, EulerChar, HodgeDeligne, SymTable>;

  XModel(Kind k);  // NOLINT
  // Shorthand: A^d, P1, Pn, pt, symbolic[:d=D], counts:q=2[,N=[2,4,8]][,d=1],
  // euler:chi[,d=D], hd:1+uv[,d=D]; "@path" loads a .json or .csv config.
  static XModel parse(std::string_view text);
  static XModel from_json_text(std::string_view text);
  static XModel from_csv_text(std::string_view text);

  const Kind& kind() const { return kind_; }
  int dim() const;
  std::string name() const;
  std::string to_json_text() const;

  // [Sym^n X] as Laurent polynomials in L for n ≤ max_n, when the model has them.
  std::optional<std::vector<LaurentL>> l_expansion(int max_n) const;

 private:
  Kind kind_;
};

/// Specialization targets. Symbolic keeps the S_i free.
struct Target {
  enum class Kind { Symbolic, MotivicL, Count, Euler, Hodge };
  Kind kind = Kind::MotivicL;
  std::optional<Integer> q;  // count only; defaults to the model's q

  static Target parse(std::string_view text);  // motivic-L | count:q=Q | euler | hodge-deligne | symbolic
  std::string name() const;
};

class InsufficientModelData : public ModelError {
 public:
  using ModelError::ModelError;
};

/// A coefficient ring together with the images of S_n and L.
template <class R>
struct Domain {
  std::vector<R> sym;  // sym[n] = image of [Sym^n X]
  R lefschetz;
  R lefschetz_inverse;
  int dim = 0;

  int max_n() const { return static_cast<int>(sym.size()) - 1; }
  const R& S(int n) const {
    if (n < 0 || n > max_n())
      throw InsufficientModelData("model data covers Sym^n only for n <= " + std::to_string(max_n()) +
                                  ", needed n = " + std::to_string(n));
    return sym[static_cast<std::size_t>(n)];
  }
  R L_power(int k) const {
    R r(1);
    const R& b = k >= 0 ? lefschetz : lefschetz_inverse;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = r * b;
    return r;
  }
  R image(const MotivicClass& c) const {
    R out(0);
    for (const auto& [mono, coeff] : c.terms()) {
      R m = evaluate<R>(coeff, lefschetz, lefschetz_inverse);
      const auto& e = mono.exponents();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m = m * S(static_cast<int>(i) + 1);
      out = out + m;
    }
    return out;
  }
  TruncSeries<R> zeta(int order) const {
    TruncSeries<R> z(order);
    for (int n = 0; n <= order; ++n) z[n] = S(n);
    return z;
  }
};

Domain<MotivicClass> symbolic_domain(int dim, int max_n);
Domain<LaurentL> motivic_domain(const XModel& X, int max_n);
Domain<Rational> count_domain(const XModel& X, std::optional<Integer> q, int max_n);
Domain<Rational> euler_domain(const XModel& X, int max_n);
Domain<HodgePoly> hodge_domain(const XModel& X, int max_n);

/// Calls f(domain) with the domain matching the target.
template <class F>
auto with_domain(const XModel& X, const Target& target, int max_n, F&& f) {
  switch (target.kind) {
    case Target::Kind::Symbolic:
      return f(symbolic_domain(X.dim(), max_n));
    case Target::Kind::MotivicL:
      return f(motivic_domain(X, max_n));
    case Target::Kind::Count:
      return f(count_domain(X, target.q, max_n));
    case Target::Kind::Euler:
      return f(euler_domain(X, max_n));
    case Target::Kind::Hodge:
      break;
  }
  return f(hodge_domain(X, max_n));
}

/// The target a model implies when the caller did not choose one explicitly.
Target natural_target(const XModel& X, const Target& requested);

std::string render(const MotivicClass& x);
std::string render(const LaurentL& x);
std::string render(const Rational& x);
std::string render(const HodgePoly& x);

/// [Sym^n X] rendered under a target.
std::string sym_class(const XModel& X, int n, const Target& target);

/// Image of a class under a target, rendered.
std::string specialize_class(const MotivicClass& c, const XModel& X, const Target& target);

HodgePoly parse_hodge(std::string_view text);
LaurentL parse_laurent(std::string_view text);

/// (1-t)^{-c} coefficients, generalized binomials for negative c.
std::vector<Integer> negative_binomial_coeffs(const Integer& c, int max_n);

bool macdonald_check(long chi, int N);
/// Z_X = Z_U · Z_Y up to t^N under the target.
bool stratification_check(const XModel& U, const XModel& Y, const XModel& X, const Target& target, int N);
/// #Sym^n(X × A^1) = q^n #Sym^n X for n ≤ N, for a point-count model.
bool product_with_line_check(const XModel& X, int N);

}  // namespace motivic
