#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "motivic/laurent.hpp"
#include "motivic/motivic_class.hpp"

namespace motivic {

// Configuration series grade t by multiplicity sum; the hypersurface series
// Z^{-1}_{X,λ} grade t by number of points. Mixing them is an error.
enum class Grading { MultiplicitySum, PointCount };

inline const char* to_string(Grading g) {
  return g == Grading::MultiplicitySum ? "multiplicity-sum" : "point-count";
}

class SeriesMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational unit_inverse(const Rational& x) {
  if (x == 0) throw NotInvertible("constant term is zero");
  return Rational(1) / x;
}

inline Integer unit_inverse(const Integer& x) {
  if (x != 1 && x != -1) throw NotInvertible("integer constant term " + x.get_str() + " is not a unit");
  return x;
}

template <class Key>
LaurentPoly<Key> unit_inverse(const LaurentPoly<Key>& x) {
  if (x.terms().size() != 1) throw NotInvertible("constant term " + x.str() + " is not a monomial unit");
  const auto& [k, c] = *x.terms().begin();
  if (c != 1 && c != -1) throw NotInvertible("constant term " + x.str() + " is not a unit");
  return LaurentPoly<Key>::monomial(-k, c);
}

inline MotivicClass unit_inverse(const MotivicClass& x) {
  if (!x.is_pure_L()) throw NotInvertible("constant term " + x.str() + " involves S-generators");
  return MotivicClass(unit_inverse(x.to_laurent()));
}

/// Power series in t over R, kept modulo t^{order+1}.
template <class R>
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(0) {}
  explicit TruncSeries(int order, Grading g = Grading::MultiplicitySum) : grading_(g) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, R(0));
  }
  TruncSeries(std::vector<R> coeffs, Grading g) : grading_(g), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static TruncSeries one(int order, Grading g = Grading::MultiplicitySum) {
    TruncSeries s(order, g);
    s.c_[0] = R(1);
    return s;
  }
  // Σ_{n≤order} x^n t^n
  static TruncSeries geometric(int order, const R& x, Grading g = Grading::MultiplicitySum) {
    TruncSeries s(order, g);
    R p(1);
    for (int n = 0; n <= order; ++n) {
      s.c_[n] = p;
      p = p * x;
    }
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Grading grading() const { return grading_; }
  const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  R& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coeffs() const { return c_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.order(), a.grading_);
    const int n = a.order();
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i] == R(0)) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.c_[j] == R(0)) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries scaled(const R& x) const {
    TruncSeries r = *this;
    for (auto& v : r.c_) v = v * x;
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.grading_ == b.grading_ && a.c_ == b.c_;
  }

 private:
  void check(const TruncSeries& o) const {
    if (o.order() != order()) throw SeriesMismatch("truncation orders differ");
    if (o.grading_ != grading_)
      throw SeriesMismatch(std::string("cannot combine ") + to_string(grading_) + " and " + to_string(o.grading_) +
                           " series");
  }

  Grading grading_ = Grading::MultiplicitySum;
  std::vector<R> c_;
};

template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& f) {
  const int n = f.order();
  TruncSeries<R> g(n, f.grading());
  const R g0 = unit_inverse(f[0]);
  g[0] = g0;
  for (int k = 1; k <= n; ++k) {
    R acc(0);
    for (int i = 1; i <= k; ++i)
      if (!(f[i] == R(0))) acc = acc + f[i] * g[k - i];
    g[k] = -(g0 * acc);
  }
  return g;
}

/// f(t^a) mod t^{N+1}.
template <class R>
TruncSeries<R> compose_power(const TruncSeries<R>& f, int a) {
  if (a < 1) throw std::invalid_argument("compose_power needs a >= 1");
  TruncSeries<R> g(f.order(), f.grading());
  for (int i = 0; i * a <= f.order(); ++i) g[i * a] = f[i];
  return g;
}

/// t^k f, same order.
template <class R>
TruncSeries<R> shift_up(const TruncSeries<R>& f, int k) {
  if (k < 0) throw std::invalid_argument("negative shift");
  TruncSeries<R> g(f.order(), f.grading());
  for (int i = 0; i + k <= f.order(); ++i) g[i + k] = f[i];
  return g;
}

/// t^{-k} f as a series of order N-k; coefficients below t^k must vanish.
template <class R>
TruncSeries<R> shift_down(const TruncSeries<R>& f, int k) {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (k > f.order()) throw std::invalid_argument("shift exceeds truncation order");
  for (int i = 0; i < k; ++i)
    if (!(f[i] == R(0)))
      throw ConsistencyError("coefficient of t^" + std::to_string(i - k) + " does not cancel");
  std::vector<R> c(f.coeffs().begin() + k, f.coeffs().end());
  return TruncSeries<R>(std::move(c), f.grading());
}

template <class R>
TruncSeries<R> truncate(const TruncSeries<R>& f, int order) {
  if (order > f.order()) throw std::invalid_argument("cannot extend a truncated series");
  std::vector<R> c(f.coeffs().begin(), f.coeffs().begin() + order + 1);
  return TruncSeries<R>(std::move(c), f.grading());
}

/// Reinterprets t under another grading. The only sanctioned way to cross
/// gradings, used where an identity equates the two variables.
template <class R>
TruncSeries<R> regrade(const TruncSeries<R>& f, Grading g) {
  return TruncSeries<R>(f.coeffs(), g);
}

template <class R, class F>
auto map_coeffs(const TruncSeries<R>& f, F fn) -> TruncSeries<decltype(fn(f[0]))> {
  using Out = decltype(fn(f[0]));
  std::vector<Out> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(fn(x));
  return TruncSeries<Out>(std::move(c), f.grading());
}

// --- evaluation at t = L^{-m} --------------------------------------------

class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LEvaluation {
  MotivicClass value;
  long tail_indicator = kNegInfDim;  // dimension bound of the first discarded contribution
};

/// Σ_{n≤N} f_n L^{-mn}, dropping monomials of dimension below -cutoff under
/// ambient dimension d. Coefficient n is assumed to have dimension at most
/// d·n + dim_offset, which bounds the unseen tail by (d-m)(N+1) + dim_offset.
LEvaluation eval_at_L_power(const TruncSeries<MotivicClass>& f, int m, int d, int cutoff,
                            bool allow_symbolic = false, long dim_offset = 0);
LEvaluation eval_at_L_power(const TruncSeries<LaurentL>& f, int m, int d, int cutoff, long dim_offset = 0);

/// Σ_{n≤N} f_n u^n.
template <class R>
R evaluate_series(const TruncSeries<R>& f, const R& u) {
  R acc(0);
  for (int n = f.order(); n >= 0; --n) acc = acc * u + f[n];
  return acc;
}

}  // namespace motivic
