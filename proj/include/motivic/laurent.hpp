#pragma once

#include <gmpxx.h>

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace motivic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent of a Hodge–Deligne monomial u^u v^v.
struct UV {
  int u = 0;
  int v = 0;
  auto operator<=>(const UV&) const = default;
  UV operator+(const UV& o) const { return {u + o.u, v + o.v}; }
  UV operator-() const { return {-u, -v}; }
  UV operator*(int k) const { return {u * k, v * k}; }
};

namespace detail {

inline std::string render_exponent(int k) {
  if (k == 0) return "";
  if (k == 1) return "L";
  return "L^" + std::to_string(k);
}

inline std::string render_exponent(const UV& e) {
  std::string out;
  auto var = [](const char* x, int n) { return n == 1 ? std::string(x) : x + ("^" + std::to_string(n)); };
  if (e.u != 0) out += var("u", e.u);
  if (e.v != 0) out += (out.empty() ? "" : "*") + var("v", e.v);
  return out;
}

inline bool is_zero_key(int k) { return k == 0; }
inline bool is_zero_key(const UV& e) { return e.u == 0 && e.v == 0; }

}  // namespace detail

/// Finitely supported integer combination of monomials indexed by Key
/// (an additive monoid). No zero coefficients are stored.
template <class Key>
class LaurentPoly {
 public:
  using Map = std::map<Key, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT: integers embed as constants
    if (c != 0) terms_[Key{}] = c;
  }
  explicit LaurentPoly(const Integer& c) {
    if (c != 0) terms_[Key{}] = c;
  }
  static LaurentPoly monomial(const Key& k, const Integer& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_[k] = c;
    return p;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  std::optional<Key> top() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }
  std::optional<Key> bottom() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly r(1), base = *this;
    while (n) {
      if (n & 1U) r *= base;
      base *= base;
      n >>= 1U;
    }
    return r;
  }

  void add_term(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Keeps only monomials whose key satisfies pred.
  template <class Pred>
  LaurentPoly filtered(Pred pred) const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_)
      if (pred(k)) r.terms_.emplace(k, c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      const std::string mono = detail::render_exponent(k);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Integer mag = abs(c);
      if (mono.empty())
        os << mag;
      else if (mag == 1)
        os << mono;
      else
        os << mag << '*' << mono;
      first = false;
    }
    return os.str();
  }

 private:
  Map terms_;
};

/// Laurent polynomials in the Lefschetz symbol L.
using LaurentL = LaurentPoly<int>;
/// Laurent polynomials in u, v (virtual Hodge–Deligne polynomials).
using HodgePoly = LaurentPoly<UV>;

inline LaurentL lefschetz(int k = 1) { return LaurentL::monomial(k); }

/// Dimension of a class in L alone; 0 maps to the lowest sentinel.
inline constexpr long kNegInfDim = std::numeric_limits<long>::min();

inline long dimension(const LaurentL& x) { return x.is_zero() ? kNegInfDim : *x.top(); }

/// Substitutes L -> value (value must be invertible when negative powers occur).
template <class R>
R evaluate(const LaurentL& x, const R& value, const R& inverse) {
  R out(0);
  for (const auto& [k, c] : x.terms()) {
    R m(1);
    const R& base = k >= 0 ? value : inverse;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) m = m * base;
    out = out + R(c) * m;
  }
  return out;
}

class TruncationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inverse of x in the completion, keeping exponents >= -cutoff. The leading
/// (top) coefficient must be +1 or -1.
inline LaurentL truncated_inverse(const LaurentL& x, int cutoff) {
  if (x.is_zero()) throw TruncationError("inverse of zero");
  const int k = *x.top();
  const Integer lead = x.coeff(k);
  if (lead != 1 && lead != -1) throw TruncationError("leading coefficient of " + x.str() + " is not a unit");
  // x = lead L^k (1 - r) with r supported in negative exponents.
  LaurentL r;
  for (const auto& [e, c] : x.terms())
    if (e != k) r.add_term(e - k, -c * lead);
  // 1/x = lead L^{-k} Σ r^i; keep exponents >= -cutoff + k in the sum.
  const int floor_exp = -cutoff + k;
  auto keep = [&](int e) { return e >= floor_exp; };
  LaurentL sum(1), power(1);
  while (true) {
    power = (power * r).filtered(keep);
    if (power.is_zero()) break;
    sum += power;
  }
  LaurentL inv = LaurentL::monomial(-k, lead) * sum;
  return inv.filtered([&](int e) { return e >= -cutoff; });
}

inline LaurentL truncate(const LaurentL& x, int cutoff) {
  return x.filtered([&](int e) { return e >= -cutoff; });
}

}  // namespace motivic
