#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "motivic/laurent.hpp"

namespace motivic {

/// Exponents of S_1, S_2, ... (S_i stands for [Sym^i X]); trailing zeros trimmed.
class SymMonomial {
 public:
  SymMonomial() = default;
  static SymMonomial generator(int i, int power = 1);

  int exponent(int i) const { return i >= 1 && i <= static_cast<int>(e_.size()) ? e_[i - 1] : 0; }
  int max_generator() const { return static_cast<int>(e_.size()); }
  // Σ i·e_i, the number of points the monomial describes.
  int weight() const;
  bool is_one() const { return e_.empty(); }
  const std::vector<int>& exponents() const { return e_; }

  SymMonomial operator*(const SymMonomial& o) const;
  auto operator<=>(const SymMonomial&) const = default;
  std::string str() const;

 private:
  std::vector<int> e_;
};

class SymbolicEvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integer polynomial in the free generators S_1, S_2, ... with Laurent
/// coefficients in L. The S_i are treated as algebraically independent.
class MotivicClass {
 public:
  using Map = std::map<SymMonomial, LaurentL>;

  MotivicClass() = default;
  MotivicClass(long c);  // NOLINT: integers embed as constants
  explicit MotivicClass(const Integer& c);
  MotivicClass(const LaurentL& c);  // NOLINT: L-polynomials embed
  static MotivicClass S(int i, int power = 1);
  static MotivicClass L(int k = 1);
  static MotivicClass term(const SymMonomial& m, const LaurentL& c);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_generator() const;
  bool is_pure_L() const;
  LaurentL to_laurent() const;  // throws SymbolicEvaluationError if an S_i occurs

  MotivicClass& operator+=(const MotivicClass& o);
  MotivicClass& operator-=(const MotivicClass& o);
  MotivicClass& operator*=(const MotivicClass& o) { return *this = *this * o; }
  friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
  friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }
  friend MotivicClass operator-(MotivicClass a);
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
  friend bool operator==(const MotivicClass& a, const MotivicClass& b) { return a.terms_ == b.terms_; }

  MotivicClass pow(unsigned n) const;

  /// Renders as a sum of `c*L^k*S_i^e` monomials with explicit coefficients.
  std::string str() const;

 private:
  void add_term(const SymMonomial& m, const LaurentL& c);
  Map terms_;
};

/// max over monomials of d·(Σ i e_i) + (L-exponent); kNegInfDim for 0.
long dimension(const MotivicClass& c, int d);

/// Π S_{m_i} over a multiplicity profile.
MotivicClass sym_product(const std::vector<int>& profile);

}  // namespace motivic
