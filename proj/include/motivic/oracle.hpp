#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "motivic/laurent.hpp"
#include "motivic/partition.hpp"

namespace motivic {

inline constexpr long long kDefaultGuard = 10'000'000;
inline constexpr long long kMaxGuard = 100'000'000;

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPointCounts : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws GuardError if states > guard, or if guard itself exceeds kMaxGuard.
void check_guard(long double states, long long guard, const char* what);

/// GF(p^k), q ≤ 64, elements encoded as base-p digit vectors of their
/// polynomial representative modulo the smallest irreducible monic modulus.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }
  const std::vector<int>& modulus() const { return modulus_; }  // over F_p, low degree first

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  // The unique p-th root (Frobenius is bijective on a finite field).
  int pth_root(int a) const { return root_[a]; }
  int from_int(long n) const;  // image of an integer

 private:
  int q_, p_, k_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_, root_;
};

/// Polynomials over F_q, coefficients low degree first, no trailing zeros.
using FqPoly = std::vector<int>;

namespace fq {
int degree(const FqPoly& f);
FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b);
// quotient, remainder
std::pair<FqPoly, FqPoly> divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly monic(const FiniteField& F, FqPoly a);
FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b);
FqPoly derivative(const FiniteField& F, const FqPoly& f);
/// Monic polynomial of degree n with index in [0, q^n).
FqPoly monic_from_index(const FiniteField& F, int n, long long index);
/// f = Π_i P_i^i with P_i squarefree and pairwise coprime; returns i -> P_i (f monic).
std::map<int, FqPoly> squarefree_decomposition(const FiniteField& F, const FqPoly& f);
/// Multiplicities of the geometric roots of a monic f: deg(P_i) copies of i.
IntPartition multiplicity_pattern(const FiniteField& F, const FqPoly& f);
bool is_squarefree(const FiniteField& F, const FqPoly& f);
}  // namespace fq

enum class Curve { A1, P1 };

/// Tuples (D_a) of pairwise disjoint reduced effective divisors, one per
/// distinct value a of λ, with deg D_a = multiplicity of a in λ.
Integer count_w_lambda(Curve X, int q, const IntPartition& lambda, long long guard = kDefaultGuard);
/// Independent route: divisors of degree Σλ whose multiplicity pattern is λ.
Integer count_pattern_divisors(Curve X, int q, const IntPartition& lambda, long long guard = kDefaultGuard);

/// Monic degree-j polynomials with exactly s geometric roots of multiplicity ≥ 2.
Integer count_sym_s(int q, int j, int s, long long guard = kDefaultGuard);
/// hist[s] for all s at once.
std::vector<Integer> sym_s_histogram(int q, int j, long long guard = kDefaultGuard);

/// Fraction of all q^{j+1} sections of O(j) on P^1 whose divisor has exactly
/// s multiple geometric points (the zero section counts only in the denominator).
Rational count_hyper_s(int q, int j, int s, long long guard = kDefaultGuard);

/// #Sym^n X(F_q) from exp(Σ N_r t^r / r), n ≤ n_max.
std::vector<Integer> exp_formula_sym_counts(const std::vector<Integer>& N, int n_max);

struct PowerDensity {
  long long count = 0;
  long long bound = 0;
  Rational fraction;
};

/// Proportion of 1 ≤ n ≤ bound divisible by c_0^a c_1^b ... c_r^b with all c_i > 1.
PowerDensity integer_power_density(int a, int b, int r, long long bound, long long guard = kDefaultGuard);

/// Predicted limit 1 - (1/ζ(b)) Σ_{i<r} h_i - h_r/ζ(a), h_i the complete
/// homogeneous sums of p^{-b} over primes p ≤ prime_bound.
double integer_power_prediction(int a, int b, int r, long prime_bound = 1'000'000);

double riemann_zeta(double s);

}  // namespace motivic
