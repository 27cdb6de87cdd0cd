#pragma once

#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "motivic/model.hpp"
#include "motivic/partition.hpp"
#include "motivic/series.hpp"

namespace motivic {

// --- configuration classes (symbolic) -------------------------------------

/// w for a multiplicity profile, via the overlap recursion
/// w(m ∪ {j}) = w(m) w([j]) - Σ_{s≠0} w({m_i - s_i} ∪ {s_i} ∪ {j - Σ s_i}).
MotivicClass w_class_profile(const MultiplicityProfile& m);
MotivicClass w_class(const GenPartition& lambda);
/// Σ over ≪-chains λ = μ0 ≪ ... ≪ μk of (-1)^k Π S_{m(μk)}.
MotivicClass w_class_chains(const GenPartition& lambda);
/// Π S_{m(λ)} minus w over the rest of the closure of f(λ).
MotivicClass w_class_closure(const GenPartition& lambda);
/// Σ_{λ ≤ μ} w_μ.
MotivicClass wbar_class(const GenPartition& lambda);

namespace detail {

/// Images of w-classes in a domain, computed directly there.
template <class R>
class WTable {
 public:
  explicit WTable(const Domain<R>* D) : D_(D) {}

  // j distinct unlabelled points: the t^j coefficient of Z(t)/Z(t^2),
  // from S_n = Σ_k S_k w([n-2k]).
  R base(int j) {
    while (static_cast<int>(base_.size()) <= j) {
      const int n = static_cast<int>(base_.size());
      R v = D_->S(n);
      for (int k = 1; 2 * k <= n; ++k) v = v - D_->S(k) * base_[n - 2 * k];
      base_.push_back(v);
    }
    return base_[j];
  }

  R w(IntPartition m) {
    std::erase(m, 0);
    m = canonical(std::move(m));
    if (m.empty()) return R(1);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    const int j = m.back();
    IntPartition rest(m.begin(), m.end() - 1);
    R result = rest.empty() ? base(j) : w(rest) * base(j);
    if (!rest.empty()) {
      std::vector<int> s(rest.size(), 0);
      auto enumerate = [&](auto&& self, std::size_t i, int budget) -> void {
        if (i == rest.size()) {
          if (budget == j) return;  // s = 0
          IntPartition next;
          for (std::size_t k = 0; k < rest.size(); ++k) {
            next.push_back(rest[k] - s[k]);
            next.push_back(s[k]);
          }
          next.push_back(budget);
          result = result - w(std::move(next));
          return;
        }
        for (int v = 0; v <= std::min(rest[i], budget); ++v) {
          s[i] = v;
          self(self, i + 1, budget - v);
        }
        s[i] = 0;
      };
      enumerate(enumerate, 0, j);
    }
    memo_.emplace(std::move(m), result);
    return result;
  }

 private:
  const Domain<R>* D_;
  std::vector<R> base_;
  std::map<IntPartition, R> memo_;
};

}  // namespace detail

/// Generating functions over one specialization domain.
template <class R>
class GenFun {
 public:
  explicit GenFun(Domain<R> D) : D_(std::move(D)), w_(&D_) {}
  GenFun(const GenFun&) = delete;
  GenFun& operator=(const GenFun&) = delete;

  const Domain<R>& domain() const { return D_; }

  R w(const IntPartition& profile) { return w_.w(profile); }
  R w(const GenPartition& lambda) { return w_.w(multiplicity_profile(lambda)); }
  R wbar(const GenPartition& lambda) {
    R acc(0);
    for (const auto& mu : merge_closure(lambda)) acc = acc + w(mu);
    return acc;
  }

  TruncSeries<R> zeta(int N) const { return D_.zeta(N); }

  // Σ_{|λ|=s} w_λ t^{Σλ}
  TruncSeries<R> zeta_s(int s, int N) {
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    TruncSeries<R> z(N);
    for (const auto& lam : enumerate_k_parts(s, N))
      z[static_cast<int>(sum(lam))] = z[static_cast<int>(sum(lam))] + w(multiplicity_profile(GenPartition::from_ints(lam)));
    return z;
  }

  // K_{(<a)} = Z(t)/Z(t^a)
  TruncSeries<R> k_base(int a, int N) {
    if (a < 2) throw std::invalid_argument("need a >= 2");
    const TruncSeries<R> z = zeta(N);
    return z * series_inverse(compose_power(z, a));
  }

  TruncSeries<R> k_lt_a(const IntPartition& nu, int a, int N) {
    if (a < 2) throw std::invalid_argument("need a >= 2");
    for (int p : nu)
      if (p < a) throw PartitionError("every part of nu must be at least a = " + std::to_string(a));
    return k_lt_a_profile(multiplicity_profile(GenPartition::from_ints(nu)), a, N);
  }

  // K_{(<a)ν} for a formal ν with profile m.
  TruncSeries<R> k_lt_a_profile(const MultiplicityProfile& m, int a, int N) {
    if (m.empty()) return k_base(a, N);
    const auto key = std::make_tuple(a, m, N);
    if (auto it = k_memo_.find(key); it != k_memo_.end()) return it->second;

    std::vector<Part> parts;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int c = 0; c < m[i]; ++c) parts.push_back(Part::of("x" + std::to_string(i + 1)));
    const GenPartition nu(parts);

    TruncSeries<R> num = k_base(a, N).scaled(w(m));
    TruncSeries<R> den(N);
    for (const auto& added : add_lt_a(nu, a)) {
      const int k = static_cast<int>(added.partition.total().coeff(kUnit));
      if (added.same_profile) {
        if (k <= N) den[k] = den[k] + R(1);
      } else {
        num -= shift_up(k_lt_a_profile(multiplicity_profile(added.partition), a, N), k);
      }
    }
    TruncSeries<R> K = num * series_inverse(den);
    k_memo_.emplace(key, K);
    return K;
  }

  // K̄_{1•ν}, peeling the smallest part a of ν.
  TruncSeries<R> kbar(const IntPartition& nu_in, int N) {
    const IntPartition nu = canonical(nu_in);
    for (int p : nu)
      if (p < 2) throw PartitionError("parts of nu must be at least 2");
    if (nu.empty()) return zeta(N);
    const int a = nu.back();
    const IntPartition rest(nu.begin(), nu.end() - 1);
    const int M = N + a;
    const long rest_sum = sum(rest);
    TruncSeries<R> W = kbar(rest, M);
    for (const auto& mu : s_set(rest, a)) {
      const long k = sum(mu) - rest_sum;
      if (k > M) continue;
      W -= shift_up(k_lt_a(mu, a, M), static_cast<int>(k));
    }
    return shift_down(W, a);
  }

  // t^{-a-rb}(Z - (Z/Z(t^b)) Σ_{i<r} S_i t^{bi} - (Z/Z(t^a)) S_r t^{rb})
  TruncSeries<R> kbar_abr_closed(int a, int b, int r, int N) {
    if (a < 2 || b < a || r < 0) throw std::invalid_argument("need 1 < a <= b and r >= 0");
    const int M = N + a + r * b;
    const TruncSeries<R> z = zeta(M);
    TruncSeries<R> low(M);
    for (int i = 0; i < r; ++i) low[b * i] = D_.S(i);
    TruncSeries<R> top(M);
    top[r * b] = D_.S(r);
    TruncSeries<R> X = z - k_base(b, M) * low - k_base(a, M) * top;
    return shift_down(X, a + r * b);
  }

  // Σ_j [Sym^j_s X] t^j = Z^{[s]}(t^2) Z(t)/Z(t^2)
  TruncSeries<R> sym_s(int s, int N) { return compose_power(zeta_s(s, N), 2) * k_base(2, N); }

  // Z^{-1}_{X,λ}, t counting points; compositions of the same multiset are grouped.
  TruncSeries<R> zinv(const GenPartition& lambda, int N_pts) {
    TruncSeries<R> z(N_pts, Grading::PointCount);
    const int base = static_cast<int>(lambda.size());
    if (base > N_pts) return z;
    const MultiplicityProfile ml = multiplicity_profile(lambda);
    const int room = N_pts - base;
    for (int k = 0; k <= room; ++k) {
      for (const auto& rho : enumerate_k_parts(k, room)) {
        // number of orderings of the distinct multiplicities = k! / Π (repeats)!
        Integer ways = 1;
        for (int i = 2; i <= k; ++i) ways *= i;
        for (std::size_t i = 0; i < rho.size();) {
          std::size_t e = i;
          while (e < rho.size() && rho[e] == rho[i]) ++e;
          for (std::size_t f = 2; f <= e - i; ++f) ways /= static_cast<unsigned long>(f);
          i = e;
        }
        if (k % 2 == 1) ways = -ways;
        IntPartition profile = ml;
        profile.insert(profile.end(), rho.begin(), rho.end());
        const int n = base + static_cast<int>(sum(rho));
        z[n] = z[n] + R(ways) * w(profile);
      }
    }
    return z;
  }

  // Same series by listing every μ in Q and forming λ·μ.
  TruncSeries<R> zinv_bruteforce(const GenPartition& lambda, int N_pts) {
    TruncSeries<R> z(N_pts, Grading::PointCount);
    const int base = static_cast<int>(lambda.size());
    if (base > N_pts) return z;
    for (const auto& q : enumerate_Q(N_pts - base)) {
      const GenPartition joined = disjoint_concat(lambda, GenPartition::from_ints(q.partition));
      const int n = static_cast<int>(joined.size());
      const R term = w(joined);
      z[n] = q.distinct % 2 == 0 ? z[n] + term : z[n] - term;
    }
    return z;
  }

  // Σ_{μ∈Q} (-1)^{‖μ‖} w_μ t^{|μ|}, read in the multiplicity-sum grading.
  TruncSeries<R> inverse_via_Q(int N) { return regrade(zinv(GenPartition{}, N), Grading::MultiplicitySum); }

 private:
  Domain<R> D_;
  detail::WTable<R> w_;
  std::map<std::tuple<int, MultiplicityProfile, int>, TruncSeries<R>> k_memo_;
};

// --- series requests, limits, densities -------------------------------------

/// *^s: s points carrying one shared label.
GenPartition star_power(int s);
/// 1·2·…·s: s points with distinct labels.
GenPartition ordered_labels(int s);

struct SeriesRequest {
  enum class Kind { K, KBar, SymSing, Zeta, ZetaS, ZetaInv };
  Kind kind = Kind::Zeta;
  IntPartition nu;      // K, KBar
  int a = 2;            // K
  int s = 0;            // SymSing, ZetaS, ZetaInv (*^s)
  std::optional<GenPartition> lambda;  // ZetaInv, overrides *^s

  std::string name() const;
  // Σν for K and KBar: their t^j coefficient lives in Sym^{j+Σν}.
  int sym_shift() const;
  Grading grading() const { return kind == Kind::ZetaInv ? Grading::PointCount : Grading::MultiplicitySum; }
};

template <class R>
TruncSeries<R> build_series(GenFun<R>& G, const SeriesRequest& req, int N) {
  switch (req.kind) {
    case SeriesRequest::Kind::K:
      return G.k_lt_a(req.nu, req.a, N);
    case SeriesRequest::Kind::KBar:
      return G.kbar(req.nu, N);
    case SeriesRequest::Kind::SymSing:
      return G.sym_s(req.s, N);
    case SeriesRequest::Kind::Zeta:
      return G.zeta(N);
    case SeriesRequest::Kind::ZetaS:
      return G.zeta_s(req.s, N);
    case SeriesRequest::Kind::ZetaInv:
      break;
  }
  if (req.lambda) return G.zinv(*req.lambda, N);
  return G.zinv(star_power(req.s), N);
}

using Value = std::variant<MotivicClass, Rational>;
std::string render(const Value& v);
double approx(const Value& v);  // Rational only

enum class Normalization { Sym, MPower };

struct LimitReport {
  Value value;
  int cutoff = 0;
  // Motivic: dimension of the largest contribution not yet settled at the
  // accepted order. Count: magnitude of the change between the last two orders.
  long tail_dim = kNegInfDim;
  double tail = 0;
  Normalization normalization = Normalization::Sym;
  int shift = 0;
  int order = 0;
  std::string zeta_expression;
  std::string target;
};

/// lim Y_j / [Sym^{j+shift}] (or / M^{j+shift}) = E(M^{-1}) · (normalizing factor), E = Y/Z.
LimitReport stable_limit(const XModel& X, const Target& target, const SeriesRequest& Y, Normalization norm,
                         int cutoff);
/// (w_ν/ζ(2d)) L^{-dΣν} / (1+L^{-d})^{|ν|} for ν of distinct parts > 1.
LimitReport distinct_nu_limit(const XModel& X, const Target& target, const IntPartition& nu, int cutoff);

struct HypersurfaceDensity {
  std::string kind;  // unordered | ordered | multi
  int d = 0;
  int s = 0;  // singular points, or m for multi
  Value value;
  std::optional<Value> cross_value;  // the second route, when one exists
  bool cross_checked = false;
  int cutoff = 0;
  long tail_dim = kNegInfDim;
  double tail = 0;
  std::string expression;
  std::string target;
};

class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

HypersurfaceDensity hyper_density(const XModel& X, int d, int s, int cutoff, const Target& target);
HypersurfaceDensity hyper_ordered_density(const XModel& X, int d, int s, int cutoff, const Target& target);
HypersurfaceDensity multi_point_density(const XModel& X, int d, int m, int cutoff, const Target& target);

/// Largest n for which the model supplies [Sym^n X] (64 for closed-form models).
int model_capacity(const XModel& X);

}  // namespace motivic
