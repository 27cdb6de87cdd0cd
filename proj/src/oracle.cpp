#include "motivic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace motivic {

void check_guard(long double states, long long guard, const char* what) {
  if (guard > kMaxGuard)
    throw GuardError("guard " + std::to_string(guard) + " exceeds the hard limit " + std::to_string(kMaxGuard));
  if (states > static_cast<long double>(guard))
    throw GuardError(std::string(what) + ": " + std::to_string(static_cast<long long>(states)) +
                     " states exceed guard " + std::to_string(guard));
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Plain arithmetic over F_p used only to find the modulus.
using PPoly = std::vector<int>;

void trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmod(PPoly a, const PPoly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  int inv_lead = 1;
  while (inv_lead * b.back() % p != 1) ++inv_lead;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = a.back() * inv_lead % p;
    for (int i = 0; i <= db; ++i) a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

PPoly from_index(long long idx, int deg, int p) {
  PPoly f(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    f[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  f[deg] = 1;
  return f;
}

bool irreducible(const PPoly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx)
      if (pmod(f, from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q), p_(0), k_(0) {
  if (q < 2 || q > 64) throw std::invalid_argument("field size must be a prime power in [2, 64]");
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int x = q, k = 0;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    if (x != 1) break;
    p_ = p;
    k_ = k;
    break;
  }
  if (p_ == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");

  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    long long count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (long long idx = 0; idx < count; ++idx) {
      PPoly f = from_index(idx, k_, p_);
      if (irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
  }

  auto digits = [&](int e) {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = e % p_;
      e /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int e = 0;
    for (int i = k_ - 1; i >= 0; --i) e = e * p_ + d[i];
    return e;
  };

  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  root_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits(b);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(s);
      PPoly prod(2 * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      PPoly r = k_ == 1 ? PPoly{prod[0]} : pmod(prod, modulus_, p_);
      r.resize(k_, 0);
      mul_[a * q_ + b] = encode(r);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
  // a^{q/p} is the p-th root of a.
  for (int a = 0; a < q_; ++a) {
    int r = 1;
    for (int i = 0; i < q_ / p_; ++i) r = mul_[r * q_ + a];
    root_[a] = a == 0 ? 0 : r;
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[a];
}

int FiniteField::from_int(long n) const { return static_cast<int>(((n % p_) + p_) % p_); }

namespace fq {

namespace {
void trim(FqPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
}  // namespace

int degree(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<FqPoly, FqPoly> divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  FqPoly r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) return {{}, r};
  FqPoly quo(r.size() - b.size() + 1, 0);
  const int inv_lead = F.inv(b.back());
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const int c = F.mul(r.back(), inv_lead);
    quo[shift] = c;
    for (int i = 0; i <= db; ++i) r[i + shift] = F.sub(r[i + shift], F.mul(c, b[i]));
    trim(r);
  }
  trim(quo);
  return {quo, r};
}

FqPoly monic(const FiniteField& F, FqPoly a) {
  trim(a);
  if (a.empty()) return a;
  const int inv_lead = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv_lead);
  return a;
}

FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FqPoly r = divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

FqPoly derivative(const FiniteField& F, const FqPoly& f) {
  if (f.size() <= 1) return {};
  FqPoly d(f.size() - 1, 0);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(F.from_int(static_cast<long>(i)), f[i]);
  trim(d);
  return d;
}

FqPoly monic_from_index(const FiniteField& F, int n, long long index) {
  FqPoly f(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    f[i] = static_cast<int>(index % F.q());
    index /= F.q();
  }
  f[n] = 1;
  return f;
}

namespace {

FqPoly exact_div(const FiniteField& F, const FqPoly& a, const FqPoly& b) { return divmod(F, a, b).first; }

void merge_factor(const FiniteField& F, std::map<int, FqPoly>& out, int mult, const FqPoly& P) {
  auto [it, inserted] = out.try_emplace(mult, P);
  if (!inserted) it->second = mul(F, it->second, P);
}

}  // namespace

std::map<int, FqPoly> squarefree_decomposition(const FiniteField& F, const FqPoly& f) {
  std::map<int, FqPoly> out;
  if (degree(f) <= 0) return out;
  FqPoly g = gcd(F, f, derivative(F, f));
  FqPoly w = exact_div(F, f, g);
  int i = 1;
  while (degree(w) > 0) {
    FqPoly y = gcd(F, w, g);
    FqPoly z = exact_div(F, w, y);
    if (degree(z) > 0) merge_factor(F, out, i, z);
    ++i;
    w = y;
    g = exact_div(F, g, y);
  }
  if (degree(g) > 0) {
    // What is left is a p-th power: g(x) = h(x)^p.
    const int p = F.p();
    FqPoly h(static_cast<std::size_t>(degree(g) / p) + 1, 0);
    for (int k = 0; k <= degree(g); k += p) h[k / p] = F.pth_root(g[k]);
    for (const auto& [m, P] : squarefree_decomposition(F, h)) merge_factor(F, out, m * p, P);
  }
  return out;
}

IntPartition multiplicity_pattern(const FiniteField& F, const FqPoly& f) {
  IntPartition out;
  for (const auto& [m, P] : squarefree_decomposition(F, f)) out.insert(out.end(), degree(P), m);
  return canonical(std::move(out));
}

bool is_squarefree(const FiniteField& F, const FqPoly& f) {
  if (degree(f) <= 0) return true;
  FqPoly d = derivative(F, f);
  if (d.empty()) return false;
  return degree(gcd(F, f, d)) == 0;
}

}  // namespace fq

namespace {

long double power_ld(int q, int n) { return std::pow(static_cast<long double>(q), n); }

long long power_ll(int q, int n) {
  long long r = 1;
  for (int i = 0; i < n; ++i) r *= q;
  return r;
}

struct Divisor {
  FqPoly poly;
  bool infinity = false;
};

// Reduced effective divisors of degree m on the curve.
std::vector<Divisor> reduced_divisors(const FiniteField& F, Curve X, int m) {
  std::vector<Divisor> out;
  auto add_degree = [&](int n, bool inf) {
    if (n < 0) return;
    const long long count = power_ll(F.q(), n);
    for (long long idx = 0; idx < count; ++idx) {
      FqPoly f = fq::monic_from_index(F, n, idx);
      if (fq::is_squarefree(F, f)) out.push_back({std::move(f), inf});
    }
  };
  add_degree(m, false);
  if (X == Curve::P1) add_degree(m - 1, true);
  return out;
}

}  // namespace

Integer count_w_lambda(Curve X, int q, const IntPartition& lambda, long long guard) {
  std::map<int, int> mult;
  for (int v : lambda) {
    if (v < 1) throw std::invalid_argument("partition values must be positive");
    ++mult[v];
  }
  long double states = 1;
  for (const auto& [v, m] : mult) states *= power_ld(q, m) * (X == Curve::P1 ? 2 : 1);
  check_guard(states, guard, "count_w_lambda");

  const FiniteField F(q);
  std::vector<std::vector<Divisor>> choices;
  for (const auto& [v, m] : mult) choices.push_back(reduced_divisors(F, X, m));

  std::vector<const Divisor*> chosen;
  Integer total = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      ++total;
      return;
    }
    for (const Divisor& D : choices[i]) {
      bool ok = true;
      for (const Divisor* E : chosen) {
        if ((D.infinity && E->infinity) || fq::degree(fq::gcd(F, D.poly, E->poly)) > 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(&D);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return total;
}

Integer count_pattern_divisors(Curve X, int q, const IntPartition& lambda, long long guard) {
  const IntPartition target = canonical(lambda);
  const int n = static_cast<int>(sum(target));
  check_guard(power_ld(q, n) * (X == Curve::P1 ? 2 : 1), guard, "count_pattern_divisors");
  const FiniteField F(q);
  Integer total = 0;
  const int max_inf = X == Curve::P1 ? n : 0;
  for (int inf = 0; inf <= max_inf; ++inf) {
    const int deg = n - inf;
    const long long count = power_ll(q, deg);
    for (long long idx = 0; idx < count; ++idx) {
      IntPartition pat = fq::multiplicity_pattern(F, fq::monic_from_index(F, deg, idx));
      if (inf > 0) pat.push_back(inf);
      if (canonical(std::move(pat)) == target) ++total;
    }
  }
  return total;
}

std::vector<Integer> sym_s_histogram(int q, int j, long long guard) {
  check_guard(power_ld(q, j), guard, "sym_s_histogram");
  const FiniteField F(q);
  std::vector<Integer> hist(static_cast<std::size_t>(j) + 1, 0);
  const long long count = power_ll(q, j);
  for (long long idx = 0; idx < count; ++idx) {
    int s = 0;
    for (const auto& [m, P] : fq::squarefree_decomposition(F, fq::monic_from_index(F, j, idx)))
      if (m >= 2) s += fq::degree(P);
    ++hist[s];
  }
  return hist;
}

Integer count_sym_s(int q, int j, int s, long long guard) {
  const auto hist = sym_s_histogram(q, j, guard);
  return s >= 0 && s < static_cast<int>(hist.size()) ? hist[s] : Integer(0);
}

Rational count_hyper_s(int q, int j, int s, long long guard) {
  check_guard(power_ld(q, j + 1), guard, "count_hyper_s");
  // A nonzero section is a nonzero scalar times (monic part of degree j-m, with m the order at infinity);
  // infinity is one more multiple point when m ≥ 2.
  Integer hits = 0;
  for (int m = 0; m <= j; ++m) {
    const int need = s - (m >= 2 ? 1 : 0);
    if (need < 0) continue;
    hits += count_sym_s(q, j - m, need, guard);
  }
  Integer num = hits * (q - 1);
  Integer den = 1;
  for (int i = 0; i <= j; ++i) den *= q;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Integer> exp_formula_sym_counts(const std::vector<Integer>& N, int n_max) {
  if (static_cast<int>(N.size()) < n_max)
    throw InvalidPointCounts("need N_r for r <= " + std::to_string(n_max) + ", have " + std::to_string(N.size()));
  for (std::size_t r = 0; r < N.size(); ++r)
    if (N[r] < 0) throw InvalidPointCounts("N_" + std::to_string(r + 1) + " is negative");
  std::vector<Integer> s(static_cast<std::size_t>(n_max) + 1, 0);
  s[0] = 1;
  // n s_n = Σ_{r=1}^{n} N_r s_{n-r}
  for (int n = 1; n <= n_max; ++n) {
    Integer acc = 0;
    for (int r = 1; r <= n; ++r) acc += N[r - 1] * s[n - r];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n)))
      throw InvalidPointCounts("point counts give a non-integral #Sym^" + std::to_string(n));
    s[n] = acc / n;
    if (s[n] < 0) throw InvalidPointCounts("point counts give a negative #Sym^" + std::to_string(n));
  }
  return s;
}

PowerDensity integer_power_density(int a, int b, int r, long long bound, long long guard) {
  if (a < 2 || b < a || r < 0) throw std::invalid_argument("need 2 <= a <= b and r >= 0");
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  check_guard(static_cast<long double>(bound), guard, "integer_power_density");

  // Primes whose a-th power can divide some n ≤ bound.
  long long pmax = 1;
  while (true) {
    long double v = std::pow(static_cast<long double>(pmax + 1), a);
    if (v > static_cast<long double>(bound)) break;
    ++pmax;
  }
  std::vector<bool> composite(static_cast<std::size_t>(pmax) + 1, false);
  std::vector<long long> primes;
  for (long long p = 2; p <= pmax; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (long long m = p * p; m <= pmax; m += p) composite[m] = true;
  }

  constexpr long long kSegment = 1 << 20;
  constexpr std::uint8_t kNoBin = 255;
  std::vector<std::uint16_t> total_b(kSegment);
  std::vector<std::uint8_t> min_loss(kSegment);
  long long hits = 0;
  for (long long lo = 1; lo <= bound; lo += kSegment) {
    const long long hi = std::min(bound, lo + kSegment - 1);
    const long long len = hi - lo + 1;
    std::fill(total_b.begin(), total_b.begin() + len, 0);
    std::fill(min_loss.begin(), min_loss.begin() + len, kNoBin);
    for (long long p : primes) {
      long long pa = 1;
      for (int i = 0; i < a; ++i) pa *= p;
      for (long long n = ((lo + pa - 1) / pa) * pa; n <= hi; n += pa) {
        long long x = n;
        int k = 0;
        while (x % p == 0) {
          x /= p;
          ++k;
        }
        const long long i = n - lo;
        total_b[i] = static_cast<std::uint16_t>(total_b[i] + k / b);
        const int loss = k / b - (k - a) / b;
        if (loss < min_loss[i]) min_loss[i] = static_cast<std::uint8_t>(loss);
      }
    }
    for (long long i = 0; i < len; ++i)
      if (min_loss[i] != kNoBin && total_b[i] - min_loss[i] >= r) ++hits;
  }
  PowerDensity out;
  out.count = hits;
  out.bound = bound;
  out.fraction = Rational(Integer(static_cast<long>(hits)), Integer(static_cast<long>(bound)));
  out.fraction.canonicalize();
  return out;
}

double riemann_zeta(double s) {
  if (s <= 1) throw std::domain_error("zeta(s) needs s > 1");
  constexpr int M = 1000;
  double acc = 0;
  for (int n = M - 1; n >= 1; --n) acc += std::pow(static_cast<double>(n), -s);
  const double m = M;
  // Euler–Maclaurin tail from M on.
  acc += std::pow(m, 1 - s) / (s - 1) + 0.5 * std::pow(m, -s) + s * std::pow(m, -s - 1) / 12;
  return acc;
}

double integer_power_prediction(int a, int b, int r, long prime_bound) {
  if (a < 2 || b < a || r < 0) throw std::invalid_argument("need 2 <= a <= b and r >= 0");
  std::vector<bool> composite(static_cast<std::size_t>(prime_bound) + 1, false);
  std::vector<double> power_sum(static_cast<std::size_t>(r) + 1, 0.0);
  for (long p = 2; p <= prime_bound; ++p) {
    if (composite[p]) continue;
    for (long m = p * p; m <= prime_bound; m += p) composite[m] = true;
    for (int k = 1; k <= r; ++k) power_sum[k] += std::pow(static_cast<double>(p), -static_cast<double>(b) * k);
  }
  std::vector<double> h(static_cast<std::size_t>(r) + 1, 0.0);
  h[0] = 1;
  for (int i = 1; i <= r; ++i) {
    double acc = 0;
    for (int k = 1; k <= i; ++k) acc += power_sum[k] * h[i - k];
    h[i] = acc / i;
  }
  double lower = 0;
  for (int i = 0; i < r; ++i) lower += h[i];
  return 1.0 - lower / riemann_zeta(b) - h[r] / riemann_zeta(a);
}

}  // namespace motivic
