#include "motivic/genfun.hpp"

#include <cmath>
#include <mutex>
#include <set>

namespace motivic {

namespace {

constexpr int kClosedFormCapacity = 64;

struct SymbolicW {
  Domain<MotivicClass> D = symbolic_domain(1, kClosedFormCapacity);
  detail::WTable<MotivicClass> table{&D};
  std::mutex mu;
};

SymbolicW& symbolic_w() {
  static SymbolicW s;
  return s;
}

GenPartition formal_from_profile(const MultiplicityProfile& m) {
  std::vector<Part> parts;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int c = 0; c < m[i]; ++c) parts.push_back(Part::of("a" + std::to_string(i + 1)));
  return GenPartition(parts);
}

MotivicClass closure_route(const MultiplicityProfile& m, std::map<MultiplicityProfile, MotivicClass>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  const GenPartition f = formal_from_profile(m);
  MotivicClass result = sym_product(m);
  for (const auto& mu : merge_closure(f))
    if (mu != f) result -= closure_route(multiplicity_profile(mu), memo);
  memo.emplace(m, result);
  return result;
}

}  // namespace

MotivicClass w_class_profile(const MultiplicityProfile& m) {
  auto& s = symbolic_w();
  std::lock_guard lock(s.mu);
  return s.table.w(m);
}

MotivicClass w_class(const GenPartition& lambda) { return w_class_profile(multiplicity_profile(lambda)); }

MotivicClass w_class_chains(const GenPartition& lambda) {
  MotivicClass acc;
  for (const auto& chain : ll_chains(lambda, static_cast<int>(lambda.size()))) {
    const MotivicClass term = sym_product(multiplicity_profile(chain.back()));
    if (chain.size() % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

MotivicClass w_class_closure(const GenPartition& lambda) {
  static std::mutex mu;
  static std::map<MultiplicityProfile, MotivicClass> memo;
  std::lock_guard lock(mu);
  return closure_route(multiplicity_profile(lambda), memo);
}

MotivicClass wbar_class(const GenPartition& lambda) {
  MotivicClass acc;
  for (const auto& mu : merge_closure(lambda)) acc += w_class(mu);
  return acc;
}

GenPartition star_power(int s) {
  if (s < 0) throw std::invalid_argument("s must be nonnegative");
  return GenPartition(std::vector<Part>(static_cast<std::size_t>(s), Part::of("p")));
}

GenPartition ordered_labels(int s) {
  if (s < 0) throw std::invalid_argument("s must be nonnegative");
  std::vector<Part> parts;
  for (int i = 1; i <= s; ++i) parts.push_back(Part::of("p" + std::to_string(i)));
  return GenPartition(parts);
}

std::string render(const Value& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

double approx(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->get_d();
  const auto& c = std::get<MotivicClass>(v);
  if (c.is_zero()) return 0;
  throw SymbolicEvaluationError("value " + c.str() + " has no numeric approximation");
}

std::string SeriesRequest::name() const {
  switch (kind) {
    case Kind::K:
      return "K_(<" + std::to_string(a) + ")" + str(nu);
    case Kind::KBar:
      return "Kbar_1." + str(nu);
    case Kind::SymSing:
      return "Sym_" + std::to_string(s);
    case Kind::Zeta:
      return "Z";
    case Kind::ZetaS:
      return "Z^[" + std::to_string(s) + "]";
    case Kind::ZetaInv:
      break;
  }
  return "Zinv_" + (lambda ? lambda->str() : "*^" + std::to_string(s));
}

int SeriesRequest::sym_shift() const {
  return kind == Kind::K || kind == Kind::KBar ? static_cast<int>(sum(nu)) : 0;
}

int model_capacity(const XModel& X) {
  if (const auto* pc = std::get_if<PointCounts>(&X.kind())) return static_cast<int>(pc->N.size());
  if (const auto* st = std::get_if<SymTable>(&X.kind())) return static_cast<int>(st->sym.size()) - 1;
  return kClosedFormCapacity;
}

namespace {

Target resolve_limit_target(const XModel& X, const Target& requested) {
  Target t = natural_target(X, requested);
  if (t.kind != Target::Kind::MotivicL && t.kind != Target::Kind::Count)
    throw ModelError("limits and densities need the motivic-L or count specialization, not " + t.name());
  if (t.kind == Target::Kind::Count && !t.q) {
    if (const auto* pc = std::get_if<PointCounts>(&X.kind())) t.q = pc->q;
  }
  return t;
}

double log2_of(const Integer& q) { return std::log2(q.get_d()); }

Rational rational_power(const Rational& x, int k) {
  Rational r(1);
  const Rational b = k >= 0 ? x : Rational(1) / x;
  for (int i = 0; i < std::abs(k); ++i) r *= b;
  return r;
}

double magnitude(const Rational& x) { return std::fabs(x.get_d()); }

// Contributions E_n · L^{-dn} of E = Y/Z.
std::vector<LaurentL> limit_terms(GenFun<LaurentL>& G, const SeriesRequest& Y, int N, int d) {
  const TruncSeries<LaurentL> y = build_series(G, Y, N);
  const TruncSeries<LaurentL> E = y * series_inverse(G.zeta(N));
  std::vector<LaurentL> out;
  for (int n = 0; n <= N; ++n) out.push_back(E[n] * lefschetz(-d * n));
  return out;
}

std::vector<Rational> limit_terms(GenFun<Rational>& G, const SeriesRequest& Y, int N, const Rational& u) {
  const TruncSeries<Rational> y = build_series(G, Y, N);
  const TruncSeries<Rational> E = y * series_inverse(G.zeta(N));
  std::vector<Rational> out;
  Rational p(1);
  for (int n = 0; n <= N; ++n) {
    out.push_back(E[n] * p);
    p *= u;
  }
  return out;
}

std::string limit_expression(const SeriesRequest& Y, Normalization norm) {
  std::string e;
  using K = SeriesRequest::Kind;
  if (Y.kind == K::K && Y.nu.empty())
    e = "zeta_X(" + std::to_string(Y.a) + "d)^-1";
  else if (Y.kind == K::KBar && Y.nu.size() == 1)
    e = "1 - zeta_X(" + std::to_string(Y.nu[0]) + "d)^-1";
  else if (Y.kind == K::SymSing)
    e = "zeta^[" + std::to_string(Y.s) + "]_X(2d)/zeta_X(2d)";
  else if (Y.kind == K::K && Y.a == 2)
    e = "w_nu M^-" + std::to_string(Y.sym_shift()) + " / (zeta_X(2d) (1+M^-1)^" + std::to_string(Y.nu.size()) + ")";
  else
    e = "(" + Y.name() + "/Z_X)(M^-1) M^-" + std::to_string(Y.sym_shift());
  if (norm == Normalization::MPower) e += " * lim [Sym^j X]/M^j";
  return e;
}

}  // namespace

LimitReport stable_limit(const XModel& X, const Target& requested, const SeriesRequest& Y, Normalization norm,
                         int cutoff) {
  if (Y.kind == SeriesRequest::Kind::ZetaInv) throw std::invalid_argument("stable limits apply to t-by-multiplicity series");
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  const Target target = resolve_limit_target(X, requested);
  const int d = X.dim();
  if (d < 1) throw ModelError("stable limits need a model of dimension d >= 1");
  const int shift = Y.sym_shift();
  const int cap = model_capacity(X) - shift - 1;
  if (cap < 4) throw InsufficientModelData("model data too short for a stable limit");

  LimitReport rep;
  rep.cutoff = cutoff;
  rep.normalization = norm;
  rep.shift = shift;
  rep.zeta_expression = limit_expression(Y, norm);
  rep.target = target.name();

  int N1 = std::min(cap, 2 * cutoff + 8);
  if (target.kind == Target::Kind::MotivicL) {
    GenFun<LaurentL> G(motivic_domain(X, model_capacity(X)));
    auto normalized = [&](const std::vector<LaurentL>& terms, int N) {
      LaurentL v;
      for (int n = 0; n <= N; ++n) v += terms[n];
      if (norm == Normalization::MPower) {
        // lim [Sym^j X]/M^j = ((1 - M t) Z)(M^{-1})
        TruncSeries<LaurentL> z = G.zeta(N);
        TruncSeries<LaurentL> lin = TruncSeries<LaurentL>::one(N);
        if (N >= 1) lin[1] = -lefschetz(d);
        const TruncSeries<LaurentL> p = lin * z;
        LaurentL r;
        for (int n = 0; n <= N; ++n) r += p[n] * lefschetz(-d * n);
        v = v * r;
      }
      return truncate(v * lefschetz(-d * shift), cutoff);
    };
    while (true) {
      const int N2 = std::min(cap, 2 * N1);
      const auto t2 = limit_terms(G, Y, N2, d);
      long tail = kNegInfDim;
      for (int n = N1 + 1; n <= N2; ++n)
        if (!t2[n].is_zero()) tail = std::max(tail, dimension(t2[n]) - static_cast<long>(d) * shift);
      const auto t1 = limit_terms(G, Y, N1, d);
      const LaurentL v1 = normalized(t1, N1), v2 = normalized(t2, N2);
      if (v1 == v2 && tail < -cutoff) {
        rep.value = MotivicClass(v2);
        rep.tail_dim = tail;
        rep.order = N2;
        return rep;
      }
      if (N2 == cap) throw DivergenceError("limit of " + Y.name() + " did not settle within order " + std::to_string(cap));
      N1 = N2;
    }
  }

  const Integer q = *target.q;
  GenFun<Rational> G(count_domain(X, q, model_capacity(X)));
  const Rational u = rational_power(Rational(q), -d);
  auto normalized = [&](const std::vector<Rational>& terms, int N) {
    Rational v = 0;
    for (int n = 0; n <= N; ++n) v += terms[n];
    if (norm == Normalization::MPower) {
      TruncSeries<Rational> z = G.zeta(N);
      TruncSeries<Rational> lin = TruncSeries<Rational>::one(N);
      if (N >= 1) lin[1] = -rational_power(Rational(q), d);
      v *= evaluate_series(lin * z, u);
    }
    return Rational(v * rational_power(u, shift));
  };
  const double tol = std::min(1e-12, std::pow(q.get_d(), -cutoff));
  N1 = std::min(cap, static_cast<int>(std::ceil(24.0 / (d * log2_of(q)))) + 4);
  while (true) {
    const int N2 = std::min(cap, 2 * N1);
    const Rational v1 = normalized(limit_terms(G, Y, N1, u), N1);
    const Rational v2 = normalized(limit_terms(G, Y, N2, u), N2);
    const double diff = magnitude(Rational(v2 - v1));
    if (diff <= tol || N2 == cap) {
      rep.value = v2;
      rep.tail = diff;
      rep.order = N2;
      if (diff > tol) throw DivergenceError("limit of " + Y.name() + " did not settle within order " + std::to_string(cap));
      return rep;
    }
    N1 = N2;
  }
}

namespace {

// Σ_{n≤N} S_n L^{-kn}, N large enough that the unseen tail sits below -C.
LEvaluation zeta_value(GenFun<LaurentL>& G, int k, int d, int C) {
  const int N = (C + 1) / (k - d) + 2;
  if (N > G.domain().max_n()) throw InsufficientModelData("model data too short for zeta_X(" + std::to_string(k) + ")");
  return eval_at_L_power(G.zeta(N), k, d, C);
}

Rational zeta_value(GenFun<Rational>& G, int k, int d, const Integer& q, double* tail) {
  const int want = static_cast<int>(std::ceil(50.0 / ((k - d) * log2_of(q)))) + 2;
  const int N = std::min(G.domain().max_n(), want);
  const Rational u = rational_power(Rational(q), -k);
  const TruncSeries<Rational> z = G.zeta(N);
  if (tail) *tail = std::max(*tail, magnitude(Rational(z[N] * rational_power(u, N))));
  return evaluate_series(z, u);
}

void check_model_dim(const XModel& X, int d) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (!std::holds_alternative<Symbolic>(X.kind()) && X.dim() != d)
    throw ModelError("model " + X.name() + " has dimension " + std::to_string(X.dim()) + ", not d = " +
                     std::to_string(d));
}

}  // namespace

LimitReport distinct_nu_limit(const XModel& X, const Target& requested, const IntPartition& nu_in, int cutoff) {
  const IntPartition nu = canonical(nu_in);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 2) throw PartitionError("parts of nu must exceed 1");
    if (i > 0 && nu[i] == nu[i - 1]) throw PartitionError("parts of nu must be distinct");
  }
  const Target target = resolve_limit_target(X, requested);
  const int d = X.dim();
  if (d < 1) throw ModelError("limits need a model of dimension d >= 1");
  const int len = static_cast<int>(nu.size());
  const int total = static_cast<int>(sum(nu));

  LimitReport rep;
  rep.cutoff = cutoff;
  rep.shift = total;
  rep.target = target.name();
  rep.zeta_expression = "w_nu L^-" + std::to_string(d * total) + " / (zeta_X(2d) (1+L^-d)^" + std::to_string(len) + ")";
  const IntPartition profile(static_cast<std::size_t>(len), 1);

  if (target.kind == Target::Kind::MotivicL) {
    GenFun<LaurentL> G(motivic_domain(X, model_capacity(X)));
    const int C = cutoff + d * len + 1;
    const LEvaluation z = zeta_value(G, 2 * d, d, C);
    const LaurentL inv_zeta = truncated_inverse(z.value.to_laurent(), C);
    const LaurentL inv_pow = truncated_inverse((LaurentL(1) + lefschetz(-d)).pow(static_cast<unsigned>(len)), C);
    const LaurentL v = G.w(profile) * inv_zeta * inv_pow * lefschetz(-d * total);
    rep.value = MotivicClass(truncate(v, cutoff));
    rep.tail_dim = z.tail_indicator;
    return rep;
  }
  const Integer q = *target.q;
  GenFun<Rational> G(count_domain(X, q, model_capacity(X)));
  double tail = 0;
  const Rational zeta = zeta_value(G, 2 * d, d, q, &tail);
  const Rational M_inv = rational_power(Rational(q), -d);
  Rational v = G.w(profile) / zeta * rational_power(Rational(1) + M_inv, -len) * rational_power(M_inv, total);
  rep.value = v;
  rep.tail = tail;
  return rep;
}

HypersurfaceDensity hyper_density(const XModel& X, int d, int s, int cutoff, const Target& requested) {
  check_model_dim(X, d);
  if (s < 0) throw std::invalid_argument("s must be nonnegative");
  HypersurfaceDensity out;
  out.kind = "unordered";
  out.d = d;
  out.s = s;
  out.cutoff = cutoff;
  out.expression = "zeta^[" + std::to_string(s) + "]_X(" + std::to_string(d + 1) + ")/zeta_X(" + std::to_string(d + 1) +
                   ") = Zinv_{X,*^" + std::to_string(s) + "}(L^-" + std::to_string(d + 1) + ")";
  const int m = d + 1;

  const Target natural = natural_target(X, requested);
  out.target = natural.name();
  if (natural.kind == Target::Kind::Symbolic) {
    GenFun<MotivicClass> G(symbolic_domain(d, kClosedFormCapacity));
    const int Np = cutoff + s + 2;
    const TruncSeries<MotivicClass> zi = G.zinv(star_power(s), Np);
    const LEvaluation ev = eval_at_L_power(zi, m, d, cutoff, true);
    out.value = ev.value;
    out.tail_dim = ev.tail_indicator;
    const TruncSeries<MotivicClass> lhs = G.zeta_s(s, Np);
    out.cross_checked = lhs == regrade(zi, Grading::MultiplicitySum) * G.zeta(Np);
    if (!out.cross_checked) throw CrossCheckError("Z^[s] differs from Zinv_{*^s} Z");
    return out;
  }

  const Target target = resolve_limit_target(X, requested);
  out.target = target.name();
  if (target.kind == Target::Kind::MotivicL) {
    GenFun<LaurentL> G(motivic_domain(X, model_capacity(X)));
    const int Ni = cutoff + d * s + 2, Np = cutoff + s + 2;
    if (std::max(Ni, Np) > G.domain().max_n()) throw InsufficientModelData("model data too short for this cutoff");
    const LEvaluation zs = eval_at_L_power(G.zeta_s(s, Ni), m, d, cutoff);
    const LEvaluation z = eval_at_L_power(G.zeta(Ni), m, d, cutoff);
    const LaurentL route1 = truncate(zs.value.to_laurent() * truncated_inverse(z.value.to_laurent(), cutoff), cutoff);
    const LEvaluation zi = eval_at_L_power(G.zinv(star_power(s), Np), m, d, cutoff);
    out.value = MotivicClass(route1);
    out.cross_value = zi.value;
    out.tail_dim = std::max({zs.tail_indicator, z.tail_indicator, zi.tail_indicator});
    if (!(zi.value == MotivicClass(route1)))
      throw CrossCheckError("density routes disagree: " + route1.str() + " vs " + zi.value.str());
    out.cross_checked = true;
    return out;
  }

  const Integer q = *target.q;
  GenFun<Rational> G(count_domain(X, q, model_capacity(X)));
  const Rational u = rational_power(Rational(q), -m);
  const int Ni = std::min(G.domain().max_n(), static_cast<int>(std::ceil(50.0 / log2_of(q))) + s + 2);
  const int Np = std::min(G.domain().max_n(), static_cast<int>(std::ceil(24.0 / log2_of(q))) + s + 4);
  const TruncSeries<Rational> zs = G.zeta_s(s, Ni), z = G.zeta(Ni);
  const Rational route1 = evaluate_series(zs, u) / evaluate_series(z, u);
  const TruncSeries<Rational> zi = G.zinv(star_power(s), Np);
  const Rational route2 = evaluate_series(zi, u);
  out.value = route1;
  out.cross_value = route2;
  out.tail = magnitude(Rational(z[Ni] * rational_power(u, Ni)));
  const double gap = magnitude(Rational(route1 - route2));
  if (gap > 1e-6) throw CrossCheckError("density routes disagree by " + std::to_string(gap));
  out.cross_checked = true;
  return out;
}

HypersurfaceDensity hyper_ordered_density(const XModel& X, int d, int s, int cutoff, const Target& requested) {
  check_model_dim(X, d);
  if (s < 0) throw std::invalid_argument("s must be nonnegative");
  HypersurfaceDensity out;
  out.kind = "ordered";
  out.d = d;
  out.s = s;
  out.cutoff = cutoff;
  const std::string u = "L^-" + std::to_string(d + 1);
  out.expression = "w_{1.2...s} (" + u + "/(1-" + u + "))^" + std::to_string(s) + " / zeta_X(" + std::to_string(d + 1) + ")";
  const int m = d + 1;
  const IntPartition profile(static_cast<std::size_t>(s), 1);

  const Target natural = natural_target(X, requested);
  if (natural.kind == Target::Kind::Symbolic) {
    out.target = natural.name();
    GenFun<MotivicClass> G(symbolic_domain(d, kClosedFormCapacity));
    const int Np = cutoff + s + 2;
    const TruncSeries<MotivicClass> zi = G.zinv(ordered_labels(s), Np);
    const LEvaluation ev = eval_at_L_power(zi, m, d, cutoff, true);
    out.value = ev.value;
    out.tail_dim = ev.tail_indicator;
    // w t^s Z^{-1} (1-t)^{-s}
    TruncSeries<MotivicClass> rhs = regrade(series_inverse(G.zeta(Np)), Grading::PointCount);
    TruncSeries<MotivicClass> geo = TruncSeries<MotivicClass>::geometric(Np, MotivicClass(1), Grading::PointCount);
    for (int i = 0; i < s; ++i) rhs *= geo;
    rhs = shift_up(rhs, s).scaled(G.w(profile));
    out.cross_checked = rhs == zi;
    if (!out.cross_checked) throw CrossCheckError("ordered series differs from w t^s Z^-1 (1-t)^-s");
    return out;
  }

  const Target target = resolve_limit_target(X, requested);
  out.target = target.name();
  if (target.kind == Target::Kind::MotivicL) {
    GenFun<LaurentL> G(motivic_domain(X, model_capacity(X)));
    const int C = cutoff + d * s + 1;
    const LEvaluation z = zeta_value(G, m, d, C);
    LaurentL geo;
    for (int k = 1; k * m <= C; ++k) geo += lefschetz(-m * k);
    const LaurentL v = G.w(profile) * truncate(geo.pow(static_cast<unsigned>(s)), C) *
                       truncated_inverse(z.value.to_laurent(), C);
    out.value = MotivicClass(truncate(v, cutoff));
    const int Np = cutoff + s + 2;
    const LEvaluation zi = eval_at_L_power(G.zinv(ordered_labels(s), Np), m, d, cutoff);
    out.cross_value = zi.value;
    out.tail_dim = std::max(z.tail_indicator, zi.tail_indicator);
    if (!(zi.value == std::get<MotivicClass>(out.value)))
      throw CrossCheckError("ordered density routes disagree: " + render(out.value) + " vs " + zi.value.str());
    out.cross_checked = true;
    return out;
  }

  const Integer q = *target.q;
  GenFun<Rational> G(count_domain(X, q, model_capacity(X)));
  double tail = 0;
  const Rational zeta = zeta_value(G, m, d, q, &tail);
  const Rational uq = rational_power(Rational(q), -m);
  const Rational v = G.w(profile) * rational_power(uq / (Rational(1) - uq), s) / zeta;
  const int Np = std::min(G.domain().max_n(), static_cast<int>(std::ceil(24.0 / log2_of(q))) + s + 4);
  const Rational route2 = evaluate_series(G.zinv(ordered_labels(s), Np), uq);
  out.value = v;
  out.cross_value = route2;
  out.tail = tail;
  const double gap = magnitude(Rational(v - route2));
  if (gap > 1e-6) throw CrossCheckError("ordered density routes disagree by " + std::to_string(gap));
  out.cross_checked = true;
  return out;
}

HypersurfaceDensity multi_point_density(const XModel& X, int d, int m, int cutoff, const Target& requested) {
  check_model_dim(X, d);
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  // C(d+m-1, d)
  long c = 1;
  for (int i = 1; i <= d; ++i) c = c * (m - 1 + i) / i;
  HypersurfaceDensity out;
  out.kind = "multi";
  out.d = d;
  out.s = m;
  out.cutoff = cutoff;
  out.expression = "zeta_X(" + std::to_string(c) + ")^-1";
  const Target target = resolve_limit_target(X, requested);
  out.target = target.name();
  if (target.kind == Target::Kind::MotivicL) {
    GenFun<LaurentL> G(motivic_domain(X, model_capacity(X)));
    const LEvaluation z = zeta_value(G, static_cast<int>(c), d, cutoff);
    out.value = MotivicClass(truncated_inverse(z.value.to_laurent(), cutoff));
    out.tail_dim = z.tail_indicator;
    return out;
  }
  const Integer q = *target.q;
  GenFun<Rational> G(count_domain(X, q, model_capacity(X)));
  double tail = 0;
  out.value = Rational(Rational(1) / zeta_value(G, static_cast<int>(c), d, q, &tail));
  out.tail = tail;
  return out;
}

}  // namespace motivic
