#include "motivic/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "motivic/genfun.hpp"
#include "motivic/oracle.hpp"
#include "motivic/verify.hpp"

namespace motivic::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Common {
  bool json = false;
  bool csv = false;
  bool force = false;
  long long guard = 0;  // 0: default

  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
  long long resolved_guard() const {
    if (guard > kMaxGuard) throw GuardError("guards cannot be raised past " + std::to_string(kMaxGuard));
    if (guard > kDefaultGuard && !force)
      throw GuardError("raising the guard above " + std::to_string(kDefaultGuard) + " needs --force");
    if (guard > 0) return guard;
    return force ? kMaxGuard : kDefaultGuard;
  }
};

void add_common(CLI::App* sub, Common& c) {
  auto* j = sub->add_flag("--json", c.json, "JSON output");
  auto* v = sub->add_flag("--csv", c.csv, "CSV output");
  j->excludes(v);
  sub->add_flag("--force", c.force, "allow guards up to 1e8");
  sub->add_option("--guard", c.guard, "state-count guard for enumeration");
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Params are echoed in every format, in insertion order.
void emit_params(std::ostream& out, Format f, const ordered_json& params) {
  if (f == Format::Json) return;
  std::string line = "#";
  for (const auto& [k, v] : params.items()) line += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  out << line << "\n";
}

std::string value_text(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return fmt_double(r->get_d());
  return render(v);
}

void put_value(ordered_json& j, const std::string& key, const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) {
    j[key] = r->get_d();
    j[key + "_exact"] = r->get_str();
  } else {
    j[key] = render(v);
  }
}

IntPartition parse_nu(const std::string& s) { return s.empty() ? IntPartition{} : parse_int_partition(s); }

// --- series -------------------------------------------------------------------

struct SeriesArgs {
  std::string kind;
  std::string X = "symbolic";
  std::string nu;
  int a = 2;
  int s = 0;
  std::string lambda;
  int trunc = 12;
  std::string spec = "motivic-L";
};

template <class R>
std::vector<std::string> series_coeffs(Domain<R> D, const SeriesRequest& req, int N) {
  GenFun<R> G(std::move(D));
  const TruncSeries<R> f = build_series(G, req, N);
  std::vector<std::string> out;
  for (int n = 0; n <= N; ++n) out.push_back(render(f[n]));
  return out;
}

int do_series(const SeriesArgs& a, const Common& c, std::ostream& out) {
  if (a.trunc < 0) throw std::invalid_argument("--trunc must be nonnegative");
  const XModel X = XModel::parse(a.X);
  const Target target = natural_target(X, Target::parse(a.spec));
  SeriesRequest req;
  if (a.kind == "k") req.kind = SeriesRequest::Kind::K;
  else if (a.kind == "kbar") req.kind = SeriesRequest::Kind::KBar;
  else if (a.kind == "symsing") req.kind = SeriesRequest::Kind::SymSing;
  else if (a.kind == "zeta") req.kind = SeriesRequest::Kind::Zeta;
  else if (a.kind == "zetas") req.kind = SeriesRequest::Kind::ZetaS;
  else req.kind = SeriesRequest::Kind::ZetaInv;
  req.nu = parse_nu(a.nu);
  req.a = a.a;
  req.s = a.s;
  if (!a.lambda.empty()) req.lambda = GenPartition::parse(a.lambda);
  if (!req.nu.empty() && req.kind != SeriesRequest::Kind::K && req.kind != SeriesRequest::Kind::KBar)
    throw std::invalid_argument("--nu applies to k and kbar only");

  const int lambda_size = req.lambda ? static_cast<int>(req.lambda->size()) : req.s;
  const int need = a.trunc + static_cast<int>(sum(req.nu)) + req.a + lambda_size + 4;
  const int max_n = std::min(need, model_capacity(X));
  const auto coeffs =
      with_domain(X, target, max_n, [&](auto D) { return series_coeffs(std::move(D), req, a.trunc); });

  ordered_json params;
  params["series"] = req.name();
  params["X"] = X.name();
  params["d"] = X.dim();
  if (req.kind == SeriesRequest::Kind::K || req.kind == SeriesRequest::Kind::KBar) params["nu"] = str(req.nu);
  if (req.kind == SeriesRequest::Kind::K) params["a"] = req.a;
  if (req.kind == SeriesRequest::Kind::SymSing || req.kind == SeriesRequest::Kind::ZetaS ||
      (req.kind == SeriesRequest::Kind::ZetaInv && !req.lambda))
    params["s"] = req.s;
  if (req.lambda) params["lambda"] = req.lambda->str();
  params["trunc"] = a.trunc;
  params["spec"] = target.name();
  params["grading"] = to_string(req.grading());
  if (req.sym_shift() > 0) params["sym_shift"] = req.sym_shift();

  const Format f = c.format();
  if (f == Format::Json) {
    ordered_json j;
    j["kind"] = "series";
    j["params"] = params;
    j["grading"] = to_string(req.grading());
    j["order"] = a.trunc;
    j["coefficients"] = coeffs;
    out << j.dump(2) << "\n";
    return 0;
  }
  emit_params(out, f, params);
  if (f == Format::Csv) out << "n,coefficient\n";
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (f == Format::Csv)
      out << n << "," << csv_cell(coeffs[n]) << "\n";
    else
      out << "t^" << n << ": " << coeffs[n] << "\n";
  }
  return 0;
}

// --- limit --------------------------------------------------------------------

struct LimitArgs {
  std::string Y = "k";
  std::string X = "A^1";
  std::string nu;
  int a = 2;
  int s = 0;
  int cutoff = 10;
  std::string spec = "motivic-L";
  std::string normalize = "sym";
  bool distinct = false;
};

int do_limit(const LimitArgs& a, const Common& c, std::ostream& out) {
  const XModel X = XModel::parse(a.X);
  const Target target = Target::parse(a.spec);
  const Normalization norm = a.normalize == "mpower" ? Normalization::MPower : Normalization::Sym;
  SeriesRequest req;
  req.kind = a.Y == "k" ? SeriesRequest::Kind::K : a.Y == "kbar" ? SeriesRequest::Kind::KBar : SeriesRequest::Kind::SymSing;
  req.nu = parse_nu(a.nu);
  req.a = a.a;
  req.s = a.s;
  if (a.distinct && (req.kind != SeriesRequest::Kind::K || req.a != 2 || norm != Normalization::Sym))
    throw std::invalid_argument("--distinct applies to Y=k with a=2 and sym normalization");
  const LimitReport rep =
      a.distinct ? distinct_nu_limit(X, target, req.nu, a.cutoff) : stable_limit(X, target, req, norm, a.cutoff);

  ordered_json params;
  params["Y"] = req.name();
  params["X"] = X.name();
  params["d"] = X.dim();
  params["cutoff"] = a.cutoff;
  params["spec"] = rep.target;
  params["normalize"] = a.normalize;
  params["route"] = a.distinct ? "distinct-nu" : "series";
  params["sym_shift"] = rep.shift;

  const Format f = c.format();
  const bool motivic = std::holds_alternative<MotivicClass>(rep.value);
  if (f == Format::Json) {
    ordered_json j;
    j["kind"] = "limit";
    j["params"] = params;
    j["grading"] = to_string(Grading::MultiplicitySum);
    j["order"] = rep.order;
    put_value(j, "limit", rep.value);
    if (motivic)
      j["tail_indicator"] = rep.tail_dim == kNegInfDim ? json(nullptr) : json(rep.tail_dim);
    else
      j["tail_indicator"] = rep.tail;
    j["zeta_expression"] = rep.zeta_expression;
    out << j.dump(2) << "\n";
    return 0;
  }
  emit_params(out, f, params);
  const std::string tail = motivic ? (rep.tail_dim == kNegInfDim ? "none" : "dim " + std::to_string(rep.tail_dim))
                                   : fmt_double(rep.tail);
  if (f == Format::Csv) {
    out << "limit,tail_indicator,zeta_expression\n"
        << csv_cell(value_text(rep.value)) << "," << csv_cell(tail) << "," << csv_cell(rep.zeta_expression) << "\n";
    return 0;
  }
  out << "limit = " << value_text(rep.value) << "\n";
  if (!motivic) out << "exact = " << render(rep.value) << "\n";
  out << "tail = " << tail << "\n";
  out << "expression = " << rep.zeta_expression << "\n";
  return 0;
}

// --- hyper --------------------------------------------------------------------

struct HyperArgs {
  std::string kind = "unordered";
  std::string X = "P1";
  int d = 0;  // 0: dimension of X
  int s = 0;
  int m = 2;
  int cutoff = 10;
  std::string spec = "motivic-L";
};

int do_hyper(const HyperArgs& a, const Common& c, std::ostream& out) {
  const XModel X = XModel::parse(a.X);
  const Target target = Target::parse(a.spec);
  const int d = a.d > 0 ? a.d : X.dim();
  HypersurfaceDensity h;
  if (a.kind == "unordered")
    h = hyper_density(X, d, a.s, a.cutoff, target);
  else if (a.kind == "ordered")
    h = hyper_ordered_density(X, d, a.s, a.cutoff, target);
  else
    h = multi_point_density(X, d, a.m, a.cutoff, target);

  ordered_json params;
  params["density"] = h.kind;
  params["X"] = X.name();
  params["d"] = d;
  params[h.kind == "multi" ? "m" : "s"] = h.s;
  params["cutoff"] = a.cutoff;
  params["spec"] = h.target;

  const Format f = c.format();
  const bool motivic = std::holds_alternative<MotivicClass>(h.value);
  if (f == Format::Json) {
    ordered_json j;
    j["kind"] = "hyper";
    j["params"] = params;
    put_value(j, "limit", h.value);
    if (h.cross_value) put_value(j, "cross_value", *h.cross_value);
    j["cross_checked"] = h.cross_checked;
    if (motivic)
      j["tail_indicator"] = h.tail_dim == kNegInfDim ? json(nullptr) : json(h.tail_dim);
    else
      j["tail_indicator"] = h.tail;
    j["zeta_expression"] = h.expression;
    out << j.dump(2) << "\n";
    return 0;
  }
  emit_params(out, f, params);
  if (f == Format::Csv) {
    out << "density,cross_checked,zeta_expression\n"
        << csv_cell(value_text(h.value)) << "," << (h.cross_checked ? "true" : "false") << ","
        << csv_cell(h.expression) << "\n";
    return 0;
  }
  out << "density = " << value_text(h.value) << "\n";
  if (!motivic) out << "exact = " << render(h.value) << "\n";
  if (h.cross_value) out << "second route = " << value_text(*h.cross_value) << "\n";
  out << "cross-checked = " << (h.cross_checked ? "yes" : "no") << "\n";
  out << "expression = " << h.expression << "\n";
  return 0;
}

// --- oracle -------------------------------------------------------------------

struct OracleArgs {
  std::string what;
  std::string curve = "A1";
  int q = 2;
  std::string lambda;
  int j = -1;
  int j_min = 0;
  int j_max = -1;
  int s = -1;
  int a = 2, b = 2, r = 0;
  long long bound = 1'000'000;
  std::string counts;
  int n = -1;
};

std::vector<Integer> parse_counts(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad point count '" + item + "'");
    }
  }
  return out;
}

int do_oracle(const OracleArgs& a, const Common& c, std::ostream& out) {
  const long long guard = c.resolved_guard();
  const Format f = c.format();
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  ordered_json params;
  params["oracle"] = a.what;
  params["guard"] = guard;

  // j-sweeps (symsing, hyper) share one table layout.
  auto sweep = [&](const std::vector<std::string>& header, auto&& row) {
    const int lo = a.j >= 0 ? a.j : a.j_min;
    const int hi = a.j >= 0 ? a.j : a.j_max;
    if (hi < lo || lo < 0) throw std::invalid_argument("give --j, or --j-min/--j-max with 0 <= j-min <= j-max");
    params["j_min"] = lo;
    params["j_max"] = hi;
    std::vector<std::vector<std::string>> rows;
    for (int j = lo; j <= hi; ++j) rows.push_back(row(j));
    if (f == Format::Json) {
      ordered_json jo;
      jo["kind"] = "oracle";
      jo["params"] = params;
      ordered_json table = ordered_json::array();
      for (const auto& rw : rows) {
        ordered_json e;
        for (std::size_t i = 0; i < header.size(); ++i) e[header[i]] = rw[i];
        table.push_back(e);
      }
      jo["rows"] = table;
      jo["elapsed"] = elapsed();
      out << jo.dump(2) << "\n";
      return 0;
    }
    emit_params(out, f, params);
    const char* sep = f == Format::Csv ? "," : "  ";
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? sep : "") << header[i];
    out << "\n";
    for (const auto& rw : rows) {
      for (std::size_t i = 0; i < rw.size(); ++i) out << (i ? sep : "") << (f == Format::Csv ? csv_cell(rw[i]) : rw[i]);
      out << "\n";
    }
    if (f == Format::Text) out << "elapsed = " << fmt_double(elapsed()) << " s\n";
    return 0;
  };

  auto single = [&](ordered_json result) {
    if (f == Format::Json) {
      ordered_json jo;
      jo["kind"] = "oracle";
      jo["params"] = params;
      for (const auto& [k, v] : result.items()) jo[k] = v;
      jo["elapsed"] = elapsed();
      out << jo.dump(2) << "\n";
      return 0;
    }
    emit_params(out, f, params);
    if (f == Format::Csv) {
      std::string head, row;
      for (const auto& [k, v] : result.items()) {
        head += (head.empty() ? "" : ",") + k;
        row += (row.empty() ? "" : ",") + csv_cell(v.is_string() ? v.get<std::string>() : v.dump());
      }
      out << head << ",elapsed\n" << row << "," << fmt_double(elapsed()) << "\n";
      return 0;
    }
    for (const auto& [k, v] : result.items()) out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    out << "elapsed = " << fmt_double(elapsed()) << " s\n";
    return 0;
  };

  if (a.what == "w") {
    const Curve curve = a.curve == "P1" ? Curve::P1 : Curve::A1;
    const IntPartition lam = parse_nu(a.lambda);
    params["curve"] = a.curve;
    params["q"] = a.q;
    params["lambda"] = str(lam);
    const Integer n = count_w_lambda(curve, a.q, lam, guard);
    const Integer p = count_pattern_divisors(curve, a.q, lam, guard);
    if (n != p) throw CrossCheckError("tuple count " + n.get_str() + " differs from pattern count " + p.get_str());
    ordered_json r;
    r["exact_count"] = n.get_str();
    return single(r);
  }
  if (a.what == "symsing") {
    params["q"] = a.q;
    if (a.s >= 0) {
      params["s"] = a.s;
      return sweep({"j", "count"}, [&](int j) {
        return std::vector<std::string>{std::to_string(j), count_sym_s(a.q, j, a.s, guard).get_str()};
      });
    }
    return sweep({"j", "histogram"}, [&](int j) {
      std::string h;
      for (const auto& v : sym_s_histogram(a.q, j, guard)) h += (h.empty() ? "" : " ") + v.get_str();
      return std::vector<std::string>{std::to_string(j), h};
    });
  }
  if (a.what == "hyper") {
    params["q"] = a.q;
    params["s"] = std::max(a.s, 0);
    return sweep({"j", "fraction", "approx"}, [&](int j) {
      const Rational fr = count_hyper_s(a.q, j, std::max(a.s, 0), guard);
      return std::vector<std::string>{std::to_string(j), fr.get_str(), fmt_double(fr.get_d())};
    });
  }
  if (a.what == "power") {
    params["a"] = a.a;
    params["b"] = a.b;
    params["r"] = a.r;
    params["bound"] = a.bound;
    const PowerDensity pd = integer_power_density(a.a, a.b, a.r, a.bound, guard);
    ordered_json r;
    r["count"] = pd.count;
    r["fraction"] = pd.fraction.get_str();
    r["approx"] = pd.fraction.get_d();
    r["prediction"] = integer_power_prediction(a.a, a.b, a.r);
    return single(r);
  }
  // expformula
  const std::vector<Integer> N = parse_counts(a.counts);
  const int n_max = a.n >= 0 ? a.n : static_cast<int>(N.size());
  params["counts"] = a.counts;
  params["n"] = n_max;
  const auto sym = exp_formula_sym_counts(N, n_max);
  ordered_json r;
  ordered_json arr = ordered_json::array();
  for (const auto& v : sym) arr.push_back(v.get_str());
  r["sym_counts"] = arr;
  return single(r);
}

// --- verify -------------------------------------------------------------------

int do_verify(const std::string& suite_name, const Common& c, std::ostream& out) {
  const Suite suite = parse_suite(suite_name);
  const Format f = c.format();
  ordered_json params;
  params["suite"] = suite_name;
  emit_params(out, f, params);
  if (f == Format::Csv) out << "id,name,passed,seconds,detail\n";
  const auto results = run_suite(suite, [&](const CheckResult& r) {
    if (f == Format::Text) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%s %2d %-32s %8.3fs  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
      out << buf << r.detail << "\n" << std::flush;
    } else if (f == Format::Csv) {
      out << r.id << "," << csv_cell(r.name) << "," << (r.passed ? "true" : "false") << "," << fmt_double(r.seconds)
          << "," << csv_cell(r.detail) << "\n";
    }
  });
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  if (f == Format::Json) {
    ordered_json j;
    j["kind"] = "verify";
    j["params"] = params;
    ordered_json arr = ordered_json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    j["checks"] = arr;
    j["failed"] = failed;
    out << j.dump(2) << "\n";
  } else if (f == Format::Text) {
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : kExitCrossCheck;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic zeta series, stable limits, densities and finite-field oracles", "motzeta"};
  app.require_subcommand(1);

  Common common;
  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "compute a generating series");
  series->add_option("kind", sa.kind, "k | kbar | symsing | zeta | zetas | zetainv")
      ->required()
      ->check(CLI::IsMember({"k", "kbar", "symsing", "zeta", "zetas", "zetainv"}));
  series->add_option("--X", sa.X, "model of X")->capture_default_str();
  series->add_option("--nu", sa.nu, "partition nu, e.g. 2,2");
  series->add_option("--a", sa.a, "K_(<a)")->capture_default_str();
  series->add_option("--s", sa.s, "s for symsing, zetas and zetainv (*^s)")->capture_default_str();
  series->add_option("--lambda", sa.lambda, "generalized partition for zetainv, e.g. x,x,y");
  series->add_option("--trunc", sa.trunc, "truncation order")->capture_default_str();
  series->add_option("--spec", sa.spec, "specialization")->capture_default_str();
  add_common(series, common);

  LimitArgs la;
  auto* limit = app.add_subcommand("limit", "stable limit of a series");
  limit->add_option("--Y", la.Y, "k | kbar | symsing")->check(CLI::IsMember({"k", "kbar", "symsing"}))->capture_default_str();
  limit->add_option("--X", la.X, "model of X")->capture_default_str();
  limit->add_option("--nu", la.nu, "partition nu");
  limit->add_option("--a", la.a, "K_(<a)")->capture_default_str();
  limit->add_option("--s", la.s, "s for symsing")->capture_default_str();
  limit->add_option("--cutoff", la.cutoff, "codimension cutoff")->capture_default_str();
  limit->add_option("--spec", la.spec, "specialization")->capture_default_str();
  limit->add_option("--normalize", la.normalize, "sym | mpower")
      ->check(CLI::IsMember({"sym", "mpower"}))
      ->capture_default_str();
  limit->add_flag("--distinct", la.distinct, "closed form for nu of distinct parts");
  add_common(limit, common);

  HyperArgs ha;
  auto* hyper = app.add_subcommand("hyper", "hypersurface densities");
  hyper->add_option("--kind", ha.kind, "unordered | ordered | multi")
      ->check(CLI::IsMember({"unordered", "ordered", "multi"}))
      ->capture_default_str();
  hyper->add_option("--X", ha.X, "model of X")->capture_default_str();
  hyper->add_option("--d", ha.d, "dimension of X (defaults to the model's)");
  hyper->add_option("--s", ha.s, "number of singular points")->capture_default_str();
  hyper->add_option("--m", ha.m, "points for the multi density")->capture_default_str();
  hyper->add_option("--cutoff", ha.cutoff, "codimension cutoff")->capture_default_str();
  hyper->add_option("--spec", ha.spec, "specialization")->capture_default_str();
  add_common(hyper, common);

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "exhaustive finite-field and integer counts");
  oracle->add_option("what", oa.what, "w | symsing | hyper | power | expformula")
      ->required()
      ->check(CLI::IsMember({"w", "symsing", "hyper", "power", "expformula"}));
  oracle->add_option("--curve", oa.curve, "A1 | P1")->check(CLI::IsMember({"A1", "P1"}))->capture_default_str();
  oracle->add_option("--q", oa.q, "field size")->capture_default_str();
  oracle->add_option("--lambda", oa.lambda, "integer partition for w");
  oracle->add_option("--j", oa.j, "degree");
  oracle->add_option("--j-min", oa.j_min, "sweep start")->capture_default_str();
  oracle->add_option("--j-max", oa.j_max, "sweep end");
  oracle->add_option("--s", oa.s, "multiple points");
  oracle->add_option("--a", oa.a)->capture_default_str();
  oracle->add_option("--b", oa.b)->capture_default_str();
  oracle->add_option("--r", oa.r)->capture_default_str();
  oracle->add_option("--bound", oa.bound, "integer bound")->capture_default_str();
  oracle->add_option("--counts", oa.counts, "N_1,N_2,... for expformula");
  oracle->add_option("--n", oa.n, "largest n for expformula");
  add_common(oracle, common);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the identity and oracle suites");
  verify->add_option("--suite", suite, "all | identities | oracle")
      ->check(CLI::IsMember({"all", "identities", "oracle"}))
      ->capture_default_str();
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*series) return do_series(sa, common, out);
    if (*limit) return do_limit(la, common, out);
    if (*hyper) return do_hyper(ha, common, out);
    if (*oracle) return do_oracle(oa, common, out);
    return do_verify(suite, common, out);
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const InsufficientModelData& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    // bad model, partition or parameter text
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace motivic::cli
