#include "motivic/model.hpp"

#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "motivic/genfun.hpp"
#include "motivic/oracle.hpp"

namespace motivic {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

long parse_long(std::string_view s, const char* what) {
  const std::string t = trim(s);
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    throw ModelError(std::string("bad ") + what + ": '" + t + "'");
  }
  if (pos != t.size()) throw ModelError(std::string("bad ") + what + ": '" + t + "'");
  return v;
}

Integer parse_integer(std::string_view s, const char* what) {
  const std::string t = trim(s);
  Integer v;
  if (t.empty() || v.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0)
    throw ModelError(std::string("bad ") + what + ": '" + t + "'");
  return v;
}

// Splits on commas outside brackets.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::vector<Integer> parse_int_list(std::string_view s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ModelError("expected [n1,n2,...], got '" + t + "'");
  std::vector<Integer> out;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(parse_integer(item, "point count"));
  return out;
}

// Parses a signed sum of monomials c*x^a*y^b over single-letter variables.
std::vector<std::pair<Integer, std::vector<int>>> parse_monomials(std::string_view text, std::string_view vars) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ModelError("empty polynomial");
  std::vector<std::pair<Integer, std::vector<int>>> out;
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) {
    std::size_t b = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == b || (i == b + 1 && !std::isdigit(static_cast<unsigned char>(s[b]))))
      throw ModelError("expected an integer in '" + s + "'");
    return s.substr(b, i - b);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!out.empty()) {
      throw ModelError("expected + or - in '" + s + "'");
    }
    Integer coeff = 1;
    bool saw_anything = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = Integer(read_int(false));
      saw_anything = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::vector<int> exps(vars.size(), 0);
    while (i < s.size() && vars.find(s[i]) != std::string_view::npos) {
      const std::size_t v = vars.find(s[i]);
      ++i;
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = static_cast<int>(parse_long(read_int(true), "exponent"));
      }
      exps[v] += e;
      saw_anything = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (!saw_anything) throw ModelError("cannot parse polynomial '" + s + "'");
    out.emplace_back(coeff * sign, exps);
  }
  return out;
}

int infer_dim_from_counts(const Integer& q, const std::vector<Integer>& N) {
  if (N.empty() || N[0] < 1) return 0;
  int d = 0;
  Integer p = q;
  while (p <= N[0]) {
    p *= q;
    ++d;
  }
  return d;
}

constexpr int kDefaultCountTerms = 64;

PointCounts affine_counts(const Integer& q, int d) {
  PointCounts pc{q, {}, d};
  Integer qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  Integer v = 1;
  for (int r = 1; r <= kDefaultCountTerms; ++r) {
    v *= qd;
    pc.N.push_back(v);
  }
  return pc;
}

std::vector<HodgePoly> hodge_sym(const HodgePoly& e, int max_n) {
  TruncSeries<HodgePoly> z = TruncSeries<HodgePoly>::one(max_n);
  for (const auto& [uv, c] : e.terms()) {
    const std::vector<Integer> b = negative_binomial_coeffs(c, max_n);
    TruncSeries<HodgePoly> f(max_n);
    for (int k = 0; k <= max_n; ++k) f[k] = HodgePoly::monomial(uv * k, b[k]);
    z *= f;
  }
  return z.coeffs();
}

template <class R>
std::vector<R> substitute_L(const std::vector<LaurentL>& sym, const R& L, const R& Linv) {
  std::vector<R> out;
  out.reserve(sym.size());
  for (const auto& x : sym) out.push_back(evaluate<R>(x, L, Linv));
  return out;
}

}  // namespace

XModel::XModel(Kind k) : kind_(std::move(k)) {
  if (const auto* pc = std::get_if<PointCounts>(&kind_)) {
    if (pc->q < 2) throw ModelError("point-count model needs q >= 2");
    for (const auto& n : pc->N)
      if (n < 0) throw ModelError("point counts must be nonnegative");
  }
  if (const auto* st = std::get_if<SymTable>(&kind_)) {
    if (st->sym.empty() || !(st->sym[0] == LaurentL(1))) throw ModelError("Sym table must start with [Sym^0 X] = 1");
  }
  if (const auto* a = std::get_if<AffineSpace>(&kind_); a && a->d < 0) throw ModelError("negative dimension");
  if (const auto* p = std::get_if<ProjSpace>(&kind_); p && p->n < 0) throw ModelError("negative dimension");
}

XModel XModel::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw ModelError("empty model description");
  if (t[0] == '@') {
    const std::string path = t.substr(1);
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open model file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return from_csv_text(buf.str());
    return from_json_text(buf.str());
  }
  if (t == "pt" || t == "point") return XModel(AffineSpace{0});
  if (t == "P1" || t == "P^1") return XModel(ProjLine{});
  if (t[0] == 'A' || t[0] == 'P') {
    std::string rest = t.substr(1);
    if (!rest.empty() && rest[0] == '^') rest = rest.substr(1);
    const int n = rest.empty() ? 1 : static_cast<int>(parse_long(rest, "dimension"));
    if (t[0] == 'A') return XModel(AffineSpace{n});
    return n == 1 ? XModel(ProjLine{}) : XModel(ProjSpace{n});
  }
  const auto colon = t.find(':');
  const std::string head = t.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : t.substr(colon + 1);
  if (head == "symbolic") {
    Symbolic s;
    for (const auto& kv : split_top(body)) {
      if (kv.rfind("d=", 0) != 0) throw ModelError("unknown symbolic parameter '" + kv + "'");
      s.d = static_cast<int>(parse_long(kv.substr(2), "dimension"));
    }
    return XModel(s);
  }
  if (head == "counts") {
    std::optional<Integer> q;
    std::optional<std::vector<Integer>> N;
    std::optional<int> d;
    for (const auto& kv : split_top(body)) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ModelError("expected key=value in '" + kv + "'");
      const std::string key = trim(kv.substr(0, eq)), val = kv.substr(eq + 1);
      if (key == "q")
        q = parse_integer(val, "q");
      else if (key == "N")
        N = parse_int_list(val);
      else if (key == "d")
        d = static_cast<int>(parse_long(val, "dimension"));
      else
        throw ModelError("unknown counts parameter '" + key + "'");
    }
    if (!q) throw ModelError("counts model needs q");
    if (!N) return XModel(affine_counts(*q, d.value_or(1)));
    return XModel(PointCounts{*q, *N, d.value_or(infer_dim_from_counts(*q, *N))});
  }
  if (head == "euler") {
    auto parts = split_top(body);
    if (parts.empty()) throw ModelError("euler model needs chi");
    EulerChar e{parse_long(parts[0], "Euler characteristic"), 0};
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i].rfind("d=", 0) != 0) throw ModelError("unknown euler parameter '" + parts[i] + "'");
      e.d = static_cast<int>(parse_long(parts[i].substr(2), "dimension"));
    }
    return XModel(e);
  }
  if (head == "hd") {
    auto parts = split_top(body);
    if (parts.empty()) throw ModelError("hd model needs a polynomial");
    HodgeDeligne h{parse_hodge(parts[0]), 0};
    for (const auto& [uv, c] : h.e.terms()) h.d = std::max({h.d, uv.u, uv.v});
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i].rfind("d=", 0) != 0) throw ModelError("unknown hd parameter '" + parts[i] + "'");
      h.d = static_cast<int>(parse_long(parts[i].substr(2), "dimension"));
    }
    return XModel(h);
  }
  throw ModelError("unknown model '" + t + "' (try A^d, P1, Pn, pt, counts:q=.., euler:.., hd:.., symbolic)");
}

XModel XModel::from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelError(std::string("model JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind")) throw ModelError("model JSON needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  const json params = j.value("params", json::object());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "kind" && it.key() != "params") throw ModelError("unknown model key '" + it.key() + "'");
  auto get_int = [&](const char* key, long dflt) -> long {
    if (!params.contains(key)) return dflt;
    return params.at(key).get<long>();
  };
  auto as_integer = [](const json& v) {
    return v.is_string() ? parse_integer(v.get<std::string>(), "integer") : Integer(v.get<long>());
  };
  try {
    if (kind == "Symbolic") return XModel(Symbolic{static_cast<int>(get_int("d", 1))});
    if (kind == "AffineSpace") return XModel(AffineSpace{static_cast<int>(get_int("d", 1))});
    if (kind == "ProjLine") return XModel(ProjLine{});
    if (kind == "ProjSpace") return XModel(ProjSpace{static_cast<int>(get_int("n", 1))});
    if (kind == "EulerChar") return XModel(EulerChar{get_int("chi", 0), static_cast<int>(get_int("d", 0))});
    if (kind == "HodgeDeligne") {
      HodgeDeligne h{parse_hodge(params.at("e").get<std::string>()), 0};
      for (const auto& [uv, c] : h.e.terms()) h.d = std::max({h.d, uv.u, uv.v});
      h.d = static_cast<int>(get_int("d", h.d));
      return XModel(h);
    }
    if (kind == "PointCounts") {
      const Integer q = as_integer(params.at("q"));
      if (!params.contains("N")) return XModel(affine_counts(q, static_cast<int>(get_int("d", 1))));
      std::vector<Integer> N;
      for (const auto& v : params.at("N")) N.push_back(as_integer(v));
      const int d = static_cast<int>(get_int("d", infer_dim_from_counts(q, N)));
      return XModel(PointCounts{q, N, d});
    }
    if (kind == "SymTable") {
      SymTable st{static_cast<int>(get_int("d", 0)), {}};
      for (const auto& v : params.at("sym")) st.sym.push_back(parse_laurent(v.get<std::string>()));
      return XModel(st);
    }
  } catch (const json::exception& e) {
    throw ModelError(std::string("model JSON: ") + e.what());
  }
  throw ModelError("unknown model kind '" + kind + "'");
}

XModel XModel::from_csv_text(std::string_view text) {
  // Rows "key,value[,value...]"; the first row is "kind,<Kind>".
  json params = json::object();
  std::string kind;
  std::stringstream ss{std::string(text)};
  std::string line;
  while (std::getline(ss, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
    if (cells.size() < 2) throw ModelError("CSV row needs key,value: '" + line + "'");
    if (cells[0] == "kind") {
      kind = cells[1];
    } else if (cells[0] == "N" || cells[0] == "sym") {
      json arr = json::array();
      for (std::size_t i = 1; i < cells.size(); ++i) arr.push_back(cells[i]);
      params[cells[0]] = arr;
    } else if (cells[0] == "e" || cells[0] == "q") {
      params[cells[0]] = cells[1];
    } else {
      params[cells[0]] = parse_long(cells[1], "CSV value");
    }
  }
  if (kind.empty()) throw ModelError("CSV model needs a kind row");
  return from_json_text(json{{"kind", kind}, {"params", params}}.dump());
}

int XModel::dim() const {
  return std::visit(
      [](const auto& k) -> int {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ProjLine>)
          return 1;
        else if constexpr (std::is_same_v<T, ProjSpace>)
          return k.n;
        else
          return k.d;
      },
      kind_);
}

std::string XModel::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Symbolic>)
          return "symbolic(d=" + std::to_string(k.d) + ")";
        else if constexpr (std::is_same_v<T, AffineSpace>)
          return "A^" + std::to_string(k.d);
        else if constexpr (std::is_same_v<T, ProjLine>)
          return "P1";
        else if constexpr (std::is_same_v<T, ProjSpace>)
          return "P" + std::to_string(k.n);
        else if constexpr (std::is_same_v<T, PointCounts>)
          return "counts(q=" + k.q.get_str() + ",d=" + std::to_string(k.d) + ")";
        else if constexpr (std::is_same_v<T, EulerChar>)
          return "euler(" + std::to_string(k.chi) + ")";
        else if constexpr (std::is_same_v<T, HodgeDeligne>)
          return "hd(" + k.e.str() + ")";
        else
          return "table(d=" + std::to_string(k.d) + ",n<=" + std::to_string(k.sym.size() - 1) + ")";
      },
      kind_);
}

std::string XModel::to_json_text() const {
  json j = std::visit(
      [](const auto& k) -> json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Symbolic>)
          return {{"kind", "Symbolic"}, {"params", {{"d", k.d}}}};
        else if constexpr (std::is_same_v<T, AffineSpace>)
          return {{"kind", "AffineSpace"}, {"params", {{"d", k.d}}}};
        else if constexpr (std::is_same_v<T, ProjLine>)
          return {{"kind", "ProjLine"}, {"params", json::object()}};
        else if constexpr (std::is_same_v<T, ProjSpace>)
          return {{"kind", "ProjSpace"}, {"params", {{"n", k.n}}}};
        else if constexpr (std::is_same_v<T, PointCounts>) {
          json N = json::array();
          for (const auto& n : k.N) N.push_back(n.get_str());
          return {{"kind", "PointCounts"}, {"params", {{"q", k.q.get_str()}, {"N", N}, {"d", k.d}}}};
        } else if constexpr (std::is_same_v<T, EulerChar>)
          return {{"kind", "EulerChar"}, {"params", {{"chi", k.chi}, {"d", k.d}}}};
        else if constexpr (std::is_same_v<T, HodgeDeligne>)
          return {{"kind", "HodgeDeligne"}, {"params", {{"e", k.e.str()}, {"d", k.d}}}};
        else {
          json sym = json::array();
          for (const auto& s : k.sym) sym.push_back(s.str());
          return {{"kind", "SymTable"}, {"params", {{"d", k.d}, {"sym", sym}}}};
        }
      },
      kind_);
  return j.dump();
}

std::optional<std::vector<LaurentL>> XModel::l_expansion(int max_n) const {
  std::vector<LaurentL> out;
  if (const auto* a = std::get_if<AffineSpace>(&kind_)) {
    for (int n = 0; n <= max_n; ++n) out.push_back(lefschetz(a->d * n));
    return out;
  }
  if (std::holds_alternative<ProjLine>(kind_)) {
    LaurentL acc(0);
    for (int n = 0; n <= max_n; ++n) {
      acc += lefschetz(n);
      out.push_back(acc);
    }
    return out;
  }
  if (const auto* p = std::get_if<ProjSpace>(&kind_)) {
    // Π_{i≤n} 1/(1 - L^i t)
    TruncSeries<LaurentL> z = TruncSeries<LaurentL>::one(max_n);
    for (int i = 0; i <= p->n; ++i) z *= TruncSeries<LaurentL>::geometric(max_n, lefschetz(i));
    return z.coeffs();
  }
  if (const auto* st = std::get_if<SymTable>(&kind_)) {
    if (static_cast<int>(st->sym.size()) <= max_n)
      throw InsufficientModelData("Sym table covers n <= " + std::to_string(st->sym.size() - 1) + ", needed " +
                                  std::to_string(max_n));
    return std::vector<LaurentL>(st->sym.begin(), st->sym.begin() + max_n + 1);
  }
  if (const auto* h = std::get_if<HodgeDeligne>(&kind_)) {
    for (const auto& [uv, c] : h->e.terms())
      if (uv.u != uv.v) return std::nullopt;
    for (const auto& s : hodge_sym(h->e, max_n)) {
      LaurentL x;
      for (const auto& [uv, c] : s.terms()) x.add_term(uv.u, c);
      out.push_back(x);
    }
    return out;
  }
  return std::nullopt;
}

Target Target::parse(std::string_view text) {
  const std::string t = trim(text);
  Target out;
  if (t == "motivic-L" || t == "motivic" || t == "L") {
    out.kind = Kind::MotivicL;
  } else if (t == "euler") {
    out.kind = Kind::Euler;
  } else if (t == "hodge-deligne" || t == "hd") {
    out.kind = Kind::Hodge;
  } else if (t == "symbolic") {
    out.kind = Kind::Symbolic;
  } else if (t == "count") {
    out.kind = Kind::Count;
  } else if (t.rfind("count:q=", 0) == 0) {
    out.kind = Kind::Count;
    out.q = parse_integer(t.substr(8), "q");
    if (*out.q < 2) throw ModelError("count target needs q >= 2");
  } else {
    throw ModelError("unknown specialization '" + t + "' (motivic-L, count:q=Q, euler, hodge-deligne, symbolic)");
  }
  return out;
}

std::string Target::name() const {
  switch (kind) {
    case Kind::Symbolic:
      return "symbolic";
    case Kind::MotivicL:
      return "motivic-L";
    case Kind::Count:
      return q ? "count:q=" + q->get_str() : "count";
    case Kind::Euler:
      return "euler";
    case Kind::Hodge:
      break;
  }
  return "hodge-deligne";
}

Domain<MotivicClass> symbolic_domain(int dim, int max_n) {
  Domain<MotivicClass> D;
  D.sym.push_back(MotivicClass(1));
  for (int n = 1; n <= max_n; ++n) D.sym.push_back(MotivicClass::S(n));
  D.lefschetz = MotivicClass::L(1);
  D.lefschetz_inverse = MotivicClass::L(-1);
  D.dim = dim;
  return D;
}

Domain<LaurentL> motivic_domain(const XModel& X, int max_n) {
  if (std::holds_alternative<Symbolic>(X.kind()))
    throw SymbolicEvaluationError("symbolic model has no L-expansion; pick a concrete model");
  auto sym = X.l_expansion(max_n);
  if (!sym) throw ModelError("model " + X.name() + " has no expansion in L; use a count, euler or hodge-deligne target");
  return Domain<LaurentL>{std::move(*sym), lefschetz(1), lefschetz(-1), X.dim()};
}

Domain<Rational> count_domain(const XModel& X, std::optional<Integer> q, int max_n) {
  if (const auto* pc = std::get_if<PointCounts>(&X.kind())) {
    if (q && *q != pc->q) throw ModelError("count target q=" + q->get_str() + " differs from the model's q");
    if (static_cast<int>(pc->N.size()) < max_n)
      throw InsufficientModelData("point counts cover r <= " + std::to_string(pc->N.size()) + ", needed " +
                                  std::to_string(max_n));
    Domain<Rational> D;
    for (const auto& s : exp_formula_sym_counts(pc->N, max_n)) D.sym.emplace_back(s);
    D.lefschetz = Rational(pc->q);
    D.lefschetz_inverse = Rational(1) / Rational(pc->q);
    D.dim = pc->d;
    return D;
  }
  if (!q) throw ModelError("count target needs q (use count:q=Q)");
  auto sym = X.l_expansion(max_n);
  if (!sym) throw ModelError("model " + X.name() + " cannot be point-counted");
  const Rational Lq(*q), Linv = Rational(1) / Rational(*q);
  return Domain<Rational>{substitute_L<Rational>(*sym, Lq, Linv), Lq, Linv, X.dim()};
}

Domain<Rational> euler_domain(const XModel& X, int max_n) {
  Domain<Rational> D;
  D.lefschetz = 1;
  D.lefschetz_inverse = 1;
  D.dim = X.dim();
  if (const auto* e = std::get_if<EulerChar>(&X.kind())) {
    for (const auto& b : negative_binomial_coeffs(Integer(e->chi), max_n)) D.sym.emplace_back(b);
    return D;
  }
  if (const auto* h = std::get_if<HodgeDeligne>(&X.kind())) {
    for (const auto& s : hodge_sym(h->e, max_n)) {
      Integer total = 0;
      for (const auto& [uv, c] : s.terms()) total += c;
      D.sym.emplace_back(total);
    }
    return D;
  }
  auto sym = X.l_expansion(max_n);
  if (!sym) throw ModelError("model " + X.name() + " has no Euler characteristic data");
  D.sym = substitute_L<Rational>(*sym, Rational(1), Rational(1));
  return D;
}

Domain<HodgePoly> hodge_domain(const XModel& X, int max_n) {
  const HodgePoly uv = HodgePoly::monomial(UV{1, 1}), uv_inv = HodgePoly::monomial(UV{-1, -1});
  if (const auto* h = std::get_if<HodgeDeligne>(&X.kind())) return {hodge_sym(h->e, max_n), uv, uv_inv, h->d};
  auto sym = X.l_expansion(max_n);
  if (!sym) throw ModelError("model " + X.name() + " has no Hodge-Deligne data");
  return {substitute_L<HodgePoly>(*sym, uv, uv_inv), uv, uv_inv, X.dim()};
}

Target natural_target(const XModel& X, const Target& requested) {
  if (requested.kind != Target::Kind::MotivicL) return requested;
  Target t;
  if (const auto* pc = std::get_if<PointCounts>(&X.kind())) {
    t.kind = Target::Kind::Count;
    t.q = pc->q;
  } else if (std::holds_alternative<EulerChar>(X.kind())) {
    t.kind = Target::Kind::Euler;
  } else if (std::holds_alternative<Symbolic>(X.kind())) {
    t.kind = Target::Kind::Symbolic;
  } else if (!X.l_expansion(0)) {
    t.kind = Target::Kind::Hodge;
  }
  return t;
}

std::string render(const MotivicClass& x) { return x.str(); }
std::string render(const LaurentL& x) { return MotivicClass(x).str(); }
std::string render(const Rational& x) { return x.get_str(); }
std::string render(const HodgePoly& x) { return x.str(); }

std::string sym_class(const XModel& X, int n, const Target& target) {
  return with_domain(X, target, n, [&](const auto& D) { return render(D.S(n)); });
}

std::string specialize_class(const MotivicClass& c, const XModel& X, const Target& target) {
  return with_domain(X, target, c.max_generator(), [&](const auto& D) { return render(D.image(c)); });
}

HodgePoly parse_hodge(std::string_view text) {
  HodgePoly out;
  for (const auto& [c, e] : parse_monomials(text, "uv")) out.add_term(UV{e[0], e[1]}, c);
  return out;
}

LaurentL parse_laurent(std::string_view text) {
  LaurentL out;
  for (const auto& [c, e] : parse_monomials(text, "L")) out.add_term(e[0], c);
  return out;
}

std::vector<Integer> negative_binomial_coeffs(const Integer& c, int max_n) {
  std::vector<Integer> b(static_cast<std::size_t>(max_n) + 1);
  b[0] = 1;
  for (int k = 1; k <= max_n; ++k) {
    Integer num = b[k - 1] * (c + k - 1);
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
    b[k] = num;
  }
  return b;
}

namespace {

// (1 ± t)^e for any integer e, to order N.
TruncSeries<Rational> binomial_power(int sign, long e, int N) {
  TruncSeries<Rational> base(N);
  base[0] = 1;
  if (N >= 1) base[1] = sign;
  TruncSeries<Rational> p = TruncSeries<Rational>::one(N);
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
  return e >= 0 ? p : series_inverse(p);
}

template <class R>
bool zeta_product_holds(const Domain<R>& U, const Domain<R>& Y, const Domain<R>& X, int N) {
  return X.zeta(N) == U.zeta(N) * Y.zeta(N);
}

}  // namespace

bool macdonald_check(long chi, int N) {
  const auto D = euler_domain(XModel(EulerChar{chi, 0}), N);
  if (!(D.zeta(N) == binomial_power(-1, -chi, N))) return false;
  TruncSeries<Rational> w(N);
  for (int j = 0; j <= N; ++j) w[j] = D.image(w_class_profile(j == 0 ? IntPartition{} : IntPartition{j}));
  return w == binomial_power(+1, chi, N);
}

bool stratification_check(const XModel& U, const XModel& Y, const XModel& X, const Target& target, int N) {
  switch (target.kind) {
    case Target::Kind::Symbolic:
      throw ModelError("stratification check needs a concrete specialization");
    case Target::Kind::MotivicL:
      return zeta_product_holds(motivic_domain(U, N), motivic_domain(Y, N), motivic_domain(X, N), N);
    case Target::Kind::Count:
      return zeta_product_holds(count_domain(U, target.q, N), count_domain(Y, target.q, N),
                                count_domain(X, target.q, N), N);
    case Target::Kind::Euler:
      return zeta_product_holds(euler_domain(U, N), euler_domain(Y, N), euler_domain(X, N), N);
    case Target::Kind::Hodge:
      break;
  }
  return zeta_product_holds(hodge_domain(U, N), hodge_domain(Y, N), hodge_domain(X, N), N);
}

bool product_with_line_check(const XModel& X, int N) {
  const auto* pc = std::get_if<PointCounts>(&X.kind());
  if (!pc) throw ModelError("product-with-line check needs a point-count model");
  if (static_cast<int>(pc->N.size()) < N) throw InsufficientModelData("not enough point counts");
  std::vector<Integer> line_counts;
  Integer qr = 1;
  for (int r = 1; r <= N; ++r) {
    qr *= pc->q;
    line_counts.push_back(pc->N[r - 1] * qr);
  }
  const auto base = exp_formula_sym_counts(pc->N, N);
  const auto prod = exp_formula_sym_counts(line_counts, N);
  Integer qn = 1;
  for (int n = 0; n <= N; ++n) {
    if (prod[n] != qn * base[n]) return false;
    qn *= pc->q;
  }
  return true;
}

}  // namespace motivic
