#include "motivic/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace motivic {

// ---------------------------------------------------------------------------
// Part

Part Part::integer(long n) {
  if (n < 0) throw PartitionError("parts are nonnegative");
  Part p;
  if (n != 0) p.terms_.emplace_back(kUnit, n);
  return p;
}

Part Part::of(const Generator& g, long coeff) {
  if (coeff < 0) throw PartitionError("parts are nonnegative");
  Part p;
  if (coeff != 0) p.terms_.emplace_back(g, coeff);
  return p;
}

void Part::normalize() {
  std::sort(terms_.begin(), terms_.end());
  std::vector<Term> merged;
  for (auto& [g, c] : terms_) {
    if (!merged.empty() && merged.back().first == g)
      merged.back().second += c;
    else
      merged.emplace_back(g, c);
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

long Part::coeff(const Generator& g) const {
  for (const auto& [name, c] : terms_)
    if (name == g) return c;
  return 0;
}

bool Part::is_integer() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == kUnit);
}

long Part::integer_value() const {
  if (!is_integer()) throw PartitionError("part " + str() + " is not an integer");
  return terms_.empty() ? 0 : terms_[0].second;
}

long Part::weight() const {
  long w = 0;
  for (const auto& t : terms_) w += t.second;
  return w;
}

bool Part::dominates(const Part& other) const {
  auto it = terms_.begin();
  for (const auto& [g, c] : other.terms_) {
    while (it != terms_.end() && it->first < g) ++it;
    if (it == terms_.end() || it->first != g || it->second < c) return false;
  }
  return true;
}

Part Part::minus(const Part& other) const {
  Part r = *this;
  for (const auto& [g, c] : other.terms_) r.terms_.emplace_back(g, -c);
  r.normalize();
  for (const auto& t : r.terms_)
    if (t.second < 0) throw PartitionError("negative part coefficient");
  return r;
}

Part Part::plus_units(long k) const { return *this + Part::integer(k); }

Part Part::scaled(long k) const {
  Part r = *this;
  for (auto& t : r.terms_) t.second *= k;
  r.normalize();
  return r;
}

Part Part::operator+(const Part& other) const {
  Part r = *this;
  r.terms_.insert(r.terms_.end(), other.terms_.begin(), other.terms_.end());
  r.normalize();
  return r;
}

std::string Part::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  long unit = 0;
  for (const auto& [g, c] : terms_) {
    if (g == kUnit) {
      unit = c;
      continue;
    }
    if (!first) os << '+';
    if (c != 1) os << c;
    os << g;
    first = false;
  }
  if (unit != 0) {
    if (!first) os << '+';
    os << unit;
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view s, std::string_view context) {
  if (s.empty()) throw PartitionError("missing integer in '" + std::string(context) + "'");
  long v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw PartitionError("bad integer in '" + std::string(context) + "'");
    v = v * 10 + (ch - '0');
    if (v > 1'000'000'000) throw PartitionError("integer too large in '" + std::string(context) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Part Part::parse(std::string_view text) {
  Part p;
  for (auto raw : split(trim(text), '+')) {
    auto term = trim(raw);
    std::size_t i = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    std::string_view digits = term.substr(0, i);
    std::string_view name = term.substr(i);
    if (!name.empty()) {
      if (!std::isalpha(static_cast<unsigned char>(name[0])))
        throw PartitionError("bad generator name in '" + std::string(text) + "'");
      for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
          throw PartitionError("bad generator name in '" + std::string(text) + "'");
      long c = digits.empty() ? 1 : parse_long(digits, text);
      p.terms_.emplace_back(std::string(name), c);
    } else {
      p.terms_.emplace_back(kUnit, parse_long(digits, text));
    }
  }
  p.normalize();
  if (p.is_zero()) throw PartitionError("zero part in '" + std::string(text) + "'");
  return p;
}

// ---------------------------------------------------------------------------
// Integer partitions

IntPartition canonical(IntPartition p) {
  for (int v : p)
    if (v <= 0) throw PartitionError("integer partitions have positive parts");
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

long sum(const IntPartition& p) { return std::accumulate(p.begin(), p.end(), 0L); }

// ---------------------------------------------------------------------------
// GenPartition

GenPartition::GenPartition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_)
    if (p.is_zero()) throw PartitionError("partitions cannot contain a zero part");
  std::sort(parts_.begin(), parts_.end());
}

GenPartition GenPartition::from_ints(std::span<const int> values) {
  std::vector<Part> parts;
  parts.reserve(values.size());
  for (int v : values) {
    if (v <= 0) throw PartitionError("integer parts must be positive");
    parts.push_back(Part::integer(v));
  }
  return GenPartition(std::move(parts));
}

GenPartition GenPartition::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "()" || text == "0") return {};
  std::vector<Part> parts;
  for (auto raw : split(text, ',')) {
    auto item = trim(raw);
    long mult = 1;
    if (auto caret = item.find('^'); caret != std::string_view::npos) {
      mult = parse_long(trim(item.substr(caret + 1)), text);
      item = item.substr(0, caret);
    }
    Part p = Part::parse(item);
    for (long i = 0; i < mult; ++i) parts.push_back(p);
  }
  return GenPartition(std::move(parts));
}

std::size_t GenPartition::distinct() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (i == 0 || parts_[i] != parts_[i - 1]) ++n;
  return n;
}

Part GenPartition::total() const {
  Part t;
  for (const auto& p : parts_) t = t + p;
  return t;
}

std::optional<IntPartition> GenPartition::as_ints() const {
  IntPartition out;
  for (const auto& p : parts_) {
    if (!p.is_integer()) return std::nullopt;
    out.push_back(static_cast<int>(p.integer_value()));
  }
  return canonical(std::move(out));
}

GenPartition GenPartition::concat(const GenPartition& other) const {
  std::vector<Part> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return GenPartition(std::move(parts));
}

GenPartition GenPartition::with_part(const Part& p) const {
  std::vector<Part> parts = parts_;
  parts.push_back(p);
  return GenPartition(std::move(parts));
}

std::string GenPartition::str() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i != 0) os << ',';
    os << parts_[i].str();
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string str(const IntPartition& p) {
  return GenPartition::from_ints(p).str();
}

IntPartition parse_int_partition(std::string_view text) {
  auto g = GenPartition::parse(text);
  auto ints = g.as_ints();
  if (!ints) throw PartitionError("expected an integer partition, got '" + std::string(text) + "'");
  return *ints;
}

// ---------------------------------------------------------------------------
// Statistics and formalization

MultiplicityProfile multiplicity_profile(const GenPartition& lambda) {
  MultiplicityProfile counts;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    counts.push_back(static_cast<int>(j - i));
    i = j;
  }
  return canonical(std::move(counts));
}

PartitionStats stats(const GenPartition& lambda) {
  return {lambda.size(), lambda.distinct(), lambda.total()};
}

GenPartition formalize(const GenPartition& lambda, std::string_view prefix) {
  std::vector<Part> parts;
  const auto& src = lambda.parts();
  int index = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (i == 0 || src[i] != src[i - 1]) ++index;
    parts.push_back(Part::of(std::string(prefix) + std::to_string(index)));
  }
  return GenPartition(std::move(parts));
}

GenPartition disjoint_concat(const GenPartition& lambda, const GenPartition& mu) {
  return formalize(lambda, "a").concat(formalize(mu, "b"));
}

// ---------------------------------------------------------------------------
// Merge order

std::set<GenPartition> elementary_merges(const GenPartition& lambda) {
  std::set<GenPartition> out;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i] == parts[i - 1]) continue;
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (j > i + 1 && parts[j] == parts[j - 1]) continue;
      std::vector<Part> next;
      next.reserve(parts.size() - 1);
      for (std::size_t k = 0; k < parts.size(); ++k)
        if (k != i && k != j) next.push_back(parts[k]);
      next.push_back(parts[i] + parts[j]);
      out.insert(GenPartition(std::move(next)));
    }
  }
  return out;
}

namespace {

struct ClosureCache {
  std::shared_mutex mutex;
  std::map<GenPartition, std::unique_ptr<const std::set<GenPartition>>> sets;
};

ClosureCache& closure_cache() {
  static ClosureCache cache;
  return cache;
}

std::set<GenPartition> compute_closure(const GenPartition& lambda) {
  std::set<GenPartition> seen{lambda};
  std::vector<GenPartition> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<GenPartition> next;
    for (const auto& p : frontier)
      for (auto& m : elementary_merges(p))
        if (seen.insert(m).second) next.push_back(m);
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

const std::set<GenPartition>& merge_closure(const GenPartition& lambda) {
  auto& cache = closure_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.sets.find(lambda); it != cache.sets.end()) return *it->second;
  }
  auto computed = std::make_unique<const std::set<GenPartition>>(compute_closure(lambda));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.sets.try_emplace(lambda, std::move(computed));
  return *it->second;
}

namespace {

// Assign parts (sorted by decreasing weight) to blocks with remaining
// capacities; blocks with identical remaining capacity are interchangeable.
template <class T, class Fits, class Sub, class Add, class Zero>
bool assign_blocks(const std::vector<T>& parts, std::size_t i, std::vector<T>& remaining,
                   const Fits& fits, const Sub& sub, const Add& add, const Zero& is_zero) {
  if (i == parts.size())
    return std::all_of(remaining.begin(), remaining.end(), is_zero);
  for (std::size_t b = 0; b < remaining.size(); ++b) {
    if (!fits(remaining[b], parts[i])) continue;
    bool duplicate = false;
    for (std::size_t e = 0; e < b && !duplicate; ++e) duplicate = remaining[e] == remaining[b];
    if (duplicate) continue;
    sub(remaining[b], parts[i]);
    bool ok = assign_blocks(parts, i + 1, remaining, fits, sub, add, is_zero);
    add(remaining[b], parts[i]);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool leq(const GenPartition& lambda, const GenPartition& mu) {
  if (lambda.size() < mu.size()) return false;
  if (lambda.total() != mu.total()) return false;
  std::vector<Part> parts = lambda.parts();
  std::sort(parts.begin(), parts.end(),
            [](const Part& x, const Part& y) { return x.weight() > y.weight(); });
  std::vector<Part> remaining = mu.parts();
  return assign_blocks(
      parts, 0, remaining, [](const Part& cap, const Part& p) { return cap.dominates(p); },
      [](Part& cap, const Part& p) { cap = cap.minus(p); },
      [](Part& cap, const Part& p) { cap = cap + p; }, [](const Part& cap) { return cap.is_zero(); });
}

bool leq(const IntPartition& lambda, const IntPartition& mu) {
  if (lambda.size() < mu.size()) return false;
  if (sum(lambda) != sum(mu)) return false;
  IntPartition parts = canonical(lambda);
  IntPartition remaining = canonical(mu);
  return assign_blocks(
      parts, 0, remaining, [](int cap, int p) { return cap >= p; }, [](int& cap, int p) { cap -= p; },
      [](int& cap, int p) { cap += p; }, [](int cap) { return cap == 0; });
}

// ---------------------------------------------------------------------------
// Derived sets

std::vector<AddedPartition> add_lt_a(const GenPartition& nu, int a) {
  if (a < 1) throw PartitionError("add_lt_a needs a >= 1");
  for (const auto& p : nu.parts())
    if (p.coeff(kUnit) != 0)
      throw PartitionError("add_lt_a expects a formalization, got " + nu.str());

  // Group equal parts; a group of m equal parts receives a multiset of
  // increments, i.e. counts c_0..c_{a-1} summing to m.
  std::vector<std::pair<Part, int>> groups;
  for (const auto& p : nu.parts()) {
    if (!groups.empty() && groups.back().first == p)
      ++groups.back().second;
    else
      groups.emplace_back(p, 1);
  }

  const auto base_profile = multiplicity_profile(nu);
  std::vector<AddedPartition> out;
  std::vector<Part> current;

  std::function<void(std::size_t)> per_group;
  std::function<void(std::size_t, int, int)> per_increment;

  per_group = [&](std::size_t g) {
    if (g == groups.size()) {
      GenPartition candidate(current);
      auto profile = multiplicity_profile(candidate);
      bool same = profile == base_profile;
      if (!same && !leq(profile, base_profile))
        throw IncomparableProfiles("profile of " + candidate.str() + " is not below that of " + nu.str());
      out.push_back({std::move(candidate), same});
      return;
    }
    per_increment(g, 0, groups[g].second);
  };
  per_increment = [&](std::size_t g, int k, int left) {
    if (k == a - 1) {
      for (int i = 0; i < left; ++i) current.push_back(groups[g].first.plus_units(k));
      per_group(g + 1);
      current.resize(current.size() - left);
      return;
    }
    for (int take = left; take >= 0; --take) {
      for (int i = 0; i < take; ++i) current.push_back(groups[g].first.plus_units(k));
      per_increment(g, k + 1, left - take);
      current.resize(current.size() - take);
    }
  };
  per_group(0);
  return out;
}

std::set<IntPartition> s_set(const IntPartition& nu_in, int a, std::optional<int> j) {
  if (a < 2) throw PartitionError("s_set needs a >= 2");
  IntPartition nu = canonical(nu_in);
  for (int v : nu)
    if (v < a) throw PartitionError("s_set needs all parts of nu >= a");
  const int ones = j.value_or(static_cast<int>(nu.size()) * (a - 1));
  if (ones < 0) throw PartitionError("s_set needs j >= 0");

  IntPartition start = nu;
  start.insert(start.end(), static_cast<std::size_t>(ones), 1);
  std::optional<IntPartition> excluded;
  if (ones - a >= 0) {
    IntPartition e = nu;
    e.push_back(a);
    e.insert(e.end(), static_cast<std::size_t>(ones - a), 1);
    excluded = canonical(std::move(e));
  }

  std::set<IntPartition> out;
  for (const auto& lam : merge_closure(GenPartition::from_ints(start))) {
    auto ints = *lam.as_ints();
    if (excluded && leq(*excluded, ints)) continue;
    IntPartition big;
    for (int v : ints)
      if (v >= a) big.push_back(v);
    out.insert(canonical(std::move(big)));
  }
  return out;
}

std::vector<QMember> enumerate_Q(int max_size) {
  if (max_size < 0) throw PartitionError("enumerate_Q needs max_size >= 0");
  std::vector<QMember> out;
  out.push_back({{}, 0});
  // Compositions (c_1..c_m) of n correspond to 1^{c_1} 2^{c_2} ... m^{c_m}.
  std::vector<int> comp;
  std::function<void(int)> rec = [&](int left) {
    if (!comp.empty()) {
      IntPartition p;
      for (std::size_t v = 0; v < comp.size(); ++v) p.insert(p.end(), comp[v], static_cast<int>(v + 1));
      out.push_back({canonical(std::move(p)), static_cast<int>(comp.size())});
    }
    for (int c = 1; c <= left; ++c) {
      comp.push_back(c);
      rec(left - c);
      comp.pop_back();
    }
  };
  rec(max_size);
  return out;
}

std::vector<IntPartition> enumerate_k_parts(int k, int max_sum) {
  if (k < 0 || max_sum < 0) throw PartitionError("enumerate_k_parts needs k, max_sum >= 0");
  std::vector<IntPartition> out;
  IntPartition current;
  std::function<void(int, int, int)> rec = [&](int left, int cap, int budget) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    // Remaining left-1 parts need at least 1 each.
    for (int v = std::min(cap, budget - (left - 1)); v >= 1; --v) {
      current.push_back(v);
      rec(left - 1, v, budget - v);
      current.pop_back();
    }
  };
  rec(k, max_sum, max_sum);
  std::sort(out.begin(), out.end(), [](const IntPartition& x, const IntPartition& y) {
    return sum(x) != sum(y) ? sum(x) < sum(y) : x > y;
  });
  return out;
}

std::vector<Chain> ll_chains(const GenPartition& lambda, int max_len) {
  std::vector<Chain> out;
  Chain chain{lambda};
  std::function<void()> rec = [&] {
    out.push_back(chain);
    if (static_cast<int>(chain.size()) - 1 >= max_len) return;
    const auto f = formalize(chain.back());
    for (const auto& next : merge_closure(f)) {
      if (next == f) continue;
      chain.push_back(next);
      rec();
      chain.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace motivic
