#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivic/partition.hpp"

using namespace motivic;

namespace {

GenPartition P(const char* s) { return GenPartition::parse(s); }

std::set<GenPartition> Ps(std::initializer_list<const char*> items) {
  std::set<GenPartition> out;
  for (const char* s : items) out.insert(P(s));
  return out;
}

}  // namespace

TEST_CASE("multiplicity profile") {
  CHECK(multiplicity_profile(P("a,a,b")) == IntPartition{2, 1});
  CHECK(multiplicity_profile(P("")).empty());
  CHECK(multiplicity_profile(P("1^3,2^3,3,4^2,5")) == IntPartition{3, 3, 2, 1, 1});
}

TEST_CASE("stats") {
  auto s = stats(P("1^3,2^3,3,4^2,5"));
  CHECK(s.size == 10);
  CHECK(s.distinct == 5);
  CHECK(s.total == Part::integer(25));

  auto e = stats(P(""));
  CHECK(e.size == 0);
  CHECK(e.distinct == 0);
  CHECK(e.total.is_zero());

  auto x = stats(P("x,x,2x"));
  CHECK(x.size == 3);
  CHECK(x.distinct == 2);
  CHECK(x.total == Part::of("x", 4));
}

TEST_CASE("part arithmetic and parsing") {
  const Part p = Part::parse("2x+3");
  CHECK(p.coeff("x") == 2);
  CHECK(p.coeff(kUnit) == 3);
  CHECK(p.str() == Part::parse("3+2x").str());
  CHECK(Part::parse("x+y").dominates(Part::of("y")));
  CHECK_FALSE(Part::of("y").dominates(Part::parse("x+y")));
  CHECK_THROWS_AS(Part::parse("0"), PartitionError);
  CHECK_THROWS_AS(Part::parse("x-y"), PartitionError);
}

TEST_CASE("formalization") {
  CHECK(formalize(P("1,1,2")) == P("a1,a1,a2"));
  CHECK(formalize(P("2")) == P("a1"));
  const auto f = formalize(P("1,1,2,2,3"));
  CHECK(f == P("a1,a1,a2,a2,a3"));
  CHECK(multiplicity_profile(f) == IntPartition{2, 2, 1});
}

TEST_CASE("disjoint concatenation keeps values apart") {
  const auto c = disjoint_concat(P("1,1"), P("1"));
  CHECK(c.size() == 3);
  CHECK(multiplicity_profile(c) == IntPartition{2, 1});
}

TEST_CASE("elementary merges") {
  CHECK(elementary_merges(P("1,2,3")) == Ps({"3,3", "4,2", "5,1"}));
  CHECK(elementary_merges(P("a,a")) == Ps({"2a"}));
  CHECK(elementary_merges(P("1")).empty());
}

TEST_CASE("merge closure") {
  CHECK(merge_closure(P("1,2,3")) == Ps({"1,2,3", "3,3", "4,2", "5,1", "6"}));
  CHECK(merge_closure(P("a")) == Ps({"a"}));
  CHECK(merge_closure(P("1,1")) == Ps({"1,1", "2"}));
  // closure of 1^n is every partition of n
  CHECK(merge_closure(P("1^6")).size() == 11);
}

TEST_CASE("refinement order") {
  CHECK(leq(P("1,2,3"), P("3,3")));
  CHECK(leq(P("3,3"), P("6")));
  CHECK(leq(P("1,2,3"), P("1,2,3")));
  CHECK_FALSE(leq(P("1,1,1"), P("2,2")));
  CHECK_FALSE(leq(P("3,3"), P("1,2,3")));
  CHECK(leq(IntPartition{1, 1, 1}, IntPartition{2, 1}));
  CHECK_FALSE(leq(IntPartition{2, 2}, IntPartition{3, 1}));
  CHECK(leq(P("x,x,y"), P("2x,y")));
  CHECK_FALSE(leq(P("x,y"), P("2x")));
}

TEST_CASE("add_lt_a") {
  auto as_set = [](const std::vector<AddedPartition>& v) {
    std::set<GenPartition> s;
    for (const auto& a : v) s.insert(a.partition);
    return s;
  };
  const auto one = add_lt_a(P("x"), 2);
  CHECK(as_set(one) == Ps({"x", "x+1"}));

  const auto two = add_lt_a(P("x,y"), 2);
  CHECK(as_set(two) == Ps({"x,y", "x+1,y", "x,y+1", "x+1,y+1"}));
  for (const auto& a : two) CHECK(a.same_profile);

  // equal parts can receive different increments, lowering the profile
  bool lowered = false;
  for (const auto& a : add_lt_a(P("x,x"), 2))
    if (!a.same_profile) {
      lowered = true;
      CHECK(multiplicity_profile(a.partition) == IntPartition{1, 1});
    }
  CHECK(lowered);
  CHECK_THROWS_AS(add_lt_a(P("2"), 2), PartitionError);
}

TEST_CASE("s_set") {
  CHECK(s_set({}, 2) == std::set<IntPartition>{IntPartition{}});
  CHECK(s_set({2}, 2) == std::set<IntPartition>{{2}, {3}});
  const auto three = s_set({3}, 3);
  CHECK_FALSE(three.empty());
  for (const auto& mu : three) CHECK(sum(mu) >= 3);
  CHECK_THROWS_AS(s_set({2}, 3), PartitionError);
}

TEST_CASE("Q enumeration") {
  auto parts = [](int n) {
    std::set<IntPartition> s;
    for (const auto& q : enumerate_Q(n)) s.insert(q.partition);
    return s;
  };
  CHECK(parts(1) == std::set<IntPartition>{{}, {1}});
  CHECK(parts(2) == std::set<IntPartition>{{}, {1}, {1, 1}, {2, 1}});
  // members of size n correspond to compositions of n
  CHECK(enumerate_Q(8).size() == 256);
  for (const auto& q : enumerate_Q(5)) {
    const int m = q.partition.empty() ? 0 : q.partition.front();
    CHECK(q.distinct == m);
  }
}

TEST_CASE("partitions with k parts") {
  CHECK(enumerate_k_parts(1, 3) == std::vector<IntPartition>{{1}, {2}, {3}});
  const auto two = enumerate_k_parts(2, 4);
  CHECK(std::set<IntPartition>(two.begin(), two.end()) == std::set<IntPartition>{{1, 1}, {2, 1}, {3, 1}, {2, 2}});
  CHECK(enumerate_k_parts(0, 5) == std::vector<IntPartition>{IntPartition{}});
}

TEST_CASE("chains") {
  const auto single = ll_chains(P("3"), 5);
  REQUIRE(single.size() == 1);
  CHECK(single[0].size() == 1);
  // 1^3: the chain count that gives S_3 - S_1^2
  CHECK(ll_chains(P("1,1,1"), 3).size() == 4);
}

TEST_CASE("parsing and printing") {
  CHECK(parse_int_partition("2,2,3") == IntPartition{3, 2, 2});
  CHECK(str(IntPartition{2, 2, 1}) == "1,2^2");
  CHECK(P("1^2,2").str() == "1^2,2");
  CHECK_THROWS_AS(parse_int_partition("2,-1"), PartitionError);
  CHECK_THROWS_AS(canonical({0}), PartitionError);
}
