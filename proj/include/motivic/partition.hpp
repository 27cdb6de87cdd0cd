#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motivic {

// Generator names are alphanumeric; the empty name is the unit generator,
// so an integer part n is n times the unit.
using Generator = std::string;
inline const Generator kUnit{};

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonzero vector of nonnegative integers over the generator alphabet.
class Part {
 public:
  using Term = std::pair<Generator, long>;

  Part() = default;
  static Part integer(long n);
  static Part of(const Generator& g, long coeff = 1);
  static Part parse(std::string_view text);

  long coeff(const Generator& g) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_integer() const;
  long integer_value() const;
  // Sum of all coefficients; used only as a sort key for backtracking.
  long weight() const;

  // Componentwise comparison: every coefficient of this is >= that of other.
  bool dominates(const Part& other) const;
  Part minus(const Part& other) const;
  Part plus_units(long k) const;
  Part scaled(long k) const;

  const std::vector<Term>& terms() const { return terms_; }
  std::string str() const;

  Part operator+(const Part& other) const;
  auto operator<=>(const Part&) const = default;

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted by generator, no zero coefficients
};

using IntPartition = std::vector<int>;  // non-increasing, all parts >= 1
using MultiplicityProfile = IntPartition;

IntPartition canonical(IntPartition p);
long sum(const IntPartition& p);

/// A finite multiset of parts, stored in canonical (sorted) order.
class GenPartition {
 public:
  GenPartition() = default;
  explicit GenPartition(std::vector<Part> parts);
  static GenPartition from_ints(std::span<const int> values);
  static GenPartition parse(std::string_view text);

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::size_t distinct() const;
  Part total() const;

  std::optional<IntPartition> as_ints() const;
  GenPartition concat(const GenPartition& other) const;
  GenPartition with_part(const Part& p) const;

  std::string str() const;
  auto operator<=>(const GenPartition&) const = default;

 private:
  std::vector<Part> parts_;
};

struct PartitionStats {
  std::size_t size = 0;      // |λ|
  std::size_t distinct = 0;  // ‖λ‖
  Part total;                // Σλ, zero for the empty partition
};

MultiplicityProfile multiplicity_profile(const GenPartition& lambda);
PartitionStats stats(const GenPartition& lambda);

/// Replaces each distinct value by a fresh generator prefix1, prefix2, ...
/// numbered in canonical order of the values.
GenPartition formalize(const GenPartition& lambda, std::string_view prefix = "a");

/// λ·μ: concatenation after renaming so that no value of λ equals one of μ.
GenPartition disjoint_concat(const GenPartition& lambda, const GenPartition& mu);

std::set<GenPartition> elementary_merges(const GenPartition& lambda);

/// {μ : λ ≤ μ}, including λ. Results are memoized per canonical λ.
const std::set<GenPartition>& merge_closure(const GenPartition& lambda);

/// λ ≤ μ in the refinement order, decided by backtracking over block sums.
bool leq(const GenPartition& lambda, const GenPartition& mu);
bool leq(const IntPartition& lambda, const IntPartition& mu);

class IncomparableProfiles : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct AddedPartition {
  GenPartition partition;
  bool same_profile = false;  // m(ν') = m(ν); otherwise m(ν') < m(ν)
};

/// The set of partitions obtained by adding k·1 (0 <= k < a) to every part
/// of the formalization ν. Throws IncomparableProfiles if some member's
/// multiplicity profile is not below that of ν.
std::vector<AddedPartition> add_lt_a(const GenPartition& nu, int a);

/// Big parts of the merges of 1^{j}ν that are not above 1^{j-a}·a·ν.
/// j defaults to |ν|(a-1), the stable value.
std::set<IntPartition> s_set(const IntPartition& nu, int a, std::optional<int> j = std::nullopt);

struct QMember {
  IntPartition partition;
  int distinct = 0;
};

/// Partitions using exactly the values 1..m for some m, with at most max_size parts.
std::vector<QMember> enumerate_Q(int max_size);

/// Integer partitions with exactly k parts and sum at most max_sum.
std::vector<IntPartition> enumerate_k_parts(int k, int max_sum);

using Chain = std::vector<GenPartition>;

/// Chains λ = μ0 ≪ μ1 ≪ ... with μ ≪ μ' iff formalize(μ) < μ'.
std::vector<Chain> ll_chains(const GenPartition& lambda, int max_len);

std::string str(const IntPartition& p);
IntPartition parse_int_partition(std::string_view text);

}  // namespace motivic
