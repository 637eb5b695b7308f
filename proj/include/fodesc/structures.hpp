#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fodesc/bigint.hpp"

namespace fodesc {

using TypeIndex = std::uint32_t;
using Element = std::uint32_t;  // 0-based; element i is domain point i + 1

// A monadic vocabulary {P_1, ..., P_k}. Type index j encodes the type whose
// predicates are exactly those P_{i+1} with bit i of j set.
class Vocabulary {
 public:
  static constexpr std::size_t max_arity = 16;

  explicit Vocabulary(std::vector<std::string> predicates);

  // Default names: P for k = 1, P, Q for k = 2, P1..Pk otherwise.
  static Vocabulary with_arity(std::size_t k);

  std::size_t arity() const noexcept { return predicates_.size(); }
  std::size_t type_count() const noexcept { return std::size_t{1} << arity(); }
  // The additive constant 15 k 2^k that absorbs vocabulary overhead in
  // every formula-size bound.
  std::int64_t c_tau() const noexcept {
    return 15 * static_cast<std::int64_t>(arity()) * static_cast<std::int64_t>(type_count());
  }

  const std::vector<std::string>& predicates() const noexcept { return predicates_; }
  const std::string& name(std::size_t predicate) const { return predicates_.at(predicate); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<std::string> predicates_;
};

// Arity k such that 2^k == type_count; throws if type_count is not a power of two.
std::size_t arity_for_type_count(std::size_t type_count);

// counts[j] = number of elements realizing type j. Identifies an isomorphism class.
struct TypeProfile {
  std::vector<std::size_t> counts;

  std::size_t n() const noexcept;
  std::size_t type_count() const noexcept { return counts.size(); }
  bool operator==(const TypeProfile&) const = default;
  auto operator<=>(const TypeProfile&) const = default;
};

// Capped tuple naming an equivalence class of structures that agree on every
// type realized fewer than d times.
struct ClassTuple {
  std::size_t d = 1;
  std::size_t n = 0;
  std::vector<std::size_t> m;

  std::size_t sum() const noexcept;
  bool is_isomorphism_class() const noexcept { return sum() == n; }
  bool operator==(const ClassTuple&) const = default;
};

// Throws InputError unless the tuple names an actual class.
void validate(const ClassTuple& tuple);
bool is_valid(const ClassTuple& tuple) noexcept;

class UnaryStructure {
 public:
  UnaryStructure(Vocabulary vocab, std::vector<TypeIndex> type_of);

  const Vocabulary& vocab() const noexcept { return vocab_; }
  std::size_t n() const noexcept { return type_of_.size(); }
  TypeIndex type_of(Element e) const { return type_of_.at(e); }
  const std::vector<TypeIndex>& types() const noexcept { return type_of_; }
  bool holds(std::size_t predicate, Element e) const {
    return ((type_of_.at(e) >> predicate) & 1U) != 0;
  }

  bool operator==(const UnaryStructure&) const = default;

 private:
  Vocabulary vocab_;
  std::vector<TypeIndex> type_of_;
};

TypeProfile profile_of(const UnaryStructure& s);

ClassTuple class_tuple_of(const TypeProfile& p, std::size_t d);
ClassTuple class_tuple_of(const UnaryStructure& s, std::size_t d);

// Weak compositions of n into type_count parts in lexicographic order.
// The visitor returns false to stop early.
void for_each_profile(std::size_t type_count, std::size_t n,
                      const std::function<bool(const TypeProfile&)>& visit);
std::vector<TypeProfile> enumerate_profiles(const Vocabulary& vocab, std::size_t n);
std::vector<TypeProfile> enumerate_profiles(std::size_t type_count, std::size_t n);

// Every valid class tuple for the given n and d, ordered lexicographically by m.
std::vector<ClassTuple> enumerate_class_tuples(std::size_t type_count, std::size_t n,
                                               std::size_t d);

// Canonical structure: type 0 elements first, then type 1, and so on.
UnaryStructure representative(const Vocabulary& vocab, const TypeProfile& p);
UnaryStructure representative(const TypeProfile& p);

BigInt multinomial(std::size_t n, const std::vector<std::size_t>& counts);
BigInt multinomial(const TypeProfile& p);
BigInt binomial(std::size_t n, std::size_t k);

// Number of structures on a fixed n-element domain inside the class.
BigInt class_size(const ClassTuple& tuple);

// Each element's type drawn independently and uniformly (one fair coin per
// predicate). Deterministic in the seed.
UnaryStructure sample_uniform(const Vocabulary& vocab, std::size_t n, std::uint64_t seed);

// sqrt(3 ln(n) n / 2^k); requires n >= 2. A uniform sample is balanced with
// probability at least 1 - 2^(k+1)/n.
double balance_threshold(std::size_t arity, std::size_t n);
bool is_balanced(const TypeProfile& p);
bool is_balanced(const UnaryStructure& s);

// First row: predicate names. One row per element, cells 0 or 1.
UnaryStructure read_csv(std::istream& in);
UnaryStructure read_csv_file(const std::string& path);
void write_csv(std::ostream& out, const UnaryStructure& s);

// "k=2 n=10 counts=0,0,3,7" (n optional; checked against the counts).
struct ProfileLiteral {
  Vocabulary vocab;
  TypeProfile profile;
};
ProfileLiteral parse_profile_literal(std::string_view text);
std::string format_counts(const std::vector<std::size_t>& counts);

}  // namespace fodesc
