#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fodesc/formula.hpp"
#include "fodesc/structures.hpp"

namespace fodesc {

struct EnumerationBudget {
  std::size_t max_size = 8;
  std::size_t max_quantifiers = 4;
  std::size_t max_variables = 4;
  std::uint64_t node_budget = 200'000'000;
};

void validate(const EnumerationBudget& budget);

enum class EnumerationStatus : std::uint8_t { Complete, Stopped, BudgetExhausted };

// Every prenex NNF sentence of size <= max_size with prefix over x1..xq,
// q <= min(max_quantifiers, max_variables), up to the order of children of
// & and | (the smaller child, by size then compare(), goes left). Every
// prefix variable occurs in the matrix. Order: size, then q, then prefix
// (E before A, leftmost quantifier most significant), then matrix.
// The visitor returns false to stop.
EnumerationStatus enumerate_sentences(std::size_t arity, const EnumerationBudget& budget,
                                      const std::function<bool(const PrenexFormula&)>& visit);

enum class OracleMode : std::uint8_t {
  // Matrices are enumerated as truth tables over variable configurations
  // (which variables coincide, and the type of each); one smallest formula
  // per table is kept. Exact and much faster.
  Table,
  // Literal enumeration of matrices via enumerate_sentences.
  Syntactic,
};

struct OracleResult {
  std::optional<std::size_t> size;  // nullopt: nothing of size <= max_size
  std::optional<Formula> witness;
  std::size_t searched_up_to = 0;   // every size <= this was exhausted
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;  // node budget hit before size was settled
};

// Smallest sentence true on every profile of `accept` and false on every
// profile of `reject`, with at most max_quantifiers quantifiers.
OracleResult min_separating_sentence(std::size_t arity, const std::vector<TypeProfile>& accept,
                                     const std::vector<TypeProfile>& reject,
                                     const EnumerationBudget& budget,
                                     OracleMode mode = OracleMode::Table);

OracleResult exact_C(const TypeProfile& p, const EnumerationBudget& budget,
                     OracleMode mode = OracleMode::Table);
OracleResult exact_C(const UnaryStructure& s, const EnumerationBudget& budget,
                     OracleMode mode = OracleMode::Table);

// Smallest sentence of quantifier rank <= d, prenex or not, true on exactly
// the class. The rank replaces the quantifier and variable limits of the
// budget; max_size and node_budget apply.
OracleResult exact_Cd(const ClassTuple& c, const EnumerationBudget& budget,
                      OracleMode mode = OracleMode::Table);

}  // namespace fodesc
