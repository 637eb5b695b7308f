#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fodesc/formula.hpp"
#include "fodesc/semantics.hpp"
#include "fodesc/structures.hpp"

namespace fodesc {

struct ModelPair {
  UnaryStructure structure;
  Assignment assignment;
};

using ModelSet = std::vector<ModelPair>;

// Structures with the empty assignment.
ModelSet model_set(const std::vector<UnaryStructure>& structures);
ModelSet model_set(const std::vector<TypeProfile>& profiles);

enum class Phase : std::uint8_t { Quantifier, Atomic };
enum class Winner : std::uint8_t { S, D };

// (r, q, A, B). Every assignment must bind exactly x1 .. x_{next_var - 1}.
struct GamePosition {
  std::size_t r = 0;
  std::size_t q = 0;
  Phase phase = Phase::Quantifier;
  ModelSet A;
  ModelSet B;
  Var next_var = 1;
};

struct GameOptions {
  std::uint64_t node_budget = 5'000'000;
};

struct GameResult {
  Winner winner = Winner::D;
  // When S wins: a prenex formula of size <= r with <= q quantifiers that
  // holds on every pair of A and fails on every pair of B.
  std::optional<Formula> strategy;
  std::uint64_t nodes = 0;
};

// Exact value of the prenex formula size game under perfect play.
// Throws BudgetExceeded when the search visits more than node_budget positions.
GameResult decide(const GamePosition& pos, const GameOptions& options = {});

struct SeparationResult {
  std::optional<std::size_t> size;  // nullopt: nothing up to r_max
  std::optional<Formula> formula;
  std::size_t quantifiers = 0;
  std::uint64_t nodes = 0;
};

// Least r <= r_max such that S wins FS(r, q, A, B) for some q <= min(q_max, r - 1).
SeparationResult min_separating_size(const ModelSet& A, const ModelSet& B, std::size_t q_max,
                                     std::size_t r_max, const GameOptions& options = {});

struct Witness {
  std::optional<TypeProfile> other;  // M' (none when one type is realized)
  std::int64_t bound = 0;            // max(0, 3 |pi_{l-1}| - 3)
};

// M' moves one point from the second largest type to the largest one.
Witness lower_bound_witness(const TypeProfile& p);
Witness lower_bound_witness(const UnaryStructure& s);
std::int64_t lower_bound(const TypeProfile& p);

struct ClassWitness {
  TypeProfile member;                // class member with all surplus in the largest type
  std::optional<TypeProfile> other;  // its witness partner
  std::int64_t bound = 0;            // max(0, 3 m_{t-1} - 3)
};

ClassWitness lower_bound_witness_d(const ClassTuple& c);
std::int64_t lower_bound_d(const ClassTuple& c);

// Smallest set of atoms over x1..x_vars such that every (a, b) in A x B is
// told apart by one atom true at a and false at b. nullopt if none exists.
// Exhaustive; only for tiny positions.
std::optional<std::vector<Formula>> min_separating_atoms(const ModelSet& A, const ModelSet& B,
                                                         std::size_t max_atoms = 6);

}  // namespace fodesc
