#pragma once

#include <random>
#include <vector>

#include "fodesc/formula.hpp"
#include "fodesc/structures.hpp"

namespace fodesc::test {

// Random NNF formula over x1..max_var; free variables allowed.
inline Formula random_formula(std::mt19937_64& rng, std::size_t arity, Var max_var,
                              int depth) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto var = [&] { return static_cast<Var>(1 + pick(max_var)); };
  if (depth == 0 || pick(3) == 0) {
    switch (pick(4)) {
      case 0: return Formula::eq(var(), var());
      case 1: return Formula::neq(var(), var());
      case 2: return Formula::pred(pick(arity), var());
      default: return Formula::neg_pred(pick(arity), var());
    }
  }
  switch (pick(4)) {
    case 0: return Formula::conj(random_formula(rng, arity, max_var, depth - 1),
                                 random_formula(rng, arity, max_var, depth - 1));
    case 1: return Formula::disj(random_formula(rng, arity, max_var, depth - 1),
                                 random_formula(rng, arity, max_var, depth - 1));
    case 2: return Formula::exists(var(), random_formula(rng, arity, max_var, depth - 1));
    default: return Formula::forall(var(), random_formula(rng, arity, max_var, depth - 1));
  }
}

// Closes f by an outer prefix over its free variables.
inline Formula close(const Formula& f) {
  Formula g = f;
  for (Var v : free_variables(f)) g = Formula::exists(v, g);
  return g;
}

// Every structure on n points (t^n of them), as type vectors.
inline std::vector<std::vector<TypeIndex>> all_type_vectors(std::size_t t, std::size_t n) {
  std::vector<std::vector<TypeIndex>> out;
  std::vector<TypeIndex> cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == t) cur[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace fodesc::test
