#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace fodesc {

using Var = std::uint32_t;  // x_1, x_2, ... ; 0 is never a valid variable

enum class NodeKind : std::uint8_t { Eq, Neq, Pred, NegPred, And, Or, Exists, Forall };

bool is_atom(NodeKind kind) noexcept;
bool is_connective(NodeKind kind) noexcept;
bool is_quantifier(NodeKind kind) noexcept;

// An immutable first-order formula in negation normal form. Nodes are shared,
// so copies are cheap. Size and quantifier rank are cached per node.
//
// size = atoms + binary connectives + quantifiers; negation is free.
class Formula {
 public:
  static Formula eq(Var lhs, Var rhs);
  static Formula neq(Var lhs, Var rhs);
  static Formula pred(std::size_t predicate, Var v);
  static Formula neg_pred(std::size_t predicate, Var v);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula exists(Var v, Formula body);
  static Formula forall(Var v, Formula body);

  NodeKind kind() const noexcept;
  // Eq/Neq: the two variables. Pred/NegPred: var() is the argument.
  // Exists/Forall: var() is the bound variable.
  Var var() const noexcept;
  Var lhs() const noexcept { return var(); }
  Var rhs() const noexcept;
  std::size_t predicate() const noexcept;
  const Formula& left() const;   // And/Or
  const Formula& right() const;  // And/Or
  const Formula& body() const;   // Exists/Forall

  std::size_t size() const noexcept;
  std::size_t qrank() const noexcept;
  // Largest variable index mentioned anywhere in the formula.
  Var max_var() const noexcept;

  // Structural equality.
  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Total order on formulas used to canonicalise commutative children.
int compare(const Formula& a, const Formula& b);

std::size_t size(const Formula& f);
std::size_t qrank(const Formula& f);
std::size_t quantifier_count(const Formula& f);

// The NNF dual: swaps = and !=, P and !P, & and |, E and A.
Formula negate(const Formula& f);

std::vector<Var> free_variables(const Formula& f);
bool is_sentence(const Formula& f);

// Right-folded: big_and({a, b, c}) = a & (b & c). Requires a nonempty list.
Formula big_and(const std::vector<Formula>& parts);
Formula big_or(const std::vector<Formula>& parts);

enum class Quantifier : std::uint8_t { Exists, Forall };

struct QuantifiedVar {
  Quantifier kind;
  Var var;
  bool operator==(const QuantifiedVar&) const = default;
};

struct PrenexFormula {
  std::vector<QuantifiedVar> prefix;
  Formula matrix;

  Formula to_formula() const;
  std::size_t size() const { return prefix.size() + matrix.size(); }
};

// Pulls quantifiers outward, renaming every bound variable to the smallest
// index not yet used (free variables keep their names). Size is preserved.
PrenexFormula to_prenex(const Formula& f);

}  // namespace fodesc
