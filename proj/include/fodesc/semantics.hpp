#pragma once

#include <optional>
#include <vector>

#include "fodesc/formula.hpp"
#include "fodesc/structures.hpp"

namespace fodesc {

// Partial map from variables to (0-based) domain elements.
class Assignment {
 public:
  Assignment() = default;

  void set(Var v, Element e);
  void unset(Var v);
  bool has(Var v) const noexcept { return v < values_.size() && values_[v] != unbound; }
  Element at(Var v) const;
  std::optional<Element> get(Var v) const;
  // Bound variables in increasing order.
  std::vector<Var> domain() const;

  bool operator==(const Assignment& other) const;

 private:
  static constexpr Element unbound = ~Element{0};
  std::vector<Element> values_;
};

// Truth of f in s under a. Quantifiers range over one representative per
// orbit of the automorphisms fixing the current assignment: every element
// already assigned, plus one unassigned element of each type. Elements of
// one type are interchangeable, so this is exact and avoids n^q blowup.
// Throws EvaluationError on a free variable missing from a.
bool eval(const UnaryStructure& s, const Assignment& a, const Formula& f);

// Textbook evaluation: every quantifier iterates over the whole domain.
// Kept as the reference implementation for tests.
bool eval_exhaustive(const UnaryStructure& s, const Assignment& a, const Formula& f);

// Throws EvaluationError unless f is a sentence.
void require_sentence(const Formula& f);

bool satisfies_profile(const TypeProfile& p, const Formula& f);

// f holds in exactly the size-n models isomorphic to s.
bool defines(const UnaryStructure& s, const Formula& f);
bool defines(const TypeProfile& p, const Formula& f);

// f holds in exactly the size-n models of the class; qrank(f) <= d required.
bool defines_class(const ClassTuple& c, const Formula& f);

}  // namespace fodesc
