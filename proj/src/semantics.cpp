#include "fodesc/semantics.hpp"

#include <algorithm>
#include <string>

#include "fodesc/error.hpp"

namespace fodesc {

void Assignment::set(Var v, Element e) {
  if (v == 0) throw std::invalid_argument("variable indices start at 1");
  if (v >= values_.size()) values_.resize(v + 1, unbound);
  values_[v] = e;
}

void Assignment::unset(Var v) {
  if (v < values_.size()) values_[v] = unbound;
}

Element Assignment::at(Var v) const {
  if (!has(v)) throw EvaluationError("variable x" + std::to_string(v) + " is unassigned");
  return values_[v];
}

std::optional<Element> Assignment::get(Var v) const {
  if (!has(v)) return std::nullopt;
  return values_[v];
}

std::vector<Var> Assignment::domain() const {
  std::vector<Var> out;
  for (Var v = 0; v < values_.size(); ++v)
    if (values_[v] != unbound) out.push_back(v);
  return out;
}

bool Assignment::operator==(const Assignment& other) const {
  const auto n = std::max(values_.size(), other.values_.size());
  for (Var v = 0; v < n; ++v) {
    if (get(v) != other.get(v)) return false;
  }
  return true;
}

namespace {

constexpr Element unbound = ~Element{0};

void check_free(const Assignment& a, const Formula& f) {
  for (Var v : free_variables(f)) {
    if (!a.has(v)) throw EvaluationError("free variable x" + std::to_string(v) + " is unassigned");
  }
}

void check_predicates(std::size_t arity, const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Pred:
    case NodeKind::NegPred:
      if (f.predicate() >= arity)
        throw EvaluationError("predicate index " + std::to_string(f.predicate()) +
                              " outside the vocabulary");
      return;
    case NodeKind::And:
    case NodeKind::Or:
      check_predicates(arity, f.left());
      check_predicates(arity, f.right());
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
      check_predicates(arity, f.body());
      return;
    default:
      return;
  }
}

class Evaluator {
 public:
  Evaluator(const UnaryStructure& s, const Assignment& a, const Formula& f, bool reduced)
      : s_(s), reduced_(reduced), refcount_(s.n(), 0), by_type_(s.vocab().type_count()) {
    for (Element e = 0; e < s.n(); ++e) by_type_[s.type_of(e)].push_back(e);
    Var top = f.max_var();
    for (Var v : a.domain()) top = std::max(top, v);
    values_.assign(top + 1, unbound);
    for (Var v : a.domain()) {
      const Element e = a.at(v);
      if (e >= s.n()) throw EvaluationError("assigned element outside the domain");
      bind(v, e);
    }
  }

  bool run(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::Eq:
        return value(f.lhs()) == value(f.rhs());
      case NodeKind::Neq:
        return value(f.lhs()) != value(f.rhs());
      case NodeKind::Pred:
        return s_.holds(f.predicate(), value(f.var()));
      case NodeKind::NegPred:
        return !s_.holds(f.predicate(), value(f.var()));
      case NodeKind::And:
        return run(f.left()) && run(f.right());
      case NodeKind::Or:
        return run(f.left()) || run(f.right());
      case NodeKind::Exists:
      case NodeKind::Forall:
        return quantify(f.kind() == NodeKind::Exists, f.var(), f.body());
    }
    return false;
  }

 private:
  Element value(Var v) const {
    if (v >= values_.size() || values_[v] == unbound)
      throw EvaluationError("free variable x" + std::to_string(v) + " is unassigned");
    return values_[v];
  }

  void bind(Var v, Element e) {
    if (values_[v] != unbound) --refcount_[values_[v]];
    values_[v] = e;
    if (e != unbound) ++refcount_[e];
  }

  // Candidate elements for a quantifier: all of them, or one per orbit.
  std::vector<Element> candidates() const {
    std::vector<Element> out;
    if (!reduced_) {
      out.resize(s_.n());
      for (Element e = 0; e < s_.n(); ++e) out[e] = e;
      return out;
    }
    for (Element e : values_)
      if (e != unbound) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& elems : by_type_) {
      for (Element e : elems) {
        if (refcount_[e] == 0) {
          out.push_back(e);
          break;
        }
      }
    }
    return out;
  }

  bool quantify(bool existential, Var v, const Formula& body) {
    const Element saved = values_[v];
    bind(v, unbound);
    const auto cands = candidates();
    bool result = !existential;
    for (Element e : cands) {
      bind(v, e);
      if (run(body) == existential) {
        result = existential;
        break;
      }
    }
    bind(v, saved);
    return result;
  }

  const UnaryStructure& s_;
  bool reduced_;
  std::vector<Element> values_;
  std::vector<int> refcount_;
  std::vector<std::vector<Element>> by_type_;
};

}  // namespace

bool eval(const UnaryStructure& s, const Assignment& a, const Formula& f) {
  check_free(a, f);
  check_predicates(s.vocab().arity(), f);
  return Evaluator(s, a, f, true).run(f);
}

bool eval_exhaustive(const UnaryStructure& s, const Assignment& a, const Formula& f) {
  check_free(a, f);
  check_predicates(s.vocab().arity(), f);
  return Evaluator(s, a, f, false).run(f);
}

void require_sentence(const Formula& f) {
  auto free = free_variables(f);
  if (!free.empty())
    throw EvaluationError("not a sentence: x" + std::to_string(free.front()) + " is free");
}

bool satisfies_profile(const TypeProfile& p, const Formula& f) {
  require_sentence(f);
  return eval(representative(p), Assignment{}, f);
}

namespace {

template <typename Target>
bool holds_exactly_on(std::size_t type_count, std::size_t n, const Formula& f, Target target) {
  require_sentence(f);
  const auto vocab = Vocabulary::with_arity(arity_for_type_count(type_count));
  check_predicates(vocab.arity(), f);
  bool ok = true;
  const Assignment empty;
  for_each_profile(type_count, n, [&](const TypeProfile& q) {
    const bool sat = Evaluator(representative(vocab, q), empty, f, true).run(f);
    ok = sat == target(q);
    return ok;
  });
  return ok;
}

}  // namespace

bool defines(const TypeProfile& p, const Formula& f) {
  return holds_exactly_on(p.type_count(), p.n(), f, [&](const TypeProfile& q) { return q == p; });
}

bool defines(const UnaryStructure& s, const Formula& f) { return defines(profile_of(s), f); }

bool defines_class(const ClassTuple& c, const Formula& f) {
  validate(c);
  if (f.qrank() > c.d)
    throw InputError("quantifier rank " + std::to_string(f.qrank()) + " exceeds d = " +
                     std::to_string(c.d));
  return holds_exactly_on(c.m.size(), c.n, f,
                          [&](const TypeProfile& q) { return class_tuple_of(q, c.d) == c; });
}

}  // namespace fodesc
