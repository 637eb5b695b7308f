#include "fodesc/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace fodesc {

struct Formula::Node {
  NodeKind kind;
  std::uint32_t a = 0;  // first variable, predicate index, or bound variable
  std::uint32_t b = 0;  // second variable / argument of a predicate
  std::vector<Formula> children;
  std::size_t size = 0;
  std::size_t qrank = 0;
  Var max_var = 0;
};

bool is_atom(NodeKind kind) noexcept {
  return kind == NodeKind::Eq || kind == NodeKind::Neq || kind == NodeKind::Pred ||
         kind == NodeKind::NegPred;
}

bool is_connective(NodeKind kind) noexcept {
  return kind == NodeKind::And || kind == NodeKind::Or;
}

bool is_quantifier(NodeKind kind) noexcept {
  return kind == NodeKind::Exists || kind == NodeKind::Forall;
}

namespace {

void check_var(Var v) {
  if (v == 0) throw std::invalid_argument("variable indices start at 1");
}

}  // namespace

Formula Formula::eq(Var lhs, Var rhs) {
  check_var(lhs);
  check_var(rhs);
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Eq, lhs, rhs, {}, 1, 0, std::max(lhs, rhs)}));
}

Formula Formula::neq(Var lhs, Var rhs) {
  check_var(lhs);
  check_var(rhs);
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Neq, lhs, rhs, {}, 1, 0, std::max(lhs, rhs)}));
}

Formula Formula::pred(std::size_t predicate, Var v) {
  check_var(v);
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Pred, static_cast<std::uint32_t>(predicate), v, {}, 1, 0, v}));
}

Formula Formula::neg_pred(std::size_t predicate, Var v) {
  check_var(v);
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::NegPred, static_cast<std::uint32_t>(predicate), v, {}, 1, 0, v}));
}

Formula Formula::conj(Formula left, Formula right) {
  const auto size = left.size() + right.size() + 1;
  const auto rank = std::max(left.qrank(), right.qrank());
  const auto mv = std::max(left.max_var(), right.max_var());
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::And, 0, 0, {std::move(left), std::move(right)}, size, rank, mv}));
}

Formula Formula::disj(Formula left, Formula right) {
  const auto size = left.size() + right.size() + 1;
  const auto rank = std::max(left.qrank(), right.qrank());
  const auto mv = std::max(left.max_var(), right.max_var());
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Or, 0, 0, {std::move(left), std::move(right)}, size, rank, mv}));
}

Formula Formula::exists(Var v, Formula body) {
  check_var(v);
  const auto size = body.size() + 1;
  const auto rank = body.qrank() + 1;
  const auto mv = std::max(v, body.max_var());
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Exists, v, 0, {std::move(body)}, size, rank, mv}));
}

Formula Formula::forall(Var v, Formula body) {
  check_var(v);
  const auto size = body.size() + 1;
  const auto rank = body.qrank() + 1;
  const auto mv = std::max(v, body.max_var());
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Forall, v, 0, {std::move(body)}, size, rank, mv}));
}

NodeKind Formula::kind() const noexcept { return node_->kind; }

Var Formula::var() const noexcept {
  switch (node_->kind) {
    case NodeKind::Pred:
    case NodeKind::NegPred:
      return node_->b;
    default:
      return node_->a;
  }
}

Var Formula::rhs() const noexcept { return node_->b; }
std::size_t Formula::predicate() const noexcept { return node_->a; }

const Formula& Formula::left() const {
  if (!is_connective(kind())) throw std::logic_error("left() on a non-connective");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_connective(kind())) throw std::logic_error("right() on a non-connective");
  return node_->children[1];
}

const Formula& Formula::body() const {
  if (!is_quantifier(kind())) throw std::logic_error("body() on a non-quantifier");
  return node_->children[0];
}

std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::qrank() const noexcept { return node_->qrank; }
Var Formula::max_var() const noexcept { return node_->max_var; }

bool Formula::operator==(const Formula& other) const { return compare(*this, other) == 0; }

int compare(const Formula& a, const Formula& b) {
  if (&a == &b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  const auto kind = a.kind();
  auto cmp = [](auto x, auto y) { return x < y ? -1 : (y < x ? 1 : 0); };
  switch (kind) {
    case NodeKind::Eq:
    case NodeKind::Neq:
      if (int c = cmp(a.lhs(), b.lhs())) return c;
      return cmp(a.rhs(), b.rhs());
    case NodeKind::Pred:
    case NodeKind::NegPred:
      if (int c = cmp(a.predicate(), b.predicate())) return c;
      return cmp(a.var(), b.var());
    case NodeKind::And:
    case NodeKind::Or:
      if (int c = cmp(a.size(), b.size())) return c;
      if (int c = compare(a.left(), b.left())) return c;
      return compare(a.right(), b.right());
    case NodeKind::Exists:
    case NodeKind::Forall:
      if (int c = cmp(a.var(), b.var())) return c;
      return compare(a.body(), b.body());
  }
  return 0;
}

std::size_t size(const Formula& f) { return f.size(); }
std::size_t qrank(const Formula& f) { return f.qrank(); }

std::size_t quantifier_count(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::And:
    case NodeKind::Or:
      return quantifier_count(f.left()) + quantifier_count(f.right());
    case NodeKind::Exists:
    case NodeKind::Forall:
      return 1 + quantifier_count(f.body());
    default:
      return 0;
  }
}

Formula negate(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Eq:
      return Formula::neq(f.lhs(), f.rhs());
    case NodeKind::Neq:
      return Formula::eq(f.lhs(), f.rhs());
    case NodeKind::Pred:
      return Formula::neg_pred(f.predicate(), f.var());
    case NodeKind::NegPred:
      return Formula::pred(f.predicate(), f.var());
    case NodeKind::And:
      return Formula::disj(negate(f.left()), negate(f.right()));
    case NodeKind::Or:
      return Formula::conj(negate(f.left()), negate(f.right()));
    case NodeKind::Exists:
      return Formula::forall(f.var(), negate(f.body()));
    case NodeKind::Forall:
      return Formula::exists(f.var(), negate(f.body()));
  }
  throw std::logic_error("unknown node kind");
}

namespace {

void collect_free(const Formula& f, std::vector<int>& bound_depth, std::vector<Var>& out) {
  auto note = [&](Var v) {
    if (v >= bound_depth.size() || bound_depth[v] == 0) out.push_back(v);
  };
  switch (f.kind()) {
    case NodeKind::Eq:
    case NodeKind::Neq:
      note(f.lhs());
      note(f.rhs());
      return;
    case NodeKind::Pred:
    case NodeKind::NegPred:
      note(f.var());
      return;
    case NodeKind::And:
    case NodeKind::Or:
      collect_free(f.left(), bound_depth, out);
      collect_free(f.right(), bound_depth, out);
      return;
    case NodeKind::Exists:
    case NodeKind::Forall: {
      const Var v = f.var();
      if (v >= bound_depth.size()) bound_depth.resize(v + 1, 0);
      ++bound_depth[v];
      collect_free(f.body(), bound_depth, out);
      --bound_depth[v];
      return;
    }
  }
}

}  // namespace

std::vector<Var> free_variables(const Formula& f) {
  std::vector<int> bound_depth(f.max_var() + 1, 0);
  std::vector<Var> out;
  collect_free(f, bound_depth, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

Formula big_and(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("big_and of an empty list");
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = Formula::conj(*it, acc);
  return acc;
}

Formula big_or(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("big_or of an empty list");
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = Formula::disj(*it, acc);
  return acc;
}

Formula PrenexFormula::to_formula() const {
  Formula f = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    f = it->kind == Quantifier::Exists ? Formula::exists(it->var, f) : Formula::forall(it->var, f);
  }
  return f;
}

namespace {

class PrenexBuilder {
 public:
  explicit PrenexBuilder(const Formula& f) : env_(f.max_var() + 1, 0) {
    for (Var v : free_variables(f)) mark_used(v);
  }

  PrenexFormula run(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::Eq:
        return {{}, Formula::eq(rename(f.lhs()), rename(f.rhs()))};
      case NodeKind::Neq:
        return {{}, Formula::neq(rename(f.lhs()), rename(f.rhs()))};
      case NodeKind::Pred:
        return {{}, Formula::pred(f.predicate(), rename(f.var()))};
      case NodeKind::NegPred:
        return {{}, Formula::neg_pred(f.predicate(), rename(f.var()))};
      case NodeKind::And:
      case NodeKind::Or: {
        auto left = run(f.left());
        auto right = run(f.right());
        left.prefix.insert(left.prefix.end(), right.prefix.begin(), right.prefix.end());
        left.matrix = f.kind() == NodeKind::And ? Formula::conj(left.matrix, right.matrix)
                                                : Formula::disj(left.matrix, right.matrix);
        return left;
      }
      case NodeKind::Exists:
      case NodeKind::Forall: {
        const Var original = f.var();
        const Var renamed = fresh();
        const Var saved = env_[original];
        env_[original] = renamed;
        auto inner = run(f.body());
        env_[original] = saved;
        const auto kind = f.kind() == NodeKind::Exists ? Quantifier::Exists : Quantifier::Forall;
        inner.prefix.insert(inner.prefix.begin(), QuantifiedVar{kind, renamed});
        return inner;
      }
    }
    throw std::logic_error("unknown node kind");
  }

 private:
  Var rename(Var v) const { return v < env_.size() && env_[v] != 0 ? env_[v] : v; }

  void mark_used(Var v) {
    if (v >= used_.size()) used_.resize(v + 1, false);
    used_[v] = true;
  }

  Var fresh() {
    for (Var v = 1;; ++v) {
      if (v >= used_.size() || !used_[v]) {
        mark_used(v);
        return v;
      }
    }
  }

  std::vector<Var> env_;
  std::vector<bool> used_;
};

}  // namespace

PrenexFormula to_prenex(const Formula& f) { return PrenexBuilder(f).run(f); }

}  // namespace fodesc
