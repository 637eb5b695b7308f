#include "fodesc/oracle.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fodesc/error.hpp"
#include "fodesc/semantics.hpp"

namespace fodesc {

void validate(const EnumerationBudget& budget) {
  if (budget.max_quantifiers > budget.max_size)
    throw InputError("max_quantifiers exceeds max_size");
  if (budget.max_variables > budget.max_quantifiers)
    throw InputError("max_variables exceeds max_quantifiers");
}

namespace {

std::size_t quantifier_cap(const EnumerationBudget& b) {
  return std::min({b.max_quantifiers, b.max_variables, b.max_size == 0 ? 0 : b.max_size - 1});
}

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick(std::uint64_t by = 1) {
    count_ += by;
    if (count_ > budget_)
      throw BudgetExceeded("oracle search exceeded " + std::to_string(budget_) + " nodes");
  }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t budget_;
  std::uint64_t count_ = 0;
};

std::vector<Formula> atoms_over(std::size_t q, std::size_t arity) {
  std::vector<Formula> out;
  for (Var i = 1; i <= q; ++i) {
    for (Var j = i; j <= q; ++j) {
      out.push_back(Formula::eq(i, j));
      out.push_back(Formula::neq(i, j));
    }
  }
  for (Var i = 1; i <= q; ++i) {
    for (std::size_t p = 0; p < arity; ++p) {
      out.push_back(Formula::pred(p, i));
      out.push_back(Formula::neg_pred(p, i));
    }
  }
  return out;
}

std::uint32_t var_mask(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Eq:
    case NodeKind::Neq:
      return (1U << f.lhs()) | (1U << f.rhs());
    case NodeKind::Pred:
    case NodeKind::NegPred:
      return 1U << f.var();
    case NodeKind::And:
    case NodeKind::Or:
      return var_mask(f.left()) | var_mask(f.right());
    default:
      return var_mask(f.body());
  }
}

Formula with_prefix(std::size_t q, std::uint32_t prefix, Formula matrix) {
  // Bit (q - i) of prefix set: x_i is universal.
  for (std::size_t i = q; i >= 1; --i) {
    const bool universal = (prefix >> (q - i)) & 1U;
    matrix = universal ? Formula::forall(static_cast<Var>(i), matrix)
                       : Formula::exists(static_cast<Var>(i), matrix);
  }
  return matrix;
}

PrenexFormula prenex_of(std::size_t q, std::uint32_t prefix, const Formula& matrix) {
  PrenexFormula out{{}, matrix};
  for (std::size_t i = 1; i <= q; ++i) {
    const bool universal = (prefix >> (q - i)) & 1U;
    out.prefix.push_back({universal ? Quantifier::Forall : Quantifier::Exists, static_cast<Var>(i)});
  }
  return out;
}

// Syntactic matrices over x1..xq grouped by size, with their variable masks.
class MatrixPool {
 public:
  MatrixPool(std::size_t q, std::size_t arity, NodeCounter& counter)
      : q_(q), counter_(counter) {
    by_size_.resize(2);
    for (auto& a : atoms_over(q, arity)) add(1, a);
  }

  // Matrices of exactly size s that mention every prefix variable.
  std::vector<const Formula*> complete(std::size_t s) {
    grow(s);
    std::vector<const Formula*> out;
    const std::uint32_t all = ((1U << (q_ + 1)) - 1) & ~1U;
    for (std::size_t i = 0; i < by_size_[s].size(); ++i)
      if (masks_[s][i] == all) out.push_back(&by_size_[s][i]);
    return out;
  }

 private:
  void add(std::size_t s, Formula f) {
    if (by_size_.size() <= s) {
      by_size_.resize(s + 1);
      masks_.resize(s + 1);
    }
    if (masks_.size() <= s) masks_.resize(s + 1);
    masks_[s].push_back(var_mask(f));
    by_size_[s].push_back(std::move(f));
    counter_.tick();
  }

  void grow(std::size_t s) {
    if (masks_.size() < by_size_.size()) masks_.resize(by_size_.size());
    while (built_ < s) {
      const std::size_t next = built_ + 1;
      if (by_size_.size() <= next) {
        by_size_.resize(next + 1);
        masks_.resize(next + 1);
      }
      for (std::size_t s1 = 1; s1 + s1 + 1 <= next; ++s1) {
        const std::size_t s2 = next - 1 - s1;
        const auto n1 = by_size_[s1].size(), n2 = by_size_[s2].size();
        for (std::size_t i = 0; i < n1; ++i) {
          for (std::size_t j = (s1 == s2 ? i : 0); j < n2; ++j) {
            // Smaller child left: by size, then compare() within a size.
            const Formula* a = &by_size_[s1][i];
            const Formula* b = &by_size_[s2][j];
            if (s1 == s2 && compare(*a, *b) > 0) std::swap(a, b);
            add(next, Formula::conj(*a, *b));
            add(next, Formula::disj(*a, *b));
          }
        }
      }
      built_ = next;
    }
  }

  std::size_t q_;
  NodeCounter& counter_;
  std::vector<std::vector<Formula>> by_size_;
  std::vector<std::vector<std::uint32_t>> masks_;
  std::size_t built_ = 1;
};

// ---- truth-table mode -------------------------------------------------------

struct TreeNode {
  std::vector<std::uint8_t> block;  // block of x1..x_depth
  std::vector<std::uint8_t> types;  // type of each block
  std::vector<std::uint8_t> used;   // blocks per type
  struct Child {
    std::uint32_t node;
    int new_type;  // -1: joins an existing block
  };
  std::vector<Child> children;
  std::uint32_t leaf = 0;
};

// Every way of binding x1..xq up to automorphism, as a tree; caps[j] bounds
// the number of distinct points of type j that can ever be used.
class ConfigTree {
 public:
  ConfigTree(std::size_t q, std::size_t type_count, const std::vector<std::size_t>& caps)
      : q_(q) {
    nodes_.push_back({{}, {}, std::vector<std::uint8_t>(type_count, 0), {}, 0});
    std::vector<std::uint32_t> frontier{0};
    levels_.push_back(frontier);
    for (std::size_t depth = 0; depth < q; ++depth) {
      std::vector<std::uint32_t> next;
      for (auto id : frontier) {
        const TreeNode base = nodes_[id];
        std::vector<TreeNode::Child> kids;
        for (std::size_t b = 0; b < base.types.size(); ++b) {
          TreeNode child = base;
          child.children.clear();
          child.block.push_back(static_cast<std::uint8_t>(b));
          kids.push_back({push(std::move(child)), -1});
        }
        for (std::size_t j = 0; j < type_count; ++j) {
          if (base.used[j] >= caps[j]) continue;
          TreeNode child = base;
          child.children.clear();
          child.block.push_back(static_cast<std::uint8_t>(base.types.size()));
          child.types.push_back(static_cast<std::uint8_t>(j));
          ++child.used[j];
          kids.push_back({push(std::move(child)), static_cast<int>(j)});
        }
        for (auto& k : kids) next.push_back(k.node);
        nodes_[id].children = std::move(kids);
      }
      frontier = std::move(next);
      levels_.push_back(frontier);
    }
    for (auto id : frontier) {
      nodes_[id].leaf = static_cast<std::uint32_t>(leaves_.size());
      leaves_.push_back(id);
    }
  }

  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  const TreeNode& leaf(std::size_t i) const { return nodes_[leaves_[i]]; }
  const TreeNode& node(std::uint32_t id) const { return nodes_[id]; }
  const std::vector<std::uint32_t>& level(std::size_t depth) const { return levels_.at(depth); }
  std::size_t depth() const noexcept { return q_; }

 private:
  std::uint32_t push(TreeNode n) {
    nodes_.push_back(std::move(n));
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::size_t q_;
  std::vector<TreeNode> nodes_;
  std::vector<std::uint32_t> leaves_;
  std::vector<std::vector<std::uint32_t>> levels_;
};

using Table = std::vector<std::uint64_t>;

struct TableHash {
  std::size_t operator()(const Table& t) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : t) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

bool leaf_truth(const TreeNode& leaf, const Formula& atom) {
  const auto& blk = leaf.block;
  switch (atom.kind()) {
    case NodeKind::Eq:
      return blk[atom.lhs() - 1] == blk[atom.rhs() - 1];
    case NodeKind::Neq:
      return blk[atom.lhs() - 1] != blk[atom.rhs() - 1];
    case NodeKind::Pred:
      return (leaf.types[blk[atom.var() - 1]] >> atom.predicate()) & 1U;
    case NodeKind::NegPred:
      return !((leaf.types[blk[atom.var() - 1]] >> atom.predicate()) & 1U);
    default:
      return false;
  }
}

// Quantifier-free matrices over x1..xq as truth tables, smallest first.
class TablePool {
 public:
  TablePool(const ConfigTree& tree, std::size_t arity, NodeCounter& counter)
      : words_((tree.leaf_count() + 63) / 64), counter_(counter) {
    by_size_.resize(2);
    for (auto& atom : atoms_over(tree.depth(), arity)) {
      Table t(words_, 0);
      for (std::size_t i = 0; i < tree.leaf_count(); ++i)
        if (leaf_truth(tree.leaf(i), atom)) t[i / 64] |= std::uint64_t{1} << (i % 64);
      add(1, std::move(t), atom);
    }
  }

  const std::vector<std::pair<Table, Formula>>& exactly(std::size_t s) {
    while (built_ < s) build_next();
    return by_size_[s];
  }

 private:
  void add(std::size_t s, Table t, const Formula& f) {
    counter_.tick();
    if (!seen_.insert(t).second) return;
    if (by_size_.size() <= s) by_size_.resize(s + 1);
    by_size_[s].emplace_back(std::move(t), f);
  }

  void build_next() {
    const std::size_t next = built_ + 1;
    if (by_size_.size() <= next) by_size_.resize(next + 1);
    for (std::size_t s1 = 1; s1 + s1 + 1 <= next; ++s1) {
      const std::size_t s2 = next - 1 - s1;
      const auto n1 = by_size_[s1].size(), n2 = by_size_[s2].size();
      for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = (s1 == s2 ? i : 0); j < n2; ++j) {
          const auto& [ta, fa] = by_size_[s1][i];
          const auto& [tb, fb] = by_size_[s2][j];
          Table t_and(words_), t_or(words_);
          for (std::size_t w = 0; w < words_; ++w) {
            t_and[w] = ta[w] & tb[w];
            t_or[w] = ta[w] | tb[w];
          }
          // Copies: add() may reallocate by_size_[next], never [s1] or [s2].
          add(next, std::move(t_and), Formula::conj(fa, fb));
          add(next, std::move(t_or), Formula::disj(fa, fb));
        }
      }
    }
    built_ = next;
  }

  std::size_t words_;
  NodeCounter& counter_;
  std::vector<std::vector<std::pair<Table, Formula>>> by_size_;
  std::unordered_set<Table, TableHash> seen_;
  std::size_t built_ = 1;
};

bool eval_table(const ConfigTree& tree, std::uint32_t id, std::size_t depth, std::uint32_t prefix,
                const Table& table, const std::vector<std::size_t>& counts) {
  const TreeNode& node = tree.node(id);
  const std::size_t q = tree.depth();
  if (depth == q) return (table[node.leaf / 64] >> (node.leaf % 64)) & 1U;
  const bool universal = (prefix >> (q - depth - 1)) & 1U;
  for (const auto& child : node.children) {
    if (child.new_type >= 0 && node.used[child.new_type] >= counts[child.new_type]) continue;
    const bool v = eval_table(tree, child.node, depth + 1, prefix, table, counts);
    if (v != universal) return v;
  }
  return universal;
}

struct Targets {
  std::vector<TypeProfile> accept;
  std::vector<TypeProfile> reject;
};

OracleResult search_tables(std::size_t arity, const Targets& targets,
                           const EnumerationBudget& budget) {
  NodeCounter counter(budget.node_budget);
  OracleResult out;
  const std::size_t qcap = quantifier_cap(budget);
  const std::size_t t = std::size_t{1} << arity;

  std::vector<std::unique_ptr<ConfigTree>> trees(qcap + 1);
  std::vector<std::unique_ptr<TablePool>> pools(qcap + 1);
  auto pool = [&](std::size_t q) -> TablePool& {
    if (!pools[q]) {
      std::vector<std::size_t> caps(t, 0);
      for (const auto* side : {&targets.accept, &targets.reject})
        for (const auto& p : *side)
          for (std::size_t j = 0; j < t; ++j) caps[j] = std::max(caps[j], std::min(p.counts[j], q));
      trees[q] = std::make_unique<ConfigTree>(q, t, caps);
      pools[q] = std::make_unique<TablePool>(*trees[q], arity, counter);
    }
    return *pools[q];
  };

  try {
    for (std::size_t size = 1; size <= budget.max_size; ++size) {
      for (std::size_t q = 1; q <= std::min(qcap, size - 1); ++q) {
        const auto& tables = pool(q).exactly(size - q);
        const ConfigTree& tree = *trees[q];
        for (std::uint32_t prefix = 0; prefix < (1U << q); ++prefix) {
          for (const auto& [table, matrix] : tables) {
            counter.tick();
            auto holds = [&](const TypeProfile& p) {
              return eval_table(tree, 0, 0, prefix, table, p.counts);
            };
            if (!std::all_of(targets.accept.begin(), targets.accept.end(), holds)) continue;
            if (std::any_of(targets.reject.begin(), targets.reject.end(), holds)) continue;
            out.size = size;
            out.witness = with_prefix(q, prefix, matrix);
            out.nodes = counter.count();
            return out;
          }
        }
      }
      out.searched_up_to = size;
    }
  } catch (const BudgetExceeded&) {
    out.budget_exhausted = true;
  }
  out.nodes = counter.count();
  return out;
}

OracleResult search_syntactic(std::size_t arity, const Targets& targets,
                              const EnumerationBudget& budget) {
  const auto vocab = Vocabulary::with_arity(arity);
  std::vector<UnaryStructure> accept, reject;
  for (const auto& p : targets.accept) accept.push_back(representative(vocab, p));
  for (const auto& p : targets.reject) reject.push_back(representative(vocab, p));
  OracleResult out;
  std::size_t current = 0;
  const Assignment empty;
  const auto status = enumerate_sentences(arity, budget, [&](const PrenexFormula& pf) {
    const std::size_t size = pf.size();
    if (size > current) {
      out.searched_up_to = current;
      current = size;
    }
    const Formula f = pf.to_formula();
    auto holds = [&](const UnaryStructure& s) { return eval(s, empty, f); };
    if (!std::all_of(accept.begin(), accept.end(), holds)) return true;
    if (std::any_of(reject.begin(), reject.end(), holds)) return true;
    out.size = size;
    out.witness = f;
    return false;
  });
  if (status == EnumerationStatus::Complete) out.searched_up_to = budget.max_size;
  out.budget_exhausted = status == EnumerationStatus::BudgetExhausted;
  return out;
}

// ---- bounded quantifier rank ------------------------------------------------
//
// A sentence of quantifier rank <= d can be renamed, at no cost in size, so
// that a quantifier nested under j others binds x_{j+1}. Level j holds the
// formulas over x1..xj built that way; level 0 holds the sentences. A formula
// at level j is identified by its truth value at every (profile, binding of
// x1..xj realizable in it) slot, which makes deduplication exact.

class RankedSearch {
 public:
  RankedSearch(std::size_t arity, std::size_t d, const Targets& targets, bool dedup,
               NodeCounter& counter)
      : arity_(arity), d_(d), dedup_(dedup), counter_(counter) {
    const std::size_t t = std::size_t{1} << arity;
    for (const auto* side : {&targets.accept, &targets.reject})
      for (const auto& p : *side) profiles_.push_back(p);
    std::vector<std::size_t> caps(t, 0);
    for (const auto& p : profiles_)
      for (std::size_t j = 0; j < t; ++j) caps[j] = std::max(caps[j], std::min(p.counts[j], d));
    tree_ = std::make_unique<ConfigTree>(d, t, caps);

    slots_.resize(d + 1);
    std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
      for (std::uint32_t pi = 0; pi < profiles_.size(); ++pi) {
        for (auto id : tree_->level(j)) {
          if (!realizable(tree_->node(id), profiles_[pi])) continue;
          index[j][(std::uint64_t{pi} << 32) | id] = static_cast<std::uint32_t>(slots_[j].size());
          slots_[j].push_back({pi, id});
        }
      }
    }
    children_.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [pi, id] : slots_[j]) {
        std::vector<std::uint32_t> kids;
        for (const auto& child : tree_->node(id).children) {
          auto it = index[j + 1].find((std::uint64_t{pi} << 32) | child.node);
          if (it != index[j + 1].end()) kids.push_back(it->second);
        }
        children_[j].push_back(std::move(kids));
      }
    }
    target_.assign(words(0), 0);
    for (std::size_t i = 0; i < targets.accept.size(); ++i) set(target_, i);
    by_size_.assign(d + 1, std::vector<std::vector<std::pair<Table, Formula>>>(2));
    seen_.resize(d + 1);
  }

  const Table& target() const { return target_; }
  const std::vector<TypeProfile>& profiles() const { return profiles_; }

  // Sentences of exactly size s.
  const std::vector<std::pair<Table, Formula>>& sentences(std::size_t s) {
    while (built_ < s) build(built_ + 1);
    return by_size_[0][s];
  }

 private:
  static bool realizable(const TreeNode& node, const TypeProfile& p) {
    for (std::size_t j = 0; j < node.used.size(); ++j)
      if (node.used[j] > p.counts[j]) return false;
    return true;
  }
  std::size_t words(std::size_t level) const { return (slots_[level].size() + 63) / 64; }
  static void set(Table& t, std::size_t i) { t[i / 64] |= std::uint64_t{1} << (i % 64); }
  static bool get(const Table& t, std::size_t i) { return (t[i / 64] >> (i % 64)) & 1U; }

  void add(std::size_t level, std::size_t s, Table t, Formula f) {
    counter_.tick();
    if (dedup_ && !seen_[level].insert(t).second) return;
    by_size_[level][s].emplace_back(std::move(t), std::move(f));
  }

  void build(std::size_t s) {
    for (auto& level : by_size_) level.resize(s + 1);
    for (std::size_t j = 0; j <= d_; ++j) {
      const std::size_t w = words(j);
      if (s == 1 && j >= 1) {
        for (const auto& atom : atoms_over(j, arity_)) {
          Table t(w, 0);
          for (std::size_t i = 0; i < slots_[j].size(); ++i)
            if (leaf_truth(tree_->node(slots_[j][i].second), atom)) set(t, i);
          add(j, 1, std::move(t), atom);
        }
      }
      for (std::size_t s1 = 1; s1 + s1 + 1 <= s; ++s1) {
        const std::size_t s2 = s - 1 - s1;
        const auto n1 = by_size_[j][s1].size(), n2 = by_size_[j][s2].size();
        for (std::size_t a = 0; a < n1; ++a) {
          for (std::size_t b = (s1 == s2 ? a : 0); b < n2; ++b) {
            const auto& [ta, fa] = by_size_[j][s1][a];
            const auto& [tb, fb] = by_size_[j][s2][b];
            Table t_and(w), t_or(w);
            for (std::size_t k = 0; k < w; ++k) {
              t_and[k] = ta[k] & tb[k];
              t_or[k] = ta[k] | tb[k];
            }
            add(j, s, std::move(t_and), Formula::conj(fa, fb));
            add(j, s, std::move(t_or), Formula::disj(fa, fb));
          }
        }
      }
      if (j < d_ && s >= 2) {
        const Var x = static_cast<Var>(j + 1);
        const auto& inner = by_size_[j + 1][s - 1];
        for (std::size_t e = 0; e < inner.size(); ++e) {
          const auto& [tb, fb] = inner[e];
          Table t_ex(w, 0), t_all(w, 0);
          for (std::size_t i = 0; i < slots_[j].size(); ++i) {
            bool any = false, all = true;
            for (auto c : children_[j][i]) {
              const bool v = get(tb, c);
              any = any || v;
              all = all && v;
            }
            if (any) set(t_ex, i);
            if (all) set(t_all, i);
          }
          const Formula body = fb;
          add(j, s, std::move(t_ex), Formula::exists(x, body));
          add(j, s, std::move(t_all), Formula::forall(x, body));
        }
      }
    }
    built_ = s;
  }

  std::size_t arity_, d_;
  bool dedup_;
  NodeCounter& counter_;
  std::vector<TypeProfile> profiles_;
  std::unique_ptr<ConfigTree> tree_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> slots_;
  std::vector<std::vector<std::vector<std::uint32_t>>> children_;
  Table target_;
  std::vector<std::vector<std::vector<std::pair<Table, Formula>>>> by_size_;
  std::vector<std::unordered_set<Table, TableHash>> seen_;
  std::size_t built_ = 0;
};

OracleResult search_ranked(std::size_t arity, std::size_t d, const Targets& targets,
                           const EnumerationBudget& budget, OracleMode mode) {
  NodeCounter counter(budget.node_budget);
  OracleResult out;
  const bool literal = mode == OracleMode::Syntactic;
  try {
    RankedSearch search(arity, d, targets, !literal, counter);
    const auto vocab = Vocabulary::with_arity(arity);
    std::vector<UnaryStructure> reps;
    for (const auto& p : search.profiles()) reps.push_back(representative(vocab, p));
    const Assignment empty;
    for (std::size_t size = 1; size <= budget.max_size; ++size) {
      for (const auto& [table, f] : search.sentences(size)) {
        bool hit = false;
        if (literal) {
          hit = true;
          for (std::size_t i = 0; i < reps.size() && hit; ++i)
            hit = eval(reps[i], empty, f) == (i < targets.accept.size());
        } else {
          hit = table == search.target();
        }
        if (!hit) continue;
        out.size = size;
        out.witness = f;
        out.nodes = counter.count();
        return out;
      }
      out.searched_up_to = size;
    }
  } catch (const BudgetExceeded&) {
    out.budget_exhausted = true;
  }
  out.nodes = counter.count();
  return out;
}


}  // namespace

EnumerationStatus enumerate_sentences(std::size_t arity, const EnumerationBudget& budget,
                                      const std::function<bool(const PrenexFormula&)>& visit) {
  validate(budget);
  NodeCounter counter(budget.node_budget);
  const std::size_t qcap = quantifier_cap(budget);
  std::vector<std::unique_ptr<MatrixPool>> pools(qcap + 1);
  try {
      for (std::size_t size = 1; size <= budget.max_size; ++size) {
        for (std::size_t q = 1; q <= std::min(qcap, size - 1); ++q) {
          if (!pools[q]) pools[q] = std::make_unique<MatrixPool>(q, arity, counter);
          for (const Formula* m : pools[q]->complete(size - q)) {
            for (std::uint32_t prefix = 0; prefix < (1U << q); ++prefix) {
              counter.tick();
              if (!visit(prenex_of(q, prefix, *m))) return EnumerationStatus::Stopped;
            }
          }
        }
      }
  } catch (const BudgetExceeded&) {
    return EnumerationStatus::BudgetExhausted;
  }
  return EnumerationStatus::Complete;
}

OracleResult min_separating_sentence(std::size_t arity, const std::vector<TypeProfile>& accept,
                                     const std::vector<TypeProfile>& reject,
                                     const EnumerationBudget& budget, OracleMode mode) {
  validate(budget);
  const std::size_t t = std::size_t{1} << arity;
  for (const auto* side : {&accept, &reject})
    for (const auto& p : *side)
      if (p.counts.size() != t) throw InputError("profile does not match the vocabulary");
  Targets targets{accept, reject};
  if (mode == OracleMode::Table) return search_tables(arity, targets, budget);
  return search_syntactic(arity, targets, budget);
}

OracleResult exact_C(const TypeProfile& p, const EnumerationBudget& budget, OracleMode mode) {
  if (p.n() == 0) throw InputError("empty structure");
  std::vector<TypeProfile> reject;
  for_each_profile(p.type_count(), p.n(), [&](const TypeProfile& q) {
    if (q != p) reject.push_back(q);
    return true;
  });
  return min_separating_sentence(arity_for_type_count(p.type_count()), {p}, reject, budget, mode);
}

OracleResult exact_C(const UnaryStructure& s, const EnumerationBudget& budget, OracleMode mode) {
  return exact_C(profile_of(s), budget, mode);
}

OracleResult exact_Cd(const ClassTuple& c, const EnumerationBudget& budget, OracleMode mode) {
  validate(c);
  validate(budget);
  Targets targets;
  for_each_profile(c.m.size(), c.n, [&](const TypeProfile& q) {
    (class_tuple_of(q, c.d) == c ? targets.accept : targets.reject).push_back(q);
    return true;
  });
  return search_ranked(arity_for_type_count(c.m.size()), c.d, targets, budget, mode);
}

}  // namespace fodesc
