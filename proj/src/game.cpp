#include "fodesc/game.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "fodesc/error.hpp"
#include "fodesc/synthesis.hpp"

namespace fodesc {

ModelSet model_set(const std::vector<UnaryStructure>& structures) {
  ModelSet out;
  for (const auto& s : structures) out.push_back({s, Assignment{}});
  return out;
}

ModelSet model_set(const std::vector<TypeProfile>& profiles) {
  ModelSet out;
  for (const auto& p : profiles) out.push_back({representative(p), Assignment{}});
  return out;
}

namespace {

using Ids = std::vector<std::uint32_t>;
using Mask = std::uint64_t;

struct Atom {
  NodeKind kind;
  std::uint32_t a;  // variable, or predicate for Pred/NegPred
  std::uint32_t b;  // variable
};

// Atoms over x1..x_v in a fixed order; bit i of a mask is atom i.
std::vector<Atom> atoms_for(std::size_t v, std::size_t arity) {
  std::vector<Atom> out;
  for (std::uint32_t i = 1; i <= v; ++i) {
    for (std::uint32_t j = i; j <= v; ++j) {
      out.push_back({NodeKind::Eq, i, j});
      out.push_back({NodeKind::Neq, i, j});
    }
  }
  for (std::uint32_t i = 1; i <= v; ++i) {
    for (std::uint32_t p = 0; p < arity; ++p) {
      out.push_back({NodeKind::Pred, p, i});
      out.push_back({NodeKind::NegPred, p, i});
    }
  }
  if (out.size() > 64)
    throw InputError("too many variables for the game engine (" + std::to_string(v) + ")");
  return out;
}

Formula atom_formula(const Atom& at) {
  switch (at.kind) {
    case NodeKind::Eq:
      return Formula::eq(at.a, at.b);
    case NodeKind::Neq:
      return Formula::neq(at.a, at.b);
    case NodeKind::Pred:
      return Formula::pred(at.a, at.b);
    default:
      return Formula::neg_pred(at.a, at.b);
  }
}

// Variable assignment up to automorphism: block[i] is the block of x_{i+1}
// (restricted growth string), types[b] the type of block b.
struct Config {
  std::vector<std::uint8_t> block;
  std::vector<std::uint8_t> types;
  auto operator<=>(const Config&) const = default;
};

Mask config_mask(const Config& c, const std::vector<Atom>& atoms) {
  Mask m = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& at = atoms[i];
    bool truth = false;
    switch (at.kind) {
      case NodeKind::Eq:
        truth = c.block[at.a - 1] == c.block[at.b - 1];
        break;
      case NodeKind::Neq:
        truth = c.block[at.a - 1] != c.block[at.b - 1];
        break;
      case NodeKind::Pred:
        truth = ((c.types[c.block[at.b - 1]] >> at.a) & 1U) != 0;
        break;
      default:
        truth = ((c.types[c.block[at.b - 1]] >> at.a) & 1U) == 0;
        break;
    }
    if (truth) m |= Mask{1} << i;
  }
  return m;
}

Mask all_bits(std::size_t count) { return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1; }

Config config_of(const ModelPair& pair, std::size_t v) {
  const auto bound = pair.assignment.domain();
  if (bound.size() != v || (v > 0 && bound.back() != v))
    throw InputError("assignments must bind exactly x1..x" + std::to_string(v));
  Config c;
  std::map<Element, std::uint8_t> seen;
  for (Var x = 1; x <= v; ++x) {
    const Element e = pair.assignment.at(x);
    if (e >= pair.structure.n()) throw InputError("assigned element outside the domain");
    auto [it, fresh] = seen.emplace(e, static_cast<std::uint8_t>(c.types.size()));
    if (fresh) c.types.push_back(static_cast<std::uint8_t>(pair.structure.type_of(e)));
    c.block.push_back(it->second);
  }
  return c;
}

Ids sorted_unique(Ids v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool intersects(const Ids& a, const Ids& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

constexpr std::size_t never = std::numeric_limits<std::size_t>::max();

// Known results for one (A, B) across resources: S loses for r <= lose_up_to
// and wins with `formula` for r >= win_at. Valid by monotonicity in r.
struct MemoEntry {
  std::size_t lose_up_to = 0;
  std::size_t win_at = never;
  std::optional<Formula> formula;
};

class Solver {
 public:
  Solver(std::size_t arity, const GameOptions& options) : arity_(arity), options_(options) {}

  // Interns (profile, config) and returns its id.
  std::uint32_t pair_id(const TypeProfile& profile, const Config& c) {
    auto pit = profile_ids_.find(profile.counts);
    std::uint32_t pid;
    if (pit == profile_ids_.end()) {
      pid = static_cast<std::uint32_t>(profiles_.size());
      profiles_.push_back(profile.counts);
      profile_ids_.emplace(profile.counts, pid);
    } else {
      pid = pit->second;
    }
    auto key = std::make_pair(pid, c);
    auto it = pair_ids_.find(key);
    if (it != pair_ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(pairs_.size());
    pairs_.push_back({pid, c, config_id(c), {}, false});
    pair_ids_.emplace(std::move(key), id);
    return id;
  }

  std::uint32_t pair_id(const ModelPair& pair, std::size_t v) {
    if (pair.structure.vocab().arity() != arity_) throw InputError("mixed vocabularies in a game");
    return pair_id(profile_of(pair.structure), config_of(pair, v));
  }

  std::optional<Formula> solve(std::size_t r, std::size_t q, std::size_t v, const Ids& A,
                               const Ids& B) {
    tick();
    if (r == 0 || intersects(A, B)) return std::nullopt;
    if (q == 0) return atomic(r, v, configs(A), configs(B));

    Ids key{static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(v),
            static_cast<std::uint32_t>(A.size())};
    key.insert(key.end(), A.begin(), A.end());
    key.insert(key.end(), B.begin(), B.end());
    auto& entry = quant_memo_[key];
    if (r >= entry.win_at) return entry.formula;
    if (r <= entry.lose_up_to) return std::nullopt;

    std::optional<Formula> result = atomic(r, v, configs(A), configs(B));
    if (!result && r >= 2) result = quantify(r, q, v, A, B, true);
    if (!result && r >= 2) result = quantify(r, q, v, A, B, false);

    auto& e = quant_memo_[key];  // the map may have grown
    if (result) {
      if (r < e.win_at) {
        e.win_at = r;
        e.formula = result;
      }
    } else {
      e.lose_up_to = std::max(e.lose_up_to, r);
    }
    return result;
  }

  std::optional<Formula> atomic(std::size_t r, std::size_t v, const Ids& A, const Ids& B) {
    tick();
    if (r == 0 || v == 0 || intersects(A, B)) return std::nullopt;
    const auto& atoms = atoms_of(v);
    const Mask valid = all_bits(atoms.size());
    const auto& masks = config_masks_;

    Mask all_a = valid, any_b = 0;
    for (auto a : A) all_a &= masks[a];
    for (auto b : B) any_b |= masks[b];
    if (Mask sep = all_a & ~any_b & valid) return atom_formula(atoms[lowest(sep)]);
    if (r < 3) return std::nullopt;
    for (auto a : A)
      for (auto b : B)
        if ((masks[a] & ~masks[b]) == 0) return std::nullopt;

    Ids key{static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(A.size())};
    key.insert(key.end(), A.begin(), A.end());
    key.insert(key.end(), B.begin(), B.end());
    {
      auto& entry = atomic_memo_[key];
      if (r >= entry.win_at) return entry.formula;
      if (r <= entry.lose_up_to) return std::nullopt;
    }

    std::optional<Formula> result = split(r, v, A, B, all_a, true);
    if (!result) result = split(r, v, A, B, ~any_b, false);

    auto& e = atomic_memo_[key];
    if (result) {
      if (r < e.win_at) {
        e.win_at = r;
        e.formula = result;
      }
    } else {
      e.lose_up_to = std::max(e.lose_up_to, r);
    }
    return result;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct PairData {
    std::uint32_t profile;
    Config config;
    std::uint32_t config_id;
    Ids extensions;
    bool expanded;
  };

  void tick() {
    if (++nodes_ > options_.node_budget)
      throw BudgetExceeded("game search exceeded " + std::to_string(options_.node_budget) +
                           " positions");
  }

  static std::size_t lowest(Mask m) {
    std::size_t i = 0;
    while (((m >> i) & 1U) == 0) ++i;
    return i;
  }

  const std::vector<Atom>& atoms_of(std::size_t v) {
    while (atoms_.size() <= v) atoms_.push_back(atoms_for(atoms_.size(), arity_));
    return atoms_[v];
  }

  std::uint32_t config_id(const Config& c) {
    auto it = config_ids_.find(c);
    if (it != config_ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(config_masks_.size());
    config_masks_.push_back(config_mask(c, atoms_of(c.block.size())));
    config_ids_.emplace(c, id);
    return id;
  }

  Ids configs(const Ids& pairs) {
    Ids out;
    out.reserve(pairs.size());
    for (auto p : pairs) out.push_back(pairs_[p].config_id);
    return sorted_unique(std::move(out));
  }

  // All ways to bind the next variable, one per orbit.
  const Ids& extensions(std::uint32_t id) {
    if (!pairs_[id].expanded) {
      const PairData base = pairs_[id];
      const auto& counts = profiles_[base.profile];
      Ids out;
      const auto nblocks = base.config.types.size();
      for (std::size_t b = 0; b < nblocks; ++b) {
        Config c = base.config;
        c.block.push_back(static_cast<std::uint8_t>(b));
        out.push_back(pair_id(TypeProfile{counts}, c));
      }
      for (std::size_t j = 0; j < counts.size(); ++j) {
        const auto used = static_cast<std::size_t>(
            std::count(base.config.types.begin(), base.config.types.end(), j));
        if (used >= counts[j]) continue;
        Config c = base.config;
        c.block.push_back(static_cast<std::uint8_t>(nblocks));
        c.types.push_back(static_cast<std::uint8_t>(j));
        out.push_back(pair_id(TypeProfile{counts}, c));
      }
      pairs_[id].extensions = std::move(out);
      pairs_[id].expanded = true;
    }
    return pairs_[id].extensions;
  }

  // Exists-move (existential) or forall-move. The chooser side picks one
  // extension per pair, the other side keeps every extension.
  std::optional<Formula> quantify(std::size_t r, std::size_t q, std::size_t v, const Ids& A,
                                  const Ids& B, bool existential) {
    const Ids& chooser = existential ? A : B;
    const Ids& spreader = existential ? B : A;
    Ids spread;
    for (auto p : spreader) {
      const auto& ext = extensions(p);
      spread.insert(spread.end(), ext.begin(), ext.end());
    }
    spread = sorted_unique(std::move(spread));

    // Choices that collide with the other side lose at once.
    std::vector<Ids> options;
    for (auto p : chooser) {
      Ids opts;
      for (auto e : extensions(p))
        if (!std::binary_search(spread.begin(), spread.end(), e)) opts.push_back(e);
      if (opts.empty()) return std::nullopt;
      options.push_back(std::move(opts));
    }

    const Var x = static_cast<Var>(v + 1);
    std::set<Ids> tried;
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
      Ids chosen;
      for (std::size_t i = 0; i < options.size(); ++i) chosen.push_back(options[i][pick[i]]);
      chosen = sorted_unique(std::move(chosen));
      if (tried.insert(chosen).second) {
        auto sub = existential ? solve(r - 1, q - 1, v + 1, chosen, spread)
                               : solve(r - 1, q - 1, v + 1, spread, chosen);
        if (sub) return existential ? Formula::exists(x, *sub) : Formula::forall(x, *sub);
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    return std::nullopt;
  }

  // And-move (conjunction: split B) or or-move (split A). `witness` holds
  // the atoms usable as a whole one-atom conjunct (true on all of A) resp.
  // disjunct (false on all of B).
  std::optional<Formula> split(std::size_t r, std::size_t v, const Ids& A, const Ids& B,
                               Mask witness, bool conjunction) {
    const auto& atoms = atoms_of(v);
    const auto& masks = config_masks_;
    const Ids& side = conjunction ? B : A;
    auto build = [&](Formula left, Formula right) {
      return conjunction ? Formula::conj(std::move(left), std::move(right))
                         : Formula::disj(std::move(left), std::move(right));
    };
    auto sub = [&](std::size_t rr, const Ids& part) {
      return conjunction ? atomic(rr, v, A, part) : atomic(rr, v, part, B);
    };

    // Small conjunct: a single atom, covering the maximal part of the side it can.
    // Resources 1 and 2 both buy exactly one atom, so r1 = 1 suffices.
    {
      std::set<Ids> seen;
      Mask w = witness & all_bits(atoms.size());
      while (w) {
        const auto i = lowest(w);
        w &= w - 1;
        Ids rest;
        for (auto c : side) {
          const bool truth = (masks[c] >> i) & 1U;
          // Conjunction: atom handles b where it is false. Disjunction: a where true.
          if (conjunction ? truth : !truth) rest.push_back(c);
        }
        if (rest.size() == side.size() || !seen.insert(rest).second) continue;
        if (auto f = sub(r - 2, rest)) return build(atom_formula(atoms[i]), *f);
      }
    }
    // Both parts need r_i >= 3: enumerate proper splits of the side.
    if (r < 7 || side.size() < 2) return std::nullopt;
    if (side.size() > 24) throw BudgetExceeded("split enumeration too large");
    const std::uint64_t full = (std::uint64_t{1} << side.size()) - 1;
    for (std::size_t r1 = 3; r1 + 1 + 3 <= r && r1 <= r - 1 - r1; ++r1) {
      const std::size_t r2 = r - 1 - r1;
      // The part containing the first element is given to the r2 side when r1 < r2;
      // with r1 == r2 the order does not matter either.
      for (std::uint64_t sub_mask = 1; sub_mask < full; ++sub_mask) {
        Ids part1, part2;
        for (std::size_t i = 0; i < side.size(); ++i)
          ((sub_mask >> i) & 1U ? part1 : part2).push_back(side[i]);
        auto f1 = sub(r1, part1);
        if (!f1) continue;
        auto f2 = sub(r2, part2);
        if (f2) return build(*f1, *f2);
      }
    }
    return std::nullopt;
  }

  std::size_t arity_;
  GameOptions options_;
  std::uint64_t nodes_ = 0;

  std::vector<std::vector<std::size_t>> profiles_;
  std::map<std::vector<std::size_t>, std::uint32_t> profile_ids_;
  std::vector<PairData> pairs_;
  std::map<std::pair<std::uint32_t, Config>, std::uint32_t> pair_ids_;
  std::map<Config, std::uint32_t> config_ids_;
  std::vector<Mask> config_masks_;
  std::vector<std::vector<Atom>> atoms_;
  std::map<Ids, MemoEntry> quant_memo_;
  std::map<Ids, MemoEntry> atomic_memo_;
};

std::size_t common_arity(const ModelSet& A, const ModelSet& B) {
  if (!A.empty()) return A.front().structure.vocab().arity();
  if (!B.empty()) return B.front().structure.vocab().arity();
  return 1;
}

Ids intern(Solver& solver, const ModelSet& set, std::size_t v) {
  Ids out;
  for (const auto& pair : set) out.push_back(solver.pair_id(pair, v));
  return sorted_unique(std::move(out));
}

}  // namespace

GameResult decide(const GamePosition& pos, const GameOptions& options) {
  if (pos.next_var == 0) throw InputError("next_var starts at 1");
  const std::size_t v = pos.next_var - 1;
  Solver solver(common_arity(pos.A, pos.B), options);
  const Ids A = intern(solver, pos.A, v);
  const Ids B = intern(solver, pos.B, v);
  const std::size_t q = pos.phase == Phase::Atomic ? 0 : pos.q;
  GameResult result;
  result.strategy = solver.solve(pos.r, q, v, A, B);
  result.winner = result.strategy ? Winner::S : Winner::D;
  result.nodes = solver.nodes();
  return result;
}

SeparationResult min_separating_size(const ModelSet& A, const ModelSet& B, std::size_t q_max,
                                     std::size_t r_max, const GameOptions& options) {
  Solver solver(common_arity(A, B), options);
  const Ids a = intern(solver, A, 0);
  const Ids b = intern(solver, B, 0);
  SeparationResult out;
  for (std::size_t r = 1; r <= r_max; ++r) {
    for (std::size_t q = 0; q <= std::min(q_max, r - 1); ++q) {
      if (auto f = solver.solve(r, q, 0, a, b)) {
        out.size = r;
        out.formula = f;
        out.quantifiers = quantifier_count(*f);
        out.nodes = solver.nodes();
        return out;
      }
    }
  }
  out.nodes = solver.nodes();
  return out;
}

Witness lower_bound_witness(const TypeProfile& p) {
  const auto plan = plan_full(p);
  const auto l = plan.counts.size();
  Witness w;
  if (l < 2) return w;
  TypeProfile other = p;
  --other.counts[plan.realized_types[l - 2]];
  ++other.counts[plan.realized_types[l - 1]];
  w.other = other;
  w.bound = std::max<std::int64_t>(0, 3 * static_cast<std::int64_t>(plan.counts[l - 2]) - 3);
  return w;
}

Witness lower_bound_witness(const UnaryStructure& s) { return lower_bound_witness(profile_of(s)); }

std::int64_t lower_bound(const TypeProfile& p) { return lower_bound_witness(p).bound; }

ClassWitness lower_bound_witness_d(const ClassTuple& c) {
  validate(c);
  // The largest entry, last among ties by index.
  std::size_t top = 0;
  for (std::size_t j = 0; j < c.m.size(); ++j)
    if (c.m[j] >= c.m[top]) top = j;
  TypeProfile member{c.m};
  member.counts[top] += c.n - c.sum();
  ClassWitness w{member, std::nullopt, 0};
  auto inner = lower_bound_witness(member);
  w.other = inner.other;
  std::vector<std::size_t> desc = c.m;
  std::sort(desc.begin(), desc.end(), std::greater<>());
  const auto second = static_cast<std::int64_t>(desc.size() > 1 ? desc[1] : 0);
  w.bound = std::max<std::int64_t>(0, 3 * second - 3);
  return w;
}

std::int64_t lower_bound_d(const ClassTuple& c) { return lower_bound_witness_d(c).bound; }

std::optional<std::vector<Formula>> min_separating_atoms(const ModelSet& A, const ModelSet& B,
                                                         std::size_t max_atoms) {
  std::size_t v = 0;
  if (!A.empty()) v = A.front().assignment.domain().size();
  else if (!B.empty()) v = B.front().assignment.domain().size();
  const auto arity = common_arity(A, B);
  const auto atoms = atoms_for(v, arity);
  std::vector<Mask> ma, mb;
  for (const auto& p : A) ma.push_back(config_mask(config_of(p, v), atoms));
  for (const auto& p : B) mb.push_back(config_mask(config_of(p, v), atoms));
  // need[i]: atoms that separate pair i.
  std::vector<Mask> need;
  for (auto a : ma)
    for (auto b : mb) need.push_back(a & ~b);
  for (auto m : need)
    if (m == 0) return std::nullopt;

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t k) {
    if (chosen.size() == k) {
      Mask set = 0;
      for (auto i : chosen) set |= Mask{1} << i;
      return std::all_of(need.begin(), need.end(), [&](Mask m) { return (m & set) != 0; });
    }
    for (std::size_t i = start; i < atoms.size(); ++i) {
      chosen.push_back(i);
      if (search(i + 1, k)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t k = 0; k <= std::min(max_atoms, atoms.size()); ++k) {
    chosen.clear();
    if (search(0, k)) {
      std::vector<Formula> out;
      for (auto i : chosen) out.push_back(atom_formula(atoms[i]));
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace fodesc
