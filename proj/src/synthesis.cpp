#include "fodesc/synthesis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fodesc/error.hpp"

namespace fodesc {

const char* variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::Phi:
      return "phi";
    case Variant::Psi:
      return "psi";
    case Variant::PhiD:
      return "phi_d";
    case Variant::PsiD:
      return "psi_d";
  }
  return "?";
}

namespace {

std::vector<TypeIndex> by_count(const std::vector<std::size_t>& counts,
                                const std::vector<TypeIndex>& pool) {
  std::vector<TypeIndex> order = pool;
  std::stable_sort(order.begin(), order.end(),
                   [&](TypeIndex a, TypeIndex b) { return counts[a] < counts[b]; });
  return order;
}

void check_counts(const std::vector<TypeIndex>& types, const std::vector<std::size_t>& m) {
  if (m.empty()) throw InputError("count sequence is empty");
  if (m.size() > types.size()) throw InputError("more counts than types");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) throw InputError("counts must be positive");
    if (i > 0 && m[i] < m[i - 1]) throw InputError("counts must be weakly increasing");
  }
}

// pi_j(x1) for every j >= from, as one disjunction (nullopt if none).
std::optional<Formula> others(std::size_t arity, const std::vector<TypeIndex>& types,
                              std::size_t from) {
  std::vector<Formula> parts;
  for (std::size_t j = from; j < types.size(); ++j) parts.push_back(type_formula(arity, types[j], 1));
  if (parts.empty()) return std::nullopt;
  return big_or(parts);
}

Formula or_opt(const std::optional<Formula>& a, Formula b) {
  return a ? Formula::disj(*a, std::move(b)) : b;
}

std::vector<std::size_t> sorted_desc(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

SynthesisPlan plan_full(const TypeProfile& p) {
  std::vector<TypeIndex> realized;
  for (TypeIndex j = 0; j < p.counts.size(); ++j)
    if (p.counts[j] > 0) realized.push_back(j);
  SynthesisPlan plan;
  plan.realized_types = by_count(p.counts, realized);
  for (auto j : plan.realized_types) plan.counts.push_back(p.counts[j]);
  return plan;
}

SynthesisPlan plan_d(const ClassTuple& c) {
  validate(c);
  SynthesisPlan plan;
  std::vector<TypeIndex> small, full;
  for (TypeIndex j = 0; j < c.m.size(); ++j) {
    if (c.m[j] == 0) continue;
    (c.m[j] < c.d ? small : full).push_back(j);
  }
  plan.realized_types = by_count(c.m, small);
  plan.realized_types.insert(plan.realized_types.end(), full.begin(), full.end());
  for (auto j : plan.realized_types) plan.counts.push_back(c.m[j]);
  plan.variant = Variant::PhiD;
  return plan;
}

Formula type_formula(std::size_t arity, TypeIndex type, Var v) {
  if (arity == 0) throw InputError("empty vocabulary");
  std::vector<Formula> lits;
  for (std::size_t i = 0; i < arity; ++i) {
    lits.push_back(((type >> i) & 1U) ? Formula::pred(i, v) : Formula::neg_pred(i, v));
  }
  return big_and(lits);
}

std::optional<Formula> at_least_formula(std::size_t arity, const std::vector<TypeIndex>& T,
                                        const std::vector<std::size_t>& m) {
  check_counts(T, m);
  const std::size_t r = m.size();
  const std::size_t top = m.back();
  if (top == 1) return std::nullopt;
  const Var y = static_cast<Var>(top);

  // (pi_j(x1) & pi_j(y)) over the j with m_j = i.
  auto same_type = [&](std::size_t i) -> std::optional<Formula> {
    std::vector<Formula> parts;
    for (std::size_t j = 0; j < r; ++j) {
      if (m[j] == i)
        parts.push_back(Formula::conj(type_formula(arity, T[j], 1), type_formula(arity, T[j], y)));
    }
    if (parts.empty()) return std::nullopt;
    return big_or(parts);
  };

  // psi_top, then psi_i for i = top-1 .. 2.
  Formula psi = Formula::conj(Formula::neq(y, static_cast<Var>(top - 1)), *same_type(top));
  for (std::size_t i = top - 1; i >= 2; --i) {
    psi = Formula::conj(Formula::neq(y, static_cast<Var>(i - 1)), or_opt(same_type(i), psi));
  }
  // psi_1
  {
    std::vector<Formula> ones;
    for (std::size_t j = 0; j < r; ++j)
      if (m[j] == 1) ones.push_back(type_formula(arity, T[j], 1));
    if (!ones.empty()) psi = Formula::disj(big_or(ones), psi);
  }
  Formula body = Formula::exists(y, or_opt(others(arity, T, r), psi));
  for (Var x = static_cast<Var>(top - 1); x >= 1; --x) body = Formula::forall(x, body);
  return body;
}

Formula at_most_formula(std::size_t arity, const std::vector<TypeIndex>& T,
                        const std::vector<std::size_t>& m) {
  check_counts(T, m);
  const std::size_t r = m.size();
  const std::size_t top = m.back();
  const Var y = static_cast<Var>(top + 1);

  auto indices = [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < r; ++j)
      if (m[j] == i) out.push_back(j);
    return out;
  };
  // (pi_j(x1) & !pi_j(y)) over the given j.
  auto escapes = [&](const std::vector<std::size_t>& js) {
    std::vector<Formula> parts;
    for (auto j : js)
      parts.push_back(Formula::conj(type_formula(arity, T[j], 1),
                                    negate(type_formula(arity, T[j], y))));
    return big_or(parts);
  };

  Formula theta = Formula::disj(Formula::eq(y, static_cast<Var>(top)), escapes(indices(top)));
  for (std::size_t i = top - 1; i >= 1; --i) {
    const auto js = indices(i);
    const Formula here = Formula::eq(y, static_cast<Var>(i));
    if (js.empty()) {
      theta = Formula::disj(here, theta);
      continue;
    }
    std::vector<Formula> not_here;
    for (auto j : js) not_here.push_back(negate(type_formula(arity, T[j], 1)));
    theta = Formula::disj(here, Formula::disj(escapes(js), Formula::conj(big_and(not_here), theta)));
  }
  Formula body = Formula::forall(y, or_opt(others(arity, T, r), theta));
  for (Var x = static_cast<Var>(top); x >= 2; --x) body = Formula::exists(x, body);
  return Formula::forall(1, body);
}

std::vector<Formula> realized_types_conjuncts(std::size_t arity,
                                              const std::vector<TypeIndex>& types) {
  if (types.empty()) throw InputError("no realized types");
  std::vector<Formula> out;
  std::vector<Formula> alts;
  for (auto j : types) {
    out.push_back(Formula::exists(1, type_formula(arity, j, 1)));
    alts.push_back(type_formula(arity, j, 1));
  }
  out.push_back(Formula::forall(1, big_or(alts)));
  return out;
}

namespace {

std::size_t arity_of(const std::vector<std::size_t>& counts) {
  return arity_for_type_count(counts.size());
}

// base & at_least(T, m[0..a)) & at_most(T, m[0..b)); a or b may be 0.
Formula assemble(std::size_t arity, const SynthesisPlan& plan, std::size_t a, std::size_t b) {
  auto parts = realized_types_conjuncts(arity, plan.realized_types);
  auto prefix = [&](std::size_t len) {
    return std::vector<std::size_t>(plan.counts.begin(), plan.counts.begin() + len);
  };
  if (a > 0)
    if (auto f = at_least_formula(arity, plan.realized_types, prefix(a))) parts.push_back(*f);
  if (b > 0) parts.push_back(at_most_formula(arity, plan.realized_types, prefix(b)));
  return big_and(parts);
}

}  // namespace

Formula phi_formula(const TypeProfile& p) {
  if (p.n() == 0) throw InputError("empty structure");
  const auto plan = plan_full(p);
  return assemble(arity_of(p.counts), plan, plan.counts.size(), 0);
}

std::optional<Formula> psi_formula(const TypeProfile& p) {
  if (p.n() == 0) throw InputError("empty structure");
  const auto plan = plan_full(p);
  const auto l = plan.counts.size();
  return assemble(arity_of(p.counts), plan, l - 1, l - 1);
}

Synthesis synthesize_full_plan(const TypeProfile& p) {
  auto plan = plan_full(p);
  Formula phi = phi_formula(p);
  Formula psi = *psi_formula(p);
  Synthesis out{phi, plan, phi.size(), psi.size()};
  if (plan.counts.size() == 1 || psi.size() < phi.size()) {
    out.formula = psi;
    out.plan.variant = Variant::Psi;
  }
  return out;
}

Formula synthesize_full(const TypeProfile& p) { return synthesize_full_plan(p).formula; }
Formula synthesize_full(const UnaryStructure& s) { return synthesize_full(profile_of(s)); }

namespace {

std::size_t count_small(const ClassTuple& c) {
  return static_cast<std::size_t>(
      std::count_if(c.m.begin(), c.m.end(), [&](auto v) { return v > 0 && v < c.d; }));
}

std::size_t count_full(const ClassTuple& c) {
  return static_cast<std::size_t>(std::count(c.m.begin(), c.m.end(), c.d));
}

}  // namespace

Formula phi_d_formula(const ClassTuple& c) {
  const auto plan = plan_d(c);
  return assemble(arity_of(c.m), plan, plan.counts.size(), count_small(c));
}

std::optional<Formula> psi_d_formula(const ClassTuple& c) {
  const auto plan = plan_d(c);
  if (count_full(c) > 1) return std::nullopt;
  // With one entry equal to d it is last in the plan; with none, the largest
  // entry is last. Either way it is left uncounted.
  const auto r = plan.counts.size() - 1;
  return assemble(arity_of(c.m), plan, r, r);
}

SynthesisD synthesize_d_plan(const ClassTuple& c) {
  auto plan = plan_d(c);
  Formula phi = phi_d_formula(c);
  SynthesisD out{phi, plan, phi.size(), std::nullopt};
  if (auto psi = psi_d_formula(c)) {
    out.psi_size = psi->size();
    if (psi->size() < phi.size()) {
      out.formula = *psi;
      out.plan.variant = Variant::PsiD;
    }
  }
  return out;
}

Formula synthesize_d(const ClassTuple& c) { return synthesize_d_plan(c).formula; }

std::int64_t upper_bound(const TypeProfile& p) {
  const auto arity = arity_of(p.counts);
  const auto c_tau = Vocabulary::with_arity(arity).c_tau();
  const auto plan = plan_full(p);
  const auto l = plan.counts.size();
  if (l <= 1) return c_tau;
  const auto a = static_cast<std::int64_t>(plan.counts[l - 1]);
  const auto b = static_cast<std::int64_t>(plan.counts[l - 2]);
  return std::min(3 * a, 6 * b) + c_tau;
}

std::int64_t upper_bound(const UnaryStructure& s) { return upper_bound(profile_of(s)); }

std::int64_t upper_bound_d(const ClassTuple& c) {
  validate(c);
  const auto c_tau = Vocabulary::with_arity(arity_of(c.m)).c_tau();
  const auto d = static_cast<std::int64_t>(c.d);
  std::int64_t m_r = 0;
  for (auto v : c.m)
    if (v < c.d) m_r = std::max(m_r, static_cast<std::int64_t>(v));
  const auto desc = sorted_desc(c.m);
  const auto second = static_cast<std::int64_t>(desc.size() > 1 ? desc[1] : 0);
  std::int64_t bound = 3 * d + 3 * m_r;
  if (second < d) bound = std::min(bound, 6 * second);
  return bound + c_tau;
}

}  // namespace fodesc
