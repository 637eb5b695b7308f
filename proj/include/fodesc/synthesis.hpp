#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fodesc/formula.hpp"
#include "fodesc/structures.hpp"

namespace fodesc {

enum class Variant : std::uint8_t { Phi, Psi, PhiD, PsiD };

const char* variant_name(Variant v) noexcept;

// Realized types in ascending order of count (ties: ascending type index),
// and the counts aligned with them.
struct SynthesisPlan {
  std::vector<TypeIndex> realized_types;
  std::vector<std::size_t> counts;
  Variant variant = Variant::Phi;
};

// Plan for a full profile: every realized type, ordered by count.
SynthesisPlan plan_full(const TypeProfile& p);

// Plan for a class: types with 0 < m < d first (ascending), then the types
// with m = d (by index).
SynthesisPlan plan_d(const ClassTuple& c);

// pi_j(x): one literal per predicate, size 2k - 1.
Formula type_formula(std::size_t arity, TypeIndex type, Var v);

// "At least m_i realizers of T[i] for i < m.size()", valid on models that
// realize exactly the types in T. nullopt when m_r = 1: the conjuncts
// "Ex pi_i(x)" already say it and the schema would have x1 free.
std::optional<Formula> at_least_formula(std::size_t arity, const std::vector<TypeIndex>& types,
                                        const std::vector<std::size_t>& m);

// "At most m_i realizers of T[i] for i < m.size()", on models realizing exactly T.
Formula at_most_formula(std::size_t arity, const std::vector<TypeIndex>& types,
                        const std::vector<std::size_t>& m);

// "Ex pi_1(x) & ... & Ex pi_l(x) & Ax (pi_1(x) | ... | pi_l(x))".
std::vector<Formula> realized_types_conjuncts(std::size_t arity,
                                              const std::vector<TypeIndex>& types);

Formula phi_formula(const TypeProfile& p);
// nullopt only when every point has one type; then phi_formula is the base.
std::optional<Formula> psi_formula(const TypeProfile& p);

struct Synthesis {
  Formula formula;
  SynthesisPlan plan;
  std::size_t phi_size = 0;
  std::optional<std::size_t> psi_size;
};

// The smaller of phi and psi; ties go to phi; with one realized type the base
// conjunction (psi) is returned.
Synthesis synthesize_full_plan(const TypeProfile& p);
Formula synthesize_full(const TypeProfile& p);
Formula synthesize_full(const UnaryStructure& s);

Formula phi_d_formula(const ClassTuple& c);
// Built when at most one entry of the tuple equals d.
std::optional<Formula> psi_d_formula(const ClassTuple& c);

struct SynthesisD {
  Formula formula;
  SynthesisPlan plan;
  std::size_t phi_size = 0;
  std::optional<std::size_t> psi_size;
};

SynthesisD synthesize_d_plan(const ClassTuple& c);
Formula synthesize_d(const ClassTuple& c);

// Closed-form certificates (no formula is built).
// min(3 m_l, 6 m_{l-1}) + c_tau, and c_tau when only one type is realized.
std::int64_t upper_bound(const TypeProfile& p);
std::int64_t upper_bound(const UnaryStructure& s);
// 3d + 3 m_r + c_tau, improved to min(., 6 m_{t-1} + c_tau) when the second
// largest entry is below d. m_r is the largest entry below d (0 if none).
std::int64_t upper_bound_d(const ClassTuple& c);

}  // namespace fodesc
