#include <doctest.h>

#include <algorithm>

#include "fodesc/error.hpp"
#include "fodesc/semantics.hpp"
#include "fodesc/synthesis.hpp"
#include "fodesc/syntax.hpp"
#include "support.hpp"

using namespace fodesc;

namespace {

TypeProfile profile(std::vector<std::size_t> c) { return TypeProfile{std::move(c)}; }

bool realizes_exactly(const TypeProfile& p, const std::vector<TypeIndex>& T) {
  for (TypeIndex j = 0; j < p.counts.size(); ++j) {
    const bool in_t = std::find(T.begin(), T.end(), j) != T.end();
    if ((p.counts[j] > 0) != in_t) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("type formulas") {
  CHECK(type_formula(1, 1, 1) == Formula::pred(0, 1));
  const auto none = type_formula(2, 0, 1);
  CHECK(none == Formula::conj(Formula::neg_pred(0, 1), Formula::neg_pred(1, 1)));
  CHECK(none.size() == 3);
  CHECK(type_formula(2, 3, 1) == Formula::conj(Formula::pred(0, 1), Formula::pred(1, 1)));
}

TEST_CASE("at least: examples") {
  const auto f = *at_least_formula(1, {0, 1}, {2, 2});
  CHECK(satisfies_profile(profile({2, 2}), f));
  CHECK(satisfies_profile(profile({3, 2}), f));
  CHECK(satisfies_profile(profile({2, 3}), f));
  CHECK_FALSE(satisfies_profile(profile({1, 3}), f));
  CHECK(at_least_formula(1, {0, 1}, {2, 3})->size() <= 14);
  CHECK_FALSE(at_least_formula(1, {0, 1}, {1, 1}));
  CHECK_THROWS_AS(at_least_formula(1, {0, 1}, {3, 2}), InputError);
}

TEST_CASE("at most: examples") {
  const auto f = at_most_formula(1, {0, 1}, {1, 2});
  CHECK(satisfies_profile(profile({1, 2}), f));
  CHECK(satisfies_profile(profile({1, 1}), f));
  CHECK_FALSE(satisfies_profile(profile({2, 2}), f));
  CHECK_FALSE(satisfies_profile(profile({1, 3}), f));
  // 3 m_r + 6 k |T| - 2k with m_r = 2, k = 1, |T| = 2.
  CHECK(f.size() <= 16);
  // A single type capped at the domain size is a tautology on its models.
  const auto whole = at_most_formula(1, {1}, {4});
  for (std::size_t n = 1; n <= 4; ++n) CHECK(satisfies_profile(profile({0, n}), whole));
}

TEST_CASE("counting schemas against direct counts") {
  // On every profile realizing exactly T, the schemas say what they claim.
  const std::vector<TypeIndex> T{2, 0, 3};
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = a; b <= 3; ++b) {
      for (std::size_t c = b; c <= 3; ++c) {
        const std::vector<std::size_t> m{a, b, c};
        for (std::size_t r = 1; r <= 3; ++r) {
          const std::vector<std::size_t> head(m.begin(), m.begin() + r);
          const auto least = at_least_formula(2, T, head);
          const auto most = at_most_formula(2, T, head);
          if (least) CHECK(least->size() <= 3 * head.back() + 4 * 2 * T.size() - 3);
          CHECK(most.size() <= 3 * head.back() + 6 * 2 * T.size() - 2 * 2);
          for (std::size_t n = 3; n <= 7; ++n) {
            for (const auto& p : enumerate_profiles(4, n)) {
              if (!realizes_exactly(p, T)) continue;
              bool ge = true, le = true;
              for (std::size_t i = 0; i < r; ++i) {
                ge = ge && p.counts[T[i]] >= head[i];
                le = le && p.counts[T[i]] <= head[i];
              }
              if (least) CHECK(satisfies_profile(p, *least) == ge);
              CHECK(satisfies_profile(p, most) == le);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("synthesize_full") {
  const auto all = profile({0, 0, 0, 10});
  const auto f = synthesize_full(all);
  CHECK(defines(all, f));
  CHECK(f.size() <= static_cast<std::size_t>(upper_bound(all)));
  CHECK(upper_bound(all) == 120);

  CHECK(defines(profile({1, 1}), synthesize_full(profile({1, 1}))));
  CHECK(synthesize_full(profile({1, 1})).size() <= 36);
  CHECK(upper_bound(profile({2, 4})) == 42);
  CHECK(synthesize_full(profile({2, 4})).size() <= 42);

  // Ties go to phi; one realized type gives psi.
  const auto plan = synthesize_full_plan(profile({3, 0}));
  CHECK(plan.plan.variant == Variant::Psi);
  for (const auto& p : enumerate_profiles(2, 9)) {
    const auto s = synthesize_full_plan(p);
    CHECK(s.formula.size() == std::min(s.phi_size, s.psi_size.value_or(s.phi_size)));
    CHECK(upper_bound(p) <= 2 * 9 + 30);
  }
}

TEST_CASE("plans") {
  const auto p = plan_full(profile({3, 0, 1, 3}));
  CHECK(p.realized_types == std::vector<TypeIndex>{2, 0, 3});
  CHECK(p.counts == std::vector<std::size_t>{1, 3, 3});
  const auto d = plan_d(ClassTuple{3, 9, {3, 2, 1, 3}});
  CHECK(d.realized_types == std::vector<TypeIndex>{2, 1, 0, 3});
  CHECK(d.counts == std::vector<std::size_t>{1, 2, 3, 3});
}

TEST_CASE("synthesize_d") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const ClassTuple one{d, 3 * d, {0, 0, 1, d}};
    const auto f = synthesize_d(one);
    CHECK(f.size() <= 6 + 120);
    CHECK(f.qrank() <= d);
    const ClassTuple two{d, 4 * d, {0, d - 1, d, d}};
    CHECK(synthesize_d(two).size() <= 6 * d - 3 + 120);
    CHECK_FALSE(psi_d_formula(two));
  }
  const ClassTuple c{2, 5, {1, 2}};
  const auto f = synthesize_d(c);
  CHECK(defines_class(c, f));
  CHECK(f.qrank() <= 2);
  const auto g = synthesize_d(ClassTuple{2, 3, {1, 2}});
  CHECK(g.qrank() <= 2);
  CHECK(upper_bound_d(ClassTuple{2, 3, {1, 2}}) == 36);
}

TEST_CASE("synthesized text re-parses") {
  const auto vocab = Vocabulary::with_arity(2);
  for (const auto& p : enumerate_profiles(4, 4)) {
    const auto f = synthesize_full(p);
    CHECK(parse(print(f, vocab), vocab) == f);
  }
}
