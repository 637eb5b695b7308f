#include <doctest.h>

#include "fodesc/error.hpp"
#include "fodesc/semantics.hpp"
#include "fodesc/syntax.hpp"
#include "support.hpp"

using namespace fodesc;

namespace {
const Vocabulary P = Vocabulary::with_arity(1);
const Vocabulary PQ = Vocabulary::with_arity(2);
TypeProfile profile(std::vector<std::size_t> c) { return TypeProfile{std::move(c)}; }
}  // namespace

TEST_CASE("assignment") {
  Assignment a;
  CHECK_FALSE(a.has(1));
  a.set(3, 7);
  a.set(1, 0);
  CHECK(a.at(3) == 7);
  CHECK(a.domain() == std::vector<Var>{1, 3});
  CHECK_FALSE(a.get(2));
  a.unset(3);
  CHECK_FALSE(a.has(3));
  Assignment b;
  b.set(1, 0);
  CHECK(a == b);
}

TEST_CASE("eval examples") {
  const UnaryStructure m1(PQ, std::vector<TypeIndex>(10, 3));
  CHECK(eval(m1, {}, parse("Ax1. (P(x1) & Q(x1))", PQ)));
  CHECK(eval(representative(P, profile({4, 0})), {}, parse("Ex1. x1 = x1", P)));
  const auto two_p = parse("Ex1. Ex2. (x1 != x2 & P(x1) & P(x2))", P);
  CHECK(eval(representative(P, profile({1, 2})), {}, two_p));
  CHECK_FALSE(eval(representative(P, profile({2, 1})), {}, two_p));
  CHECK_THROWS_AS(eval(m1, {}, Formula::pred(0, 1)), EvaluationError);
  Assignment a;
  a.set(1, 9);
  CHECK(eval(m1, a, Formula::pred(0, 1)));
}

TEST_CASE("reduced eval agrees with exhaustive eval") {
  std::mt19937_64 rng(5);
  for (std::size_t k : {1, 2}) {
    const auto vocab = Vocabulary::with_arity(k);
    for (int i = 0; i < 400; ++i) {
      const auto f = test::random_formula(rng, k, 3, 5);
      const auto free = free_variables(f);
      for (const auto& types : test::all_type_vectors(vocab.type_count(), k == 1 ? 4 : 3)) {
        const UnaryStructure s(vocab, types);
        // Free variables pinned to arbitrary (deterministic) points.
        Assignment a;
        for (Var v : free) a.set(v, static_cast<Element>((v * 7 + i) % s.n()));
        CHECK(eval(s, a, f) == eval_exhaustive(s, a, f));
      }
    }
  }
}

TEST_CASE("satisfies_profile") {
  const auto all_p = parse("Ax1. P(x1)", P);
  CHECK(satisfies_profile(profile({0, 10}), all_p));
  CHECK_FALSE(satisfies_profile(profile({1, 9}), all_p));
  // Isomorphism invariance: every structure of the profile agrees.
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto f = test::close(test::random_formula(rng, 2, 3, 4));
    if (f.size() > 6) continue;
    for (const auto& types : test::all_type_vectors(4, 3)) {
      const UnaryStructure s(PQ, types);
      CHECK(satisfies_profile(profile_of(s), f) == eval_exhaustive(s, {}, f));
    }
  }
}

TEST_CASE("defines") {
  const UnaryStructure m1(PQ, std::vector<TypeIndex>(10, 3));
  CHECK(defines(m1, parse("Ax1. (P(x1) & Q(x1))", PQ)));
  CHECK_FALSE(defines(profile({1, 1}), parse("Ex1. P(x1)", P)));
  CHECK(defines(profile({1, 1}), parse("(Ex1. P(x1) & Ex2. !P(x2))", P)));
}

TEST_CASE("defines_class") {
  CHECK(defines_class(ClassTuple{2, 5, {0, 2}}, parse("Ax1. P(x1)", P)));
  CHECK_THROWS_AS(defines_class(ClassTuple{1, 5, {0, 1}}, parse("Ex1. Ex2. x1 != x2", P)),
                  InputError);
  // An isomorphism class behaves like the profile itself.
  const auto f = parse("(Ex1. P(x1) & Ex2. !P(x2))", P);
  CHECK(defines_class(ClassTuple{3, 2, {1, 1}}, f) == defines(profile({1, 1}), f));
  // (1,d) with d = 2 at n = 4: exactly one non-P point.
  const auto one_not_p = parse("Ex1. (!P(x1) & Ax2. (x2 = x1 | P(x2)))", P);
  CHECK(defines_class(ClassTuple{2, 4, {1, 2}}, one_not_p));
}
