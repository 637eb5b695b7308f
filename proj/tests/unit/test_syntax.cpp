#include <doctest.h>

#include "fodesc/error.hpp"
#include "fodesc/syntax.hpp"
#include "support.hpp"

using namespace fodesc;

namespace {
const Vocabulary PQ = Vocabulary::with_arity(2);
const Vocabulary P = Vocabulary::with_arity(1);
}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse("Ax1. P(x1)", P) == Formula::forall(1, Formula::pred(0, 1)));
  CHECK(parse("!(Ex1. P(x1))", P) == Formula::forall(1, Formula::neg_pred(0, 1)));
  CHECK(parse("(P(x1) & x1 != x2)", P) ==
        Formula::conj(Formula::pred(0, 1), Formula::neq(1, 2)));
  CHECK(parse("  ( Q(x2)|x1=x3 | !P(x1) )", PQ) ==
        Formula::disj(Formula::pred(1, 2),
                      Formula::disj(Formula::eq(1, 3), Formula::neg_pred(0, 1))));
  CHECK(parse("!(P(x1) & !(x1 = x2))", P) ==
        Formula::disj(Formula::neg_pred(0, 1), Formula::eq(1, 2)));
  CHECK(parse("Ex12. x12 = x12", P) == Formula::exists(12, Formula::eq(12, 12)));
}

TEST_CASE("print examples") {
  CHECK(print(Formula::forall(1, Formula::pred(0, 1)), P) == "Ax1. P(x1)");
  CHECK(print(Formula::conj(Formula::pred(0, 1), Formula::conj(Formula::eq(1, 2), Formula::neg_pred(1, 2))),
              PQ) == "(P(x1) & (x1 = x2 & !Q(x2)))");
  CHECK(print(Formula::exists(2, Formula::neq(1, 2))) == "Ex2. x1 != x2");
  CHECK(print(Formula::pred(1, 1)) == "P2(x1)");
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto f = test::random_formula(rng, 2, 4, 6);
    CHECK(parse(print(f, PQ), PQ) == f);
  }
}

TEST_CASE("errors carry positions") {
  auto position = [](std::string_view text) {
    try {
      parse(text, P);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(position("R(x1)") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(position("Ax1. P(y)") == std::pair<std::size_t, std::size_t>{1, 8});
  CHECK(position("(P(x1) & P(x1)\n | P(x1))") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(position("P(x1) junk").first == 1);
  CHECK(position("Ax0. P(x0)").first == 1);
  CHECK_THROWS_AS(parse("", P), ParseError);
  CHECK_THROWS_AS(parse("Ax1 P(x1)", P), ParseError);
}
