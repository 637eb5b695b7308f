#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "fodesc/error.hpp"
#include "fodesc/structures.hpp"
#include "support.hpp"

using namespace fodesc;

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

TypeProfile profile(std::vector<std::size_t> c) { return TypeProfile{std::move(c)}; }

}  // namespace

TEST_CASE("vocabulary") {
  const auto v = Vocabulary::with_arity(2);
  CHECK(v.arity() == 2);
  CHECK(v.type_count() == 4);
  CHECK(v.c_tau() == 120);
  CHECK(Vocabulary::with_arity(1).c_tau() == 30);
  CHECK(v.index_of("Q") == 1);
  CHECK_FALSE(v.index_of("R"));
  CHECK_THROWS_AS(Vocabulary({"P", "P"}), InputError);
  CHECK_THROWS_AS(Vocabulary({""}), InputError);
  CHECK_THROWS_AS(Vocabulary({"1x"}), InputError);
  CHECK(arity_for_type_count(8) == 3);
  CHECK_THROWS(arity_for_type_count(6));
}

TEST_CASE("profile_of and class_tuple_of") {
  const auto k1 = Vocabulary::with_arity(1);
  CHECK(profile_of(UnaryStructure(k1, {1, 1})).counts == std::vector<std::size_t>{0, 2});
  CHECK(profile_of(UnaryStructure(k1, {0, 1, 1})).counts == std::vector<std::size_t>{1, 2});
  const auto m1 = UnaryStructure(Vocabulary::with_arity(2), std::vector<TypeIndex>(10, 3));
  CHECK(profile_of(m1).counts == std::vector<std::size_t>{0, 0, 0, 10});
  CHECK_THROWS(UnaryStructure(k1, {0, 2}));

  CHECK(class_tuple_of(profile({1, 5}), 3).m == std::vector<std::size_t>{1, 3});
  const auto iso = class_tuple_of(profile({2, 2}), 3);
  CHECK(iso.m == std::vector<std::size_t>{2, 2});
  CHECK(iso.is_isomorphism_class());
  CHECK(class_tuple_of(profile({0, 0, 1, 9}), 4).m == std::vector<std::size_t>{0, 0, 1, 4});
}

TEST_CASE("class tuple validity") {
  CHECK(is_valid(ClassTuple{3, 6, {1, 3}}));
  CHECK_FALSE(is_valid(ClassTuple{3, 6, {1, 2}}));  // sum < n with no capped entry
  CHECK_FALSE(is_valid(ClassTuple{3, 6, {1, 4}}));  // entry above d
  CHECK_FALSE(is_valid(ClassTuple{3, 3, {3, 3}}));  // sum above n
  CHECK_THROWS_AS(validate(ClassTuple{2, 3, {1}}), InputError);
}

TEST_CASE("enumerate_profiles") {
  const auto p = enumerate_profiles(Vocabulary::with_arity(1), 2);
  REQUIRE(p.size() == 3);
  CHECK(p[0].counts == std::vector<std::size_t>{0, 2});
  CHECK(p[1].counts == std::vector<std::size_t>{1, 1});
  CHECK(p[2].counts == std::vector<std::size_t>{2, 0});
  CHECK(enumerate_profiles(2, 3).size() == 4);
  CHECK(enumerate_profiles(4, 3).size() == 20);
  // Independent count: distinct profiles among all t^n structures.
  for (std::size_t t : {2, 4}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::set<std::vector<std::size_t>> seen;
      for (const auto& types : test::all_type_vectors(t, n)) {
        std::vector<std::size_t> c(t, 0);
        for (auto j : types) ++c[j];
        seen.insert(c);
      }
      CHECK(enumerate_profiles(t, n).size() == seen.size());
    }
  }
  std::size_t visited = 0;
  for_each_profile(4, 5, [&](const TypeProfile&) { return ++visited < 3; });
  CHECK(visited == 3);
}

TEST_CASE("representative") {
  CHECK(representative(profile({1, 1})).types() == std::vector<TypeIndex>{0, 1});
  CHECK(representative(profile({0, 3})).types() == std::vector<TypeIndex>{1, 1, 1});
  CHECK(representative(profile({2, 0, 1, 0})).types() == std::vector<TypeIndex>{0, 0, 2});
}

TEST_CASE("multinomial and binomial") {
  CHECK(multinomial(2, {1, 1}) == 2);
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(multinomial(5, {0, 5}) == 1);
  for (const auto& p : enumerate_profiles(4, 7)) {
    std::uint64_t expect = factorial(7);
    for (auto c : p.counts) expect /= factorial(c);
    CHECK(multinomial(p) == expect);
  }
  CHECK(binomial(100, 1) == 100);
  CHECK(binomial(10, 11) == 0);
  CHECK_THROWS(multinomial(3, {1, 1}));
  // Far beyond 64 bits.
  CHECK(log2(binomial(1000, 500)) == doctest::Approx(994.7).epsilon(1e-3));
}

TEST_CASE("class_size against brute force") {
  CHECK(class_size(ClassTuple{3, 2, {1, 1}}) == 2);
  CHECK(class_size(ClassTuple{1, 3, {1, 1}}) == 6);
  CHECK(class_size(ClassTuple{2, 5, {0, 2}}) == 1);
  for (std::size_t t : {2, 4}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t d = 1; d <= 3; ++d) {
        std::map<std::vector<std::size_t>, std::size_t> count;
        for (const auto& types : test::all_type_vectors(t, n)) {
          std::vector<std::size_t> c(t, 0);
          for (auto j : types) ++c[j];
          ++count[class_tuple_of(TypeProfile{c}, d).m];
        }
        const auto tuples = enumerate_class_tuples(t, n, d);
        CHECK(tuples.size() == count.size());
        for (const auto& c : tuples) CHECK(class_size(c) == count[c.m]);
      }
    }
  }
}

TEST_CASE("sample_uniform") {
  const auto k1 = Vocabulary::with_arity(1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(sample_uniform(k1, 1, seed).types()[0] <= 1);
  CHECK(sample_uniform(Vocabulary::with_arity(2), 50, 7) ==
        sample_uniform(Vocabulary::with_arity(2), 50, 7));
  std::size_t inside = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto c = profile_of(sample_uniform(k1, 100, seed)).counts[0];
    if (c >= 35 && c <= 65) ++inside;
  }
  CHECK(inside > 9900);
}

TEST_CASE("balancedness") {
  // The Chernoff tail at the threshold is exactly 2/n for every k.
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n : {10, 100, 400, 5000}) {
      const double mu = static_cast<double>(n) / std::ldexp(1.0, static_cast<int>(k));
      const double delta = balance_threshold(k, n) / mu;
      CHECK(2 * std::exp(-delta * delta * mu / 3) == doctest::Approx(2.0 / static_cast<double>(n)));
    }
  }
  CHECK(balance_threshold(1, 100) == doctest::Approx(26.2812).epsilon(1e-4));
  CHECK(is_balanced(profile({50, 50})));
  CHECK_FALSE(is_balanced(profile({0, 100})));
  CHECK(is_balanced(profile({40, 60})));
  CHECK(is_balanced(profile({24, 76})));
  CHECK_FALSE(is_balanced(profile({23, 77})));
  CHECK_THROWS_AS(balance_threshold(1, 1), InputError);
}

TEST_CASE("csv round trip and errors") {
  std::istringstream in("P,Q\n1,1\n0,1\n1,0\n");
  const auto s = read_csv(in);
  CHECK(s.vocab().predicates() == std::vector<std::string>{"P", "Q"});
  CHECK(s.types() == std::vector<TypeIndex>{3, 2, 1});
  std::ostringstream out;
  write_csv(out, s);
  std::istringstream again(out.str());
  CHECK(read_csv(again) == s);

  std::istringstream ragged("P,Q\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), InputError);
  std::istringstream bad_cell("P\n2\n");
  CHECK_THROWS_AS(read_csv(bad_cell), InputError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), InputError);
}

TEST_CASE("profile literal") {
  const auto lit = parse_profile_literal("k=2 n=10 counts=0,0,3,7");
  CHECK(lit.vocab.arity() == 2);
  CHECK(lit.profile.counts == std::vector<std::size_t>{0, 0, 3, 7});
  CHECK(format_counts(lit.profile.counts) == "0,0,3,7");
  CHECK_THROWS_AS(parse_profile_literal("k=2 n=9 counts=0,0,3,7"), InputError);
  CHECK_THROWS_AS(parse_profile_literal("k=1 counts=0,0,3,7"), InputError);
  CHECK_THROWS_AS(parse_profile_literal("k=1"), InputError);
}
