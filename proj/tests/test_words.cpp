#include <stdexcept>
#include <random>

#include "doctest.h"
#include "sbw/words.hpp"

using namespace sbw;

namespace {

const Alphabet& abc() {
  static const Alphabet a({"a", "b", "c"});
  return a;
}

Word W(const std::string& text) { return parse_word(text, abc()); }

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 2);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    w.push_back(Letter{gen(rng), sgn(rng) ? 1 : -1});
  }
  return w;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(W("a a^-1 b")) == W("b"));
  CHECK(free_reduce(W("b^-1 b")) == W("1"));
  CHECK(free_reduce(W("a b a")) == W("a b a"));
  // nested cancellation
  CHECK(free_reduce(W("a b b^-1 a^-1 c")) == W("c"));
}

TEST_CASE("word inversion") {
  CHECK(invert_word(W("a b")) == W("b^-1 a^-1"));
  CHECK(invert_word(W("1")) == W("1"));
  CHECK(invert_word(W("a^-1 c")) == W("c^-1 a"));
}

TEST_CASE("exponent vectors") {
  CHECK(exponent_vector(W("a b a"), 3) == std::vector<long long>{2, 1, 0});
  CHECK(exponent_vector(W("c^-1 a b"), 3) ==
        std::vector<long long>{1, 1, -1});
  CHECK(exponent_vector(W("1"), 3) == std::vector<long long>{0, 0, 0});
}

TEST_CASE("word properties") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, 12);
    Word v = random_word(rng, 12);
    Word ru = free_reduce(u);
    CHECK(free_reduce(ru) == ru);
    CHECK(free_reduce(concat(u, invert_word(u))).empty());
    CHECK(invert_word(invert_word(u)) == u);
    auto eu = exponent_vector(u, 3);
    auto ev = exponent_vector(v, 3);
    auto euv = exponent_vector(concat(u, v), 3);
    for (int g = 0; g < 3; ++g) {
      CHECK(euv[g] == eu[g] + ev[g]);
    }
    CHECK(exponent_vector(ru, 3) == eu);
  }
}

TEST_CASE("token syntax") {
  Word w = W("a b^-1 c^2");
  REQUIRE(w.size() == 4);
  CHECK(w[0] == pos(0));
  CHECK(w[1] == neg(1));
  CHECK(w[2] == pos(2));
  CHECK(w[3] == pos(2));
  CHECK(W("1").empty());
  CHECK(W("a^-2") == Word{neg(0), neg(0)});
  CHECK(W("  a   b ") == W("a b"));
  CHECK(W("a^0").empty());

  CHECK_THROWS_WITH_AS(W("x"), doctest::Contains("x"),
                       std::invalid_argument);
  CHECK_THROWS_AS(W("a^"), std::invalid_argument);
  CHECK_THROWS_AS(W("a^two"), std::invalid_argument);
}

TEST_CASE("printing") {
  CHECK(print_word(W("a a b"), abc()) == "a^2 b");
  CHECK(print_word(W("a^-1"), abc()) == "a^-1");
  CHECK(print_word(W("b^-3"), abc()) == "b^-3");
  CHECK(print_word(W("1"), abc()) == "1");
  CHECK(print_word(W("a a b"), abc(), true) == "a a b");
  CHECK(print_word(W("a^-2 c"), abc(), true) == "a^-1 a^-1 c");

  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 10);
    CHECK(parse_word(print_word(w, abc(), true), abc()) == w);
    CHECK(parse_word(print_word(w, abc(), false), abc()) == w);
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"1"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a b"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a^2"}), std::invalid_argument);
  CHECK(abc().index("c") == 2);
  CHECK_THROWS_AS(abc().index("d"), std::invalid_argument);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(W("b"), W("a a")));
  CHECK(shortlex_less(W("a"), W("a^-1")));
  CHECK(shortlex_less(W("a b"), W("a c")));
  CHECK(!shortlex_less(W("a"), W("a")));
}
