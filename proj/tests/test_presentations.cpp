#include <stdexcept>
#include <set>

#include "doctest.h"
#include "sbw/catalog.hpp"
#include "sbw/presentation.hpp"

using namespace sbw;

TEST_CASE("torus abc presentations") {
  Presentation v2 = build_presentation("torus2_v2", {});
  CHECK(write_presentation(v2) ==
        "kind: group\n"
        "gens: a b c\n"
        "rel SQ: a^2 b = b a^2\n"
        "rel SQ: b^2 a = a b^2\n"
        "rel SQ: a^2 c = c a^2\n"
        "rel SQ: b^2 c = c b^2\n"
        "rel CSQ: a^2 b^2 = c^2\n");

  Presentation cand = build_presentation("torus2_complete_candidate", {});
  CHECK(cand.kind == Kind::monoid);
  REQUIRE(cand.relations.size() == 6);
  CHECK(cand.relations.back().label == "CSQ'");
  CHECK(print_word(cand.relations.back().lhs, cand.alphabet) == "b^2 a^2");
  CHECK(print_word(cand.relations.back().rhs, cand.alphabet) == "c^2");

  Presentation fc2 = build_presentation("free_central2", {});
  CHECK(write_presentation(fc2) ==
        "kind: monoid\n"
        "gens: a b\n"
        "rel SQ: a b^2 = b^2 a\n"
        "rel SQ: b a^2 = a^2 b\n");
}

TEST_CASE("boundary(2,1,1) instantiation") {
  Presentation p = build_presentation("boundary", {2, 1, 1});
  // No braid relations for n = 2 and CR3 excluded at (1,2) = (p, p+1);
  // what remains is CR2 twice and one skew relation.
  CHECK(write_presentation(p) ==
        "kind: group\n"
        "gens: s1 d1 d2\n"
        "rel CR2: d1 s1 d1 s1 = s1 d1 s1 d1\n"
        "rel CR2: d2 s1 d2 s1 = s1 d2 s1 d2\n"
        "rel SCR1: s1 d2 s1 d1 s1 = d1 s1 d2\n");
  CHECK(p.provenance ==
        "boundary(2,1,1); dropped: BR2[i=1]");
}

TEST_CASE("two-strand torus group") {
  Presentation p = build_presentation("torus_n", {2});
  CHECK(write_presentation(p) ==
        "kind: group\n"
        "gens: s1 d1 d2\n"
        "rel CR4: d1^2 s1 = s1 d1^2\n"
        "rel CR4: d2^2 s1 = s1 d2^2\n"
        "rel SCR4: d2 s1 d1 d2 s1 = d1 d2^2\n"
        "rel FGR: s1 d1 d2 s1 = d2 d1\n");

  Presentation v1 = build_presentation("torus2_v1", {});
  REQUIRE(v1.relations.size() == 5);
  CHECK(print_word(v1.relations[2].lhs, v1.alphabet) == "d1^2 d2");
  CHECK(print_word(v1.relations[4].rhs, v1.alphabet) == "d2 d1");
}

TEST_CASE("generator counts") {
  CHECK(build_presentation("boundary", {3, 2, 2}).alphabet.size() == 7);
  CHECK(build_presentation("boundary", {2, 0, 3}).alphabet.size() == 3);
  CHECK(build_presentation("closed", {3, 2}).alphabet.size() == 6);
  CHECK(build_presentation("appendix_boundary", {3, 2, 2}).alphabet.size() ==
        2 + 2 + 2 + 1);
  CHECK(build_presentation("appendix_closed", {2, 1}).alphabet.size() == 3);
}

TEST_CASE("analysis") {
  Analysis planar = analyze_presentation(
      build_presentation("planar", {3, 3, 1, 3}));
  CHECK(planar.positive);
  CHECK(planar.homogeneous);

  Analysis b211 =
      analyze_presentation(build_presentation("boundary", {2, 1, 1}));
  CHECK(b211.positive);
  CHECK(!b211.homogeneous);  // SCR1 has sides of length 5 and 3

  Presentation v2 = build_presentation("torus2_v2", {});
  Analysis av2 = analyze_presentation(v2);
  CHECK(av2.positive);
  CHECK(!av2.homogeneous);  // a^2 b^2 = c^2
  // abelianization column of CSQ
  CHECK(av2.abelianization.back() == std::vector<long long>{2, 2, -2});
  // the square-commutation columns vanish
  for (std::size_t i = 0; i + 1 < av2.abelianization.size(); ++i) {
    CHECK(av2.abelianization[i] == std::vector<long long>{0, 0, 0});
  }

  Analysis app = analyze_presentation(
      build_presentation("appendix_boundary", {3, 1, 1}));
  CHECK(!app.positive);
}

TEST_CASE("monoid-kind entries are positive") {
  for (const auto& spec :
       {"boundary_star(2,0,3,3)", "torus2_complete_candidate",
        "free_central2"}) {
    Presentation p = build_presentation_spec(spec);
    CHECK(p.kind == Kind::monoid);
    CHECK(analyze_presentation(p).positive);
  }
}

TEST_CASE("boundary_star appends the k-families") {
  Presentation p = build_presentation("boundary_star", {2, 0, 3, 3});
  std::multiset<std::string> labels;
  for (const Relation& r : p.relations) {
    labels.insert(r.label);
  }
  CHECK(labels.count("CR3") == 1);
  CHECK(labels.count("CR3_1") == 1);
  CHECK(labels.count("CR3_3") == 1);
  CHECK(labels.count("CR3'_2") == 1);
  // CR3_1 duplicates CR3 as written
  Word lhs1, lhs2;
  for (const Relation& r : p.relations) {
    if (r.label == "CR3") lhs1 = r.lhs;
    if (r.label == "CR3_1") lhs2 = r.lhs;
  }
  CHECK(lhs1 == lhs2);
}

TEST_CASE("determinism") {
  for (const auto& spec :
       {"boundary(3,2,2)", "planar(4,3,1,4)", "closed(3,2)",
        "closed_g2(3,2)", "torus_n(4)", "appendix_boundary(3,2,2)",
        "appendix_closed(3,2)"}) {
    CHECK(write_presentation(build_presentation_spec(spec)) ==
          write_presentation(build_presentation_spec(spec)));
  }
}

TEST_CASE("text format round trip") {
  for (const auto& spec :
       {"boundary(3,1,2)", "torus2_v2", "free_central2",
        "appendix_closed(2,1)"}) {
    Presentation p = build_presentation_spec(spec);
    std::string text = write_presentation(p);
    Presentation q = parse_presentation(text);
    CHECK(write_presentation(q) == text);
    CHECK(q.kind == p.kind);
    CHECK(q.alphabet == p.alphabet);
  }
  CHECK_THROWS_AS(parse_presentation("gens: a b\nrel X: a = b\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("kind: ring\ngens: a\n"),
                  std::invalid_argument);
}

TEST_CASE("parameter preconditions are named") {
  CHECK_THROWS_WITH_AS(build_presentation("boundary", {1, 0, 1}),
                       doctest::Contains("n >= 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_presentation("boundary", {2, -1, 1}),
                       doctest::Contains("g >= 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_presentation("planar", {3, 3, 1}),
                       doctest::Contains("|I| = p - 1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_presentation("planar", {3, 3, 1, 5}),
                       doctest::Contains("subset"), std::invalid_argument);
  CHECK_THROWS_AS(build_presentation("closed_g2", {2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_presentation("torus_n", {1}), std::invalid_argument);
  CHECK_THROWS_AS(build_presentation("nonsense", {}), std::invalid_argument);
}

TEST_CASE("appendix closed for the torus") {
  Presentation p = build_presentation("appendix_closed", {2, 1});
  CHECK(write_presentation(p) ==
        "kind: group\n"
        "gens: t1 b1 b2\n"
        "rel R2: b1 t1^-1 b2 t1^-1 = t1 b2 t1^-1 b1\n"
        "rel R3: b1 t1^-1 b1 t1^-1 = t1^-1 b1 t1^-1 b1\n"
        "rel R3: b2 t1^-1 b2 t1^-1 = t1^-1 b2 t1^-1 b2\n"
        "rel TR: b1 b2^-1 b1^-1 b2 = t1^2\n");
}

TEST_CASE("closed family small instances") {
  // For n = 2 the sigma_2 relations drop and the tent in FGR is empty.
  Presentation p = build_presentation("closed", {2, 1});
  CHECK(write_presentation(p) ==
        "kind: group\n"
        "gens: s1 d1 d2\n"
        "rel CR4: s1 d1^2 = d1^2 s1\n"
        "rel CR4: s1 d2^2 = d2^2 s1\n"
        "rel SCR3: d2 s1 d1 d2 s1 = d1 d2^2\n"
        "rel FGR: s1 d1 d2 s1 = d2 d1\n");

  // n = 3 keeps the sigma_2 lines and the tent becomes s2^2.
  Presentation q = build_presentation("closed", {3, 1});
  bool has_tent = false;
  for (const Relation& r : q.relations) {
    if (r.label == "FGR") {
      has_tent = print_word(r.lhs, q.alphabet) == "s2^2 s1 d1 d2 s1";
    }
  }
  CHECK(has_tent);
}
