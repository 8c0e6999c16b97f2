#include <stdexcept>
#include <random>
#include <set>

#include "doctest.h"
#include "sbw/catalog.hpp"
#include "sbw/ces.hpp"
#include "sbw/rewrite.hpp"

using namespace sbw;

namespace {

std::set<std::string> member_keys(const CongruenceClass& c) {
  std::set<std::string> out;
  for (const Word& w : c.members) out.insert(word_key(w));
  return out;
}

}  // namespace

TEST_CASE("congruence classes") {
  Presentation braid = build_presentation("boundary", {3, 0, 1});
  Word w = parse_word("s1 s2 s1", braid.alphabet);
  CongruenceClass c =
      congruence_class(braid, w, Mode::monoid, default_limits(w, w));
  CHECK(c.closed);
  REQUIRE(c.members.size() == 2);
  CHECK(member_keys(c) ==
        std::set<std::string>{
            word_key(parse_word("s1 s2 s1", braid.alphabet)),
            word_key(parse_word("s2 s1 s2", braid.alphabet))});

  Presentation b203 = build_presentation("boundary", {2, 0, 3});
  Word nr = parse_word("d1 s1 d1 d2 d2 s1", b203.alphabet);
  CongruenceClass singleton =
      congruence_class(b203, nr, Mode::monoid, default_limits(nr, nr));
  CHECK(singleton.closed);
  CHECK(singleton.members == std::vector<Word>{nr});

  Presentation fc2 = build_presentation("free_central2", {});
  Word abb = parse_word("a b b", fc2.alphabet);
  CongruenceClass c2 =
      congruence_class(fc2, abb, Mode::monoid, default_limits(abb, abb));
  CHECK(c2.closed);
  CHECK(member_keys(c2) ==
        std::set<std::string>{word_key(parse_word("a b^2", fc2.alphabet)),
                              word_key(parse_word("b^2 a", fc2.alphabet))});
}

TEST_CASE("closed class is closed under every relation move") {
  Presentation v2 = build_presentation("torus2_v2", {});
  Word cc = parse_word("c c", v2.alphabet);
  CongruenceClass c =
      congruence_class(v2, cc, Mode::monoid, default_limits(cc, cc));
  REQUIRE(c.closed);
  CHECK(c.members.size() == 5);  // cc, aabb, abba, baab, bbaa
  std::set<std::string> keys = member_keys(c);
  for (const Word& m : c.members) {
    for (std::size_t r = 0; r < v2.relations.size(); ++r) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir ? v2.relations[r].rhs : v2.relations[r].lhs;
        const Word& to = dir ? v2.relations[r].lhs : v2.relations[r].rhs;
        for (std::size_t pos = 0; pos + from.size() <= m.size(); ++pos) {
          bool hit = true;
          for (std::size_t i = 0; i < from.size() && hit; ++i) {
            hit = m[pos + i] == from[i];
          }
          if (!hit) continue;
          Word next(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(pos));
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(),
                      m.begin() + static_cast<std::ptrdiff_t>(pos + from.size()),
                      m.end());
          CHECK(keys.count(word_key(next)) == 1);
        }
      }
    }
  }
}

TEST_CASE("bfs equality") {
  Presentation braid = build_presentation("boundary", {3, 0, 1});
  Word u = parse_word("s1 s2 s1", braid.alphabet);
  Word v = parse_word("s2 s1 s2", braid.alphabet);
  EqualityVerdict verdict =
      bfs_equal(braid, u, v, Mode::monoid, default_limits(u, v));
  CHECK(verdict.equal);
  CHECK(verdict.path.size() == 1);
  CHECK(replay_path(braid, u, verdict.path) == v);

  Presentation v2 = build_presentation("torus2_v2", {});
  Word cc = parse_word("c c", v2.alphabet);
  Word aabb = parse_word("a a b b", v2.alphabet);
  EqualityVerdict one =
      bfs_equal(v2, cc, aabb, Mode::monoid, default_limits(cc, aabb));
  CHECK(one.equal);
  CHECK(one.path.size() == 1);
  CHECK(replay_path(v2, cc, one.path) == aabb);

  Word ab = parse_word("a b", v2.alphabet);
  Word ba = parse_word("b a", v2.alphabet);
  EqualityVerdict tight =
      bfs_equal(v2, ab, ba, Mode::monoid, SearchLimits{8, 10});
  CHECK(!tight.equal);
  CHECK(!tight.certified_unequal);
  // the exact solver separately certifies the inequality
  const SolverInstance& inst = SolverInstance::torus3();
  CHECK(!(normal_form(inst, ab) == normal_form(inst, ba)));
}

TEST_CASE("abelianization certificate") {
  Presentation v2 = build_presentation("torus2_v2", {});
  Word a = parse_word("a", v2.alphabet);
  Word b = parse_word("b", v2.alphabet);
  EqualityVerdict verdict =
      bfs_equal(v2, a, b, Mode::group, default_limits(a, b));
  CHECK(!verdict.equal);
  CHECK(verdict.certified_unequal);

  // the certificate respects the relation lattice: c^2 and a^2 b^2 have
  // distinct exponent vectors but are not separated
  Word cc = parse_word("c c", v2.alphabet);
  Word aabb = parse_word("a a b b", v2.alphabet);
  EqualityVerdict eq =
      bfs_equal(v2, cc, aabb, Mode::group, default_limits(cc, aabb));
  CHECK(eq.equal);
}

TEST_CASE("certificate agrees with the exact solver") {
  Presentation v2 = build_presentation("torus2_v2", {});
  const SolverInstance& inst = SolverInstance::torus3();
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int i = 0; i < 200; ++i) {
    Word u, v;
    for (int k = len(rng); k-- > 0;) u.push_back(pos(gen(rng)));
    for (int k = len(rng); k-- > 0;) v.push_back(pos(gen(rng)));
    EqualityVerdict verdict =
        bfs_equal(v2, u, v, Mode::monoid, SearchLimits{12, 2000});
    if (verdict.certified_unequal) {
      CHECK(!(normal_form(inst, u) == normal_form(inst, v)));
    }
    if (verdict.equal) {
      CHECK(normal_form(inst, u) == normal_form(inst, v));
      CHECK(replay_path(v2, u, verdict.path) == v);
    }
  }
}

TEST_CASE("group mode moves") {
  Presentation v2 = build_presentation("torus2_v2", {});
  Word w = parse_word("a a^-1", v2.alphabet);
  EqualityVerdict verdict =
      bfs_equal(v2, w, {}, Mode::group, default_limits(w, w));
  CHECK(verdict.equal);
  CHECK(verdict.path.size() == 1);

  // c = a^-1 b^-1 a b is false; c and the commutator differ abelianized
  Word c = parse_word("c", v2.alphabet);
  Word comm = parse_word("a^-1 b^-1 a b", v2.alphabet);
  CHECK(bfs_equal(v2, c, comm, Mode::group, default_limits(c, comm))
            .certified_unequal);

  // group-mode classes are never exact: insertions are always capped
  CongruenceClass g =
      congruence_class(v2, c, Mode::group, SearchLimits{6, 500});
  CHECK(!g.closed);
}

TEST_CASE("replacement-rule and handle-identity consequence checks") {
  // the CR3' variant follows from the boundary relations in the group
  Presentation b203 = build_presentation("boundary", {2, 0, 3});
  Word u = parse_word("d2 s1 d1 d2 s1", b203.alphabet);
  Word v = parse_word("s1 d1 d2 s1 d2", b203.alphabet);
  EqualityVerdict cr3p =
      bfs_equal(b203, u, v, Mode::group, SearchLimits{14, 1000000});
  CHECK(cr3p.equal);
  CHECK(replay_path(b203, u, cr3p.path) == v);

  // the handle identity d1 d2^2 d1 = d2 d1^2 d2 on the closed torus
  Presentation c21 = build_presentation("closed", {2, 1});
  Word hu = parse_word("d1 d2^2 d1", c21.alphabet);
  Word hv = parse_word("d2 d1^2 d2", c21.alphabet);
  EqualityVerdict handle =
      bfs_equal(c21, hu, hv, Mode::group, SearchLimits{12, 2000000});
  CHECK(handle.equal);
  CHECK(replay_path(c21, hu, handle.path) == hv);
}

TEST_CASE("monoid mode preconditions") {
  Presentation v2 = build_presentation("torus2_v2", {});
  Word neg = parse_word("a^-1", v2.alphabet);
  CHECK_THROWS_AS(congruence_class(v2, neg, Mode::monoid,
                                   SearchLimits{8, 100}),
                  std::invalid_argument);
  Presentation app = build_presentation("appendix_closed", {2, 1});
  Word b1 = parse_word("b1", app.alphabet);
  CHECK_THROWS_AS(bfs_equal(app, b1, b1, Mode::monoid,
                            SearchLimits{8, 100}),
                  std::invalid_argument);
}

TEST_CASE("reachable members stay equal under the solver") {
  Presentation cand = build_presentation("torus2_complete_candidate", {});
  const SolverInstance& inst = SolverInstance::torus3();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int i = 0; i < 50; ++i) {
    Word w;
    for (int k = len(rng); k-- > 0;) w.push_back(pos(gen(rng)));
    CongruenceClass c =
        congruence_class(cand, w, Mode::monoid, default_limits(w, w));
    REQUIRE(c.closed);
    NormalForm nf = normal_form(inst, w);
    for (const Word& m : c.members) {
      CHECK(normal_form(inst, m) == nf);
    }
  }
}
