#include <stdexcept>
#include "doctest.h"
#include "sbw/catalog.hpp"
#include "sbw/ces.hpp"
#include "sbw/morphisms.hpp"

using namespace sbw;

namespace {

std::string img(const GeneratorMap& m, const std::string& gen) {
  return print_word(m.images.at(static_cast<std::size_t>(m.source.index(gen))),
                    m.target);
}

}  // namespace

TEST_CASE("built-in map images") {
  GeneratorMap psi = builtin_map("psi", {2, 1, 1});
  CHECK(img(psi, "s1") == "s1");
  CHECK(img(psi, "a1") == "d1^-1");
  CHECK(img(psi, "b1") == "d2^-1");

  GeneratorMap psi322 = builtin_map("psi", {3, 2, 2});
  CHECK(img(psi322, "z1") == "d1^-1");
  CHECK(img(psi322, "a1") == "d2^-1");
  CHECK(img(psi322, "b1") == "d3^-1");
  CHECK(img(psi322, "a2") == "d4^-1");
  CHECK(img(psi322, "b2") == "d5^-1");

  GeneratorMap inv = builtin_map("torus_abc_inv", {});
  CHECK(img(inv, "s1") == "c^-1 a b");
  CHECK(img(inv, "d1") == "b");
  CHECK(img(inv, "d2") == "a");

  GeneratorMap abc = builtin_map("torus_abc", {});
  CHECK(img(abc, "a") == "d2");
  CHECK(img(abc, "b") == "d1");
  CHECK(img(abc, "c") == "d2 d1 s1^-1");

  GeneratorMap theta = builtin_map("closed_theta", {2, 1});
  CHECK(img(theta, "t1") == "s1^-1");
  CHECK(img(theta, "b1") == "d1^-1 s1^-1");
  CHECK(img(theta, "b2") == "d2 s1^-1");

  CHECK_THROWS_AS(builtin_map("psi", {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_map("unknown", {}), std::invalid_argument);
}

TEST_CASE("substitution application") {
  GeneratorMap psi = builtin_map("psi", {2, 1, 1});
  CHECK(apply_map(psi, parse_word("a1 a1^-1", psi.source)).empty());
  CHECK(print_word(apply_map(psi, parse_word("a1 b1", psi.source)),
                   psi.target) == "d1^-1 d2^-1");

  GeneratorMap inv = builtin_map("torus_abc_inv", {});
  CHECK(print_word(apply_map(inv, parse_word("s1", inv.source)),
                   inv.target) == "c^-1 a b");
  CHECK_THROWS_AS(apply_map(inv, Word{pos(5)}), std::invalid_argument);
}

TEST_CASE("psi and psibar are mutually inverse on generators") {
  for (long long n = 2; n <= 4; ++n) {
    for (long long g = 0; g <= 2; ++g) {
      for (long long p = 1; p <= 3; ++p) {
        GeneratorMap psi = builtin_map("psi", {n, g, p});
        GeneratorMap psibar = builtin_map("psibar", {n, g, p});
        GeneratorMap round = compose(psi, psibar);
        for (std::size_t i = 0; i < round.source.size(); ++i) {
          CHECK(round.images[i] == Word{pos(static_cast<int>(i))});
        }
        GeneratorMap round2 = compose(psibar, psi);
        for (std::size_t i = 0; i < round2.source.size(); ++i) {
          CHECK(round2.images[i] == Word{pos(static_cast<int>(i))});
        }
      }
    }
  }
}

TEST_CASE("torus relabeling verifies against the solver") {
  GeneratorMap inv = builtin_map("torus_abc_inv", {});
  Presentation torus2 = build_presentation("torus_n", {2});
  auto reports = verify_map(inv, torus2, SolverInstance::torus3());
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CHECK(r.status == RelatorStatus::verified);
  }

  // and in the other direction the abc relations hold among the images
  GeneratorMap abc = builtin_map("torus_abc", {});
  GeneratorMap round = compose(inv, abc);
  for (std::size_t i = 0; i < round.source.size(); ++i) {
    NormalForm got = normal_form(SolverInstance::torus3(), round.images[i]);
    NormalForm want = normal_form(SolverInstance::torus3(),
                                  Word{pos(static_cast<int>(i))});
    CHECK(got == want);
  }
}

TEST_CASE("closed-surface map composed into the solver") {
  GeneratorMap theta = builtin_map("closed_theta", {2, 1});
  GeneratorMap inv = builtin_map("torus_abc_inv", {});
  GeneratorMap composed = compose(inv, theta);
  Presentation a2 = build_presentation("appendix_closed", {2, 1});
  auto reports = verify_map(composed, a2, SolverInstance::torus3());
  REQUIRE(reports.size() == 4);  // R2, R3, R3, TR
  for (const auto& r : reports) {
    CAPTURE(r.label);
    CHECK(r.status == RelatorStatus::verified);
  }
}

TEST_CASE("planar substitution verified by bounded search") {
  // small planar cases resolve in one rewrite step each
  for (const auto& params : std::vector<std::vector<long long>>{
           {2, 2, 1}, {3, 2, 1}}) {
    GeneratorMap rho = builtin_map("planar_rho", params);
    Presentation source = source_presentation_for("planar_rho", params);
    Presentation target = target_presentation_for("planar_rho", params);
    auto reports = verify_map(rho, source, target, SearchLimits{16, 200000});
    CHECK(!reports.empty());
    for (const auto& r : reports) {
      CAPTURE(r.label);
      CHECK(r.status == RelatorStatus::verified);
    }
  }
}

TEST_CASE("bfs prover stays honest on deep relators") {
  GeneratorMap psi = builtin_map("psi", {2, 1, 1});
  Presentation source = source_presentation_for("psi", {2, 1, 1});
  Presentation target = target_presentation_for("psi", {2, 1, 1});
  auto reports = verify_map(psi, source, target, SearchLimits{12, 20000});
  REQUIRE(reports.size() == 3);  // R2(a), R2(b), R4
  for (const auto& r : reports) {
    // whatever the verdict, a Verified one replays; Unknown is allowed
    CHECK((r.status == RelatorStatus::verified ||
           r.status == RelatorStatus::unknown));
  }
}

TEST_CASE("composition rejects mismatched alphabets") {
  GeneratorMap psi = builtin_map("psi", {2, 1, 1});
  GeneratorMap inv = builtin_map("torus_abc_inv", {});
  CHECK_THROWS_AS(compose(psi, inv), std::invalid_argument);
}
