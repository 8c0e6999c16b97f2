#include "sbw/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "sbw/catalog.hpp"
#include "sbw/ces.hpp"
#include "sbw/morphisms.hpp"
#include "sbw/reversing.hpp"
#include "sbw/rewrite.hpp"

namespace sbw {

namespace {

std::vector<Word> signed_words_up_to(const Alphabet& a, int length_bound) {
  std::vector<Word> out;
  out.push_back({});
  std::size_t begin = 0;
  for (int len = 1; len <= length_bound; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t g = 0; g < a.size(); ++g) {
        for (int sign : {+1, -1}) {
          Word w = out[i];
          w.push_back(Letter{static_cast<int>(g), sign});
          out.push_back(std::move(w));
        }
      }
    }
    begin = end;
  }
  return out;
}

std::vector<Word> positive_words_up_to(const Alphabet& a, int length_bound) {
  std::vector<Word> out;
  out.push_back({});
  std::size_t begin = 0;
  for (int len = 1; len <= length_bound; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t g = 0; g < a.size(); ++g) {
        Word w = out[i];
        w.push_back(pos(static_cast<int>(g)));
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

std::vector<std::vector<int>> reduced_words_up_to(std::size_t n_gens,
                                                  int length_bound) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& w) {
    if (static_cast<int>(w.size()) >= length_bound) return;
    for (std::size_t g = 0; g < n_gens; ++g) {
      if (!w.empty() && w.back() == static_cast<int>(g)) continue;
      w.push_back(static_cast<int>(g));
      out.push_back(w);
      rec(w);
      w.pop_back();
    }
  };
  std::vector<int> w;
  rec(w);
  return out;
}

struct Criterion {
  int number;
  std::string description;
  std::function<bool(std::ostream&)> run;
};

bool partitions_agree(const PositiveWordPartition& a,
                      const PositiveWordPartition& b) {
  if (a.words().size() != b.words().size()) return false;
  std::map<int, int> fwd, bwd;
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    int x = a.class_of(i);
    int y = b.class_of(i);
    auto [itf, freshf] = fwd.emplace(x, y);
    if (!freshf && itf->second != y) return false;
    auto [itb, freshb] = bwd.emplace(y, x);
    if (!freshb && itb->second != x) return false;
  }
  return true;
}

Word random_signed_word(std::mt19937& rng, std::size_t n_gens,
                        int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> gen_dist(0,
                                              static_cast<int>(n_gens) - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word w;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    w.push_back(Letter{gen_dist(rng), sign_dist(rng) ? +1 : -1});
  }
  return w;
}

bool criterion_word_problem(std::ostream& out) {
  const SolverInstance& inst = SolverInstance::torus3();
  const NormalForm id = nf_identity(inst);
  std::size_t checked = 0;
  for (const Word& w : signed_words_up_to(inst.alphabet(), 5)) {
    ++checked;
    bool solver_trivial = normal_form(inst, w) == id;
    auto ev = exponent_vector(w, 3);
    long long la = ev[1] + ev[2];  // l-hat_a counts b and c
    long long lb = ev[0] + ev[2];
    std::vector<int> proj;
    for (const Letter& x : w) proj.push_back(x.gen);
    bool criterion = la == 0 && lb == 0 && coxeter_reduce(proj).empty();
    if (solver_trivial != criterion) {
      out << "  mismatch on a word of length " << w.size() << "\n";
      return false;
    }
  }
  out << "  " << checked << " signed words agreed\n";
  return true;
}

bool check_partition(const SolverInstance& inst, const std::string& family,
                     std::ostream& out) {
  Presentation p = build_presentation(family, {});
  PositiveWordPartition solver =
      PositiveWordPartition::from_solver(inst, p, 6);
  PositiveWordPartition cong = PositiveWordPartition::from_congruence(
      p, 6, SearchLimits{16, 1000000});
  if (!partitions_agree(solver, cong)) {
    out << "  partitions differ for " << family << "\n";
    return false;
  }
  out << "  " << family << ": " << solver.words().size()
      << " words partition identically\n";
  return true;
}

bool criterion_solver_vs_oracle(std::ostream& out) {
  return check_partition(SolverInstance::torus3(), "torus2_v2", out) &&
         check_partition(SolverInstance::free2(), "free_central2", out);
}

bool criterion_center(std::ostream& out) {
  const SolverInstance& inst = SolverInstance::torus3();
  NormalForm a2{{1, 0}, {}};
  NormalForm b2{{0, 1}, {}};
  std::size_t checked = 0;
  for (const Word& w : positive_words_up_to(inst.alphabet(), 6)) {
    NormalForm g = normal_form(inst, w);
    if (!(multiply(inst, a2, g) == multiply(inst, g, a2)) ||
        !(multiply(inst, b2, g) == multiply(inst, g, b2))) {
      return false;
    }
    ++checked;
  }
  out << "  a^2 and b^2 commute with " << checked << " normal forms\n";
  return true;
}

bool criterion_conjugacy(std::ostream& out) {
  const SolverInstance& inst = SolverInstance::torus3();
  std::mt19937 rng(20250809);
  for (int trial = 0; trial < 1000; ++trial) {
    NormalForm g = normal_form(inst, random_signed_word(rng, 3, 8));
    NormalForm r = normal_form(inst, random_signed_word(rng, 3, 8));
    NormalForm h =
        multiply(inst, multiply(inst, r, g), invert(inst, r));
    auto w = conjugacy(inst, g, h);
    if (!w) {
      out << "  conjugate pair not detected (trial " << trial << ")\n";
      return false;
    }
    NormalForm back =
        multiply(inst, multiply(inst, *w, g), invert(inst, *w));
    if (!(back == h)) {
      out << "  witness failed to reproduce h (trial " << trial << ")\n";
      return false;
    }
  }
  int found = 0;
  while (found < 1000) {
    NormalForm g = normal_form(inst, random_signed_word(rng, 3, 8));
    NormalForm h = normal_form(inst, random_signed_word(rng, 3, 8));
    if (weights(inst, g).by_basis == weights(inst, h).by_basis) {
      continue;
    }
    ++found;
    if (conjugacy(inst, g, h)) {
      out << "  weight-distinct pair reported conjugate\n";
      return false;
    }
  }
  out << "  1000 conjugate pairs witnessed, 1000 weight-distinct pairs "
         "rejected\n";
  return true;
}

bool criterion_cancellativity(std::ostream& out) {
  const SolverInstance& inst = SolverInstance::torus3();
  std::vector<NormalForm> hs, gs;
  {
    std::map<std::string, NormalForm> seen;
    auto key = [&](const NormalForm& g) {
      std::ostringstream k;
      for (long long c : g.central) k << c << ",";
      k << ";";
      for (int x : g.word) k << x << ",";
      return k.str();
    };
    for (const Word& w : positive_words_up_to(inst.alphabet(), 3)) {
      NormalForm g = normal_form(inst, w);
      seen.emplace(key(g), g);
    }
    for (auto& [k, g] : seen) hs.push_back(g);
    seen.clear();
    for (const Word& w : positive_words_up_to(inst.alphabet(), 4)) {
      NormalForm g = normal_form(inst, w);
      seen.emplace(key(g), g);
    }
    for (auto& [k, g] : seen) gs.push_back(g);
  }
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      for (const NormalForm& h : hs) {
        if (multiply(inst, h, gs[i]) == multiply(inst, h, gs[j]) ||
            multiply(inst, gs[i], h) == multiply(inst, gs[j], h)) {
          return false;
        }
      }
    }
  }
  out << "  " << gs.size() << " distinct elements remain distinct under "
      << hs.size() << " translations on both sides\n";
  return true;
}

bool criterion_decompositions(std::ostream& out) {
  const SolverInstance& inst = SolverInstance::torus3();
  std::size_t checked = 0;
  for (const Word& w : positive_words_up_to(inst.alphabet(), 6)) {
    NormalForm g = normal_form(inst, w);
    if (!is_positive(inst, g)) {
      out << "  positive word with negative central part\n";
      return false;
    }
    if (!(normal_form(inst, to_word(inst, g)) == g)) {
      out << "  recomposition a^2k b^2l [w] changed the normal form\n";
      return false;
    }
    ++checked;
  }
  std::size_t garside_checked = 0;
  for (long long k = -3; k <= 3; ++k) {
    for (long long l = -3; l <= 3; ++l) {
      for (const auto& w : reduced_words_up_to(3, 4)) {
        NormalForm G{{k, l}, w};
        GarsideDecomposition d = garside_decompose(inst, G);
        const NormalForm& g = d.positive_part;
        long long m = *std::min_element(g.central.begin(), g.central.end());
        if (!is_positive(inst, g) || m != 0) {
          return false;
        }
        NormalForm c2j{{-d.j, -d.j}, {}};
        if (!(multiply(inst, c2j, g) == G)) {
          return false;
        }
        ++garside_checked;
      }
    }
  }
  out << "  " << checked << " recompositions and " << garside_checked
      << " central-square decompositions verified\n";
  return true;
}

bool criterion_garside_facts(std::ostream& out) {
  const SolverInstance& inst = SolverInstance::torus3();
  NormalForm a = normal_form(inst, parse_word("a", inst.alphabet()));
  NormalForm b = normal_form(inst, parse_word("b", inst.alphabet()));
  NormalForm c = normal_form(inst, parse_word("c", inst.alphabet()));
  NormalForm c2 = multiply(inst, c, c);
  auto left = divisor_set(inst, c2, Side::left);
  auto right = divisor_set(inst, c2, Side::right);
  if (!(left == right)) {
    out << "  c^2 is not balanced\n";
    return false;
  }
  auto contains = [&](const std::vector<NormalForm>& set,
                      const NormalForm& g) {
    return std::find(set.begin(), set.end(), g) != set.end();
  };
  if (!contains(left, a) || !contains(left, b) || !contains(left, c)) {
    out << "  D(c^2) is missing a generator\n";
    return false;
  }
  NormalForm ab2 = normal_form(inst, parse_word("a b^2", inst.alphabet()));
  NormalForm ba2 = normal_form(inst, parse_word("b a^2", inst.alphabet()));
  if (ab2 == ba2) {
    out << "  ab^2 and ba^2 are not distinct\n";
    return false;
  }
  for (const NormalForm& m : {ab2, ba2}) {
    if (!divides(inst, a, m, Side::left) ||
        !divides(inst, b, m, Side::left)) {
      out << "  ab^2 / ba^2 not a common right-multiple\n";
      return false;
    }
  }
  for (const NormalForm& m : {ab2, ba2}) {
    for (const NormalForm& d : divisor_set(inst, m, Side::left)) {
      if (d == m) continue;
      if (divides(inst, a, d, Side::left) &&
          divides(inst, b, d, Side::left)) {
        out << "  a common right-multiple properly divides ab^2 or ba^2\n";
        return false;
      }
    }
  }
  out << "  D(c^2) balanced with " << left.size()
      << " divisors; ab^2, ba^2 minimal distinct common multiples\n";
  return true;
}

bool criterion_derived_identities(std::ostream& out) {
  const SolverInstance& inst = SolverInstance::torus3();
  GeneratorMap m = builtin_map("torus_abc_inv", {});
  Presentation torus2 = build_presentation("torus_n", {2});
  auto reports = verify_map(m, torus2, inst);
  if (reports.size() != 4) {
    out << "  expected the 4 relators of the two-strand torus presentation\n";
    return false;
  }
  for (const auto& r : reports) {
    if (r.status != RelatorStatus::verified) {
      out << "  relator " << r.label << " failed\n";
      return false;
    }
  }
  auto solver_equal = [&](const std::string& u, const std::string& v) {
    Word uu = apply_map(m, parse_word(u, m.source));
    Word vv = apply_map(m, parse_word(v, m.source));
    return normal_form(inst, uu) == normal_form(inst, vv);
  };
  if (!solver_equal("d1 d2^2 d1", "d2 d1^2 d2")) {
    out << "  handle identity d1 d2^2 d1 = d2 d1^2 d2 failed\n";
    return false;
  }
  if (!solver_equal("d2 s1 d1 d2 s1", "d1 d2^2")) {
    out << "  skew relation d2 s1 d1 d2 s1 = d1 d2^2 failed\n";
    return false;
  }
  out << "  4 relators plus both derived identities verified\n";
  return true;
}

bool criterion_monoid_non_relation(std::ostream& out) {
  Presentation p = build_presentation("boundary", {2, 0, 3});
  Word w = parse_word("d1 s1 d1 d2^2 s1", p.alphabet);
  CongruenceClass c =
      congruence_class(p, w, Mode::monoid, SearchLimits{16, 1000000});
  if (!c.closed || c.members.size() != 1 || !(c.members[0] == w)) {
    out << "  class size " << c.members.size() << ", closed "
        << (c.closed ? "true" : "false") << "\n";
    return false;
  }
  out << "  class of d1 s1 d1 d2^2 s1 closed as a singleton\n";
  return true;
}

bool criterion_completeness_scans(std::ostream& out) {
  ReversingLimits limits;
  bool ok = true;

  Presentation v2 = build_presentation("torus2_v2", {});
  ScanReport rep_v2 = completeness_scan(
      v2,
      PositiveWordPartition::from_solver(SolverInstance::torus3(), v2, 4), 4,
      limits);
  Word b2a2 = parse_word("b^2 a^2", v2.alphabet);
  Word c2 = parse_word("c^2", v2.alphabet);
  bool found = false;
  for (const auto& [u, v] : rep_v2.counterexamples) {
    if (u == b2a2 && v == c2) found = true;
  }
  out << "  torus2_v2: " << rep_v2.counterexamples.size()
      << " counterexamples, " << rep_v2.stuck.size() << " stuck, "
      << rep_v2.bound_exceeded.size() << " bound-exceeded\n";
  if (!found) {
    out << "  missing counterexample pair (b^2 a^2, c^2)\n";
    ok = false;
  }

  Presentation braid = build_presentation("boundary", {3, 0, 1});
  ScanReport rep_braid = completeness_scan(
      braid,
      PositiveWordPartition::from_congruence(braid, 4,
                                             SearchLimits{12, 1000000}),
      4, limits);
  out << "  braid s1,s2: " << rep_braid.counterexamples.size()
      << " counterexamples, " << rep_braid.stuck.size() << " stuck, "
      << rep_braid.bound_exceeded.size() << " bound-exceeded\n";
  if (!rep_braid.counterexamples.empty()) {
    out << "  braid scan should report zero counterexamples\n";
    ok = false;
  }

  // Questions about these two remain open; the reports are recorded,
  // not asserted.
  Presentation cand = build_presentation("torus2_complete_candidate", {});
  ScanReport rep_cand = completeness_scan(
      cand,
      PositiveWordPartition::from_solver(SolverInstance::torus3(), cand, 4),
      4, limits);
  out << "  torus2_complete_candidate: " << rep_cand.counterexamples.size()
      << " counterexamples, " << rep_cand.stuck.size() << " stuck, "
      << rep_cand.bound_exceeded.size() << " bound-exceeded\n";

  Presentation fc2 = build_presentation("free_central2", {});
  ScanReport rep_fc2 = completeness_scan(
      fc2,
      PositiveWordPartition::from_solver(SolverInstance::free2(), fc2, 4), 4,
      limits);
  out << "  free_central2: " << rep_fc2.counterexamples.size()
      << " counterexamples, " << rep_fc2.stuck.size() << " stuck, "
      << rep_fc2.bound_exceeded.size() << " bound-exceeded\n";
  return ok;
}

bool criterion_catalog_structure(std::ostream& out) {
  if (build_presentation("boundary", {3, 2, 2}).alphabet.size() != 7) {
    out << "  boundary(3,2,2) generator count wrong\n";
    return false;
  }
  for (const auto& params : std::vector<std::vector<long long>>{
           {2, 2, 1}, {3, 3, 1, 3}, {4, 3, 2, 4}, {5, 4, 1, 3, 5}}) {
    if (!analyze_presentation(build_presentation("planar", params))
             .homogeneous) {
      out << "  planar presentation not homogeneous\n";
      return false;
    }
  }
  Presentation got = build_presentation("planar", {3, 3, 1, 3});
  std::vector<std::pair<std::string, std::string>> expected = {
      {"r1 r3", "r3 r1"},          {"r1 s2", "s2 r1"},
      {"r3 s1", "s1 r3"},          {"s1 s2 s1", "s2 s1 s2"},
      {"s1 r1 s1 r1", "r1 s1 r1 s1"},
      {"s2 r3 s2 r3", "r3 s2 r3 s2"}};
  if (got.relations.size() != expected.size()) {
    out << "  planar(3,3,{1,3}) has " << got.relations.size()
        << " relations, expected " << expected.size() << "\n";
    return false;
  }
  auto norm = [&](std::vector<std::pair<Word, Word>> rels) {
    std::sort(rels.begin(), rels.end(), [](const auto& x, const auto& y) {
      if (shortlex_less(x.first, y.first)) return true;
      if (shortlex_less(y.first, x.first)) return false;
      return shortlex_less(x.second, y.second);
    });
    return rels;
  };
  std::vector<std::pair<Word, Word>> got_rels, want_rels;
  for (const Relation& r : got.relations) {
    got_rels.emplace_back(r.lhs, r.rhs);
  }
  for (const auto& [l, r] : expected) {
    want_rels.emplace_back(parse_word(l, got.alphabet),
                           parse_word(r, got.alphabet));
  }
  if (norm(got_rels) != norm(want_rels)) {
    out << "  planar(3,3,{1,3}) relation multiset mismatch\n";
    return false;
  }
  out << "  generator counts, homogeneity, and the planar relation "
         "multiset check out\n";
  return true;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1, "word-problem criterion on signed words of length <= 5",
       criterion_word_problem},
      {2, "solver equality matches closed congruence classes (length <= 6)",
       criterion_solver_vs_oracle},
      {3, "a^2 and b^2 are central on positive words of length <= 6",
       criterion_center},
      {4, "randomized conjugacy detection with exact witnesses",
       criterion_conjugacy},
      {5, "cancellativity on both sides at desk scale",
       criterion_cancellativity},
      {6, "unique positive decomposition and central-square splitting",
       criterion_decompositions},
      {7, "c^2 balanced, D(c^2) generators, two minimal common multiples",
       criterion_garside_facts},
      {8, "derived identities through the torus relabeling map",
       criterion_derived_identities},
      {9, "CR3_2 left side closes as a singleton monoid class",
       criterion_monoid_non_relation},
      {10, "bounded completeness scans at length 4",
       criterion_completeness_scans},
      {11, "catalog structure: generator counts and planar relations",
       criterion_catalog_structure},
  };
  return cs;
}

}  // namespace

int run_acceptance(int which, std::ostream& out) {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    if (which != 0 && c.number != which) continue;
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << "  exception: " << e.what() << "\n";
    }
    out << (ok ? "PASS" : "FAIL") << "  " << c.number << "  "
        << c.description << "\n"
        << detail.str();
    failures += ok ? 0 : 1;
  }
  return failures;
}

}  // namespace sbw
