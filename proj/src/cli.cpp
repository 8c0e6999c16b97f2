#include "sbw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "sbw/acceptance.hpp"
#include "sbw/catalog.hpp"
#include "sbw/ces.hpp"
#include "sbw/morphisms.hpp"
#include "sbw/presentation.hpp"
#include "sbw/reversing.hpp"
#include "sbw/rewrite.hpp"

namespace sbw {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kBounds = 2;
constexpr int kUsage = 64;

std::size_t env_max_states() {
  if (const char* s = std::getenv("SBW_MAX_STATES")) {
    long long v = std::atoll(s);
    if (v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return 1000000;
}

Presentation load_presentation_arg(const std::string& arg) {
  std::ifstream f(arg);
  if (f.good()) {
    std::ostringstream text;
    text << f.rdbuf();
    return parse_presentation(text.str());
  }
  return build_presentation_spec(arg);
}

std::vector<long long> parse_params(const std::string& s) {
  std::string t = s;
  for (char& c : t) {
    if (c == ',' || c == '{' || c == '}' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream in(t);
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  return out;
}

std::string print_nf(const SolverInstance& inst, const NormalForm& g,
                     bool raw) {
  std::ostringstream out;
  for (std::size_t i = 0; i < inst.basis_size(); ++i) {
    out << inst.alphabet().name(
               static_cast<std::size_t>(inst.basis_gen(i)))
        << "^" << 2 * g.central[i] << " ";
  }
  out << "[";
  Word w;
  for (int x : g.word) w.push_back(pos(x));
  if (!w.empty()) {
    out << print_word(w, inst.alphabet(), raw);
  }
  out << "]";
  return out.str();
}

struct ScanOptions {
  std::string pres;
  std::string oracle = "solver";
  int bound = 4;
  std::size_t depth = 200;
  std::size_t max_configs = 100000;
  bool serial = false;
};

const SolverInstance& instance_for_alphabet(const Alphabet& a) {
  if (a == SolverInstance::torus3().alphabet()) {
    return SolverInstance::torus3();
  }
  if (a == SolverInstance::free2().alphabet()) {
    return SolverInstance::free2();
  }
  throw std::invalid_argument(
      "solver oracle unavailable: alphabet matches no built-in instance");
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  std::ostringstream out;
  int code = kOk;

  CLI::App app{"sbw: positive presentations of surface braid groups, "
               "bounded rewriting, word reversing, and the exact B2-torus "
               "solver"};
  app.require_subcommand(1);
  bool raw = false;
  app.add_flag("--raw", raw, "machine mode: exact letter sequences");

  // present
  auto* present = app.add_subcommand("present", "emit a catalog presentation");
  std::string family, params_text;
  present->add_option("--family", family, "catalog family")->required();
  present->add_option("--params", params_text, "family parameters");
  present->callback([&] {
    out << write_presentation(
        build_presentation(family, parse_params(params_text)));
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "positivity, homogeneity, "
                                                "abelianization");
  std::string an_pres;
  analyze->add_option("--pres", an_pres, "presentation file or family spec")
      ->required();
  analyze->callback([&] {
    Presentation p = load_presentation_arg(an_pres);
    Analysis a = analyze_presentation(p);
    out << "positive: " << (a.positive ? "true" : "false") << "\n";
    out << "homogeneous: " << (a.homogeneous ? "true" : "false") << "\n";
    out << "relations: " << p.relations.size() << "\n";
    out << "abelianization:\n";
    for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
      out << p.alphabet.name(g) << ":";
      for (const auto& col : a.abelianization) {
        out << " " << col[g];
      }
      out << "\n";
    }
  });

  // eq
  auto* eq = app.add_subcommand("eq", "bounded word equality search");
  std::string eq_pres, eq_mode = "monoid", eq_u, eq_v;
  std::size_t eq_states = 0, eq_len = 0;
  eq->add_option("--pres", eq_pres)->required();
  eq->add_option("--mode", eq_mode)->check(CLI::IsMember({"monoid", "group"}));
  eq->add_option("--max-states", eq_states);
  eq->add_option("--max-length", eq_len);
  eq->add_option("u", eq_u)->required();
  eq->add_option("v", eq_v)->required();
  eq->callback([&] {
    Presentation p = load_presentation_arg(eq_pres);
    Word u = parse_word(eq_u, p.alphabet);
    Word v = parse_word(eq_v, p.alphabet);
    SearchLimits lim = default_limits(u, v);
    lim.max_states = eq_states ? eq_states : env_max_states();
    if (eq_len) lim.max_word_length = eq_len;
    EqualityVerdict verdict = bfs_equal(
        p, u, v, eq_mode == "monoid" ? Mode::monoid : Mode::group, lim);
    if (verdict.equal) {
      out << "equal: true\n"
          << "steps: " << verdict.path.size() << "\n";
      code = kOk;
    } else if (verdict.certified_unequal) {
      out << "equal: false\ncertificate: abelianization\n";
      code = kFalse;
    } else {
      out << "equal: not-within-bounds\n";
      code = kBounds;
    }
    out << "states: " << verdict.states_explored << "\n";
  });

  // class
  auto* cls = app.add_subcommand("class", "congruence class closure");
  std::string cl_pres, cl_mode, cl_w;
  std::size_t cl_states = 0, cl_len = 0;
  cls->add_option("--pres", cl_pres)->required();
  cls->add_option("--mode", cl_mode)
      ->check(CLI::IsMember({"monoid", "group"}));
  cls->add_option("--max-states", cl_states);
  cls->add_option("--max-length", cl_len);
  cls->add_option("w", cl_w)->required();
  cls->callback([&] {
    Presentation p = load_presentation_arg(cl_pres);
    Word w = parse_word(cl_w, p.alphabet);
    Mode mode = cl_mode.empty()
                    ? (p.kind == Kind::monoid ? Mode::monoid : Mode::group)
                    : (cl_mode == "monoid" ? Mode::monoid : Mode::group);
    SearchLimits lim = default_limits(w, w);
    lim.max_states = cl_states ? cl_states : env_max_states();
    if (cl_len) lim.max_word_length = cl_len;
    CongruenceClass c = congruence_class(p, w, mode, lim);
    out << "closed: " << (c.closed ? "true" : "false") << "\n";
    out << "size: " << c.members.size() << "\n";
    for (const Word& m : c.members) {
      out << print_word(m, p.alphabet, raw) << "\n";
    }
    code = c.closed ? kOk : kBounds;
  });

  // reverse
  auto* rev = app.add_subcommand("reverse", "word reversing search");
  std::string rv_pres, rv_w;
  std::size_t rv_depth = 200, rv_configs = 100000;
  rev->add_option("--pres", rv_pres)->required();
  rev->add_option("--depth", rv_depth);
  rev->add_option("--max-configs", rv_configs);
  rev->add_option("w", rv_w)->required();
  rev->callback([&] {
    Presentation p = load_presentation_arg(rv_pres);
    ComplementTable t(p);
    Word w = parse_word(rv_w, p.alphabet);
    ReversalVerdict v =
        reverse_search(t, w, ReversingLimits{rv_depth, rv_configs});
    switch (v.status) {
      case ReversalStatus::reversed_to_empty:
        out << "status: reversed-to-empty\n";
        out << "steps: " << (v.trace.empty() ? 0 : v.trace.size() - 1)
            << "\n";
        for (const Word& x : v.trace) {
          out << print_word(x, p.alphabet, raw) << "\n";
        }
        code = kOk;
        break;
      case ReversalStatus::terminal:
        out << "status: terminal\n";
        out << "terminals: " << v.terminals.size() << "\n";
        for (const Word& x : v.terminals) {
          out << print_word(x, p.alphabet, raw) << "\n";
        }
        code = kFalse;
        break;
      case ReversalStatus::stuck:
        out << "status: stuck\n";
        for (auto [a, b] : v.stuck_cells) {
          out << "empty-cell: " << p.alphabet.name(static_cast<std::size_t>(a))
              << " " << p.alphabet.name(static_cast<std::size_t>(b)) << "\n";
        }
        code = kFalse;
        break;
      case ReversalStatus::bound_exceeded:
        out << "status: bound-exceeded\n";
        code = kBounds;
        break;
    }
    out << "configurations: " << v.configurations << "\n";
  });

  // complete-scan
  auto* scan = app.add_subcommand(
      "complete-scan", "bounded empirical completeness scan");
  ScanOptions so;
  scan->add_option("--pres", so.pres)->required();
  scan->add_option("--oracle", so.oracle)
      ->check(CLI::IsMember({"solver", "bfs"}));
  scan->add_option("--bound", so.bound);
  scan->add_option("--depth", so.depth);
  scan->add_option("--max-configs", so.max_configs);
  scan->add_flag("--serial", so.serial, "use the serial reference kernel");
  scan->callback([&] {
    Presentation p = load_presentation_arg(so.pres);
    PositiveWordPartition part =
        so.oracle == "solver"
            ? PositiveWordPartition::from_solver(
                  instance_for_alphabet(p.alphabet), p, so.bound)
            : PositiveWordPartition::from_congruence(
                  p, so.bound,
                  SearchLimits{2 * static_cast<std::size_t>(so.bound) + 4,
                               env_max_states()});
    ScanReport rep = completeness_scan(
        p, part, so.bound, ReversingLimits{so.depth, so.max_configs},
        !so.serial);
    out << "words: " << rep.words << "\n";
    out << "equal-pairs: " << rep.equal_pairs << "\n";
    out << "counterexamples: " << rep.counterexamples.size() << "\n";
    for (const auto& [u, v] : rep.counterexamples) {
      out << print_word(u, p.alphabet, raw) << " = "
          << print_word(v, p.alphabet, raw) << "\n";
    }
    out << "stuck: " << rep.stuck.size() << "\n";
    for (const auto& [u, v] : rep.stuck) {
      out << print_word(u, p.alphabet, raw) << " = "
          << print_word(v, p.alphabet, raw) << "\n";
    }
    out << "bound-exceeded: " << rep.bound_exceeded.size() << "\n";
    for (const auto& [u, v] : rep.bound_exceeded) {
      out << print_word(u, p.alphabet, raw) << " = "
          << print_word(v, p.alphabet, raw) << "\n";
    }
    code = rep.bound_exceeded.empty() ? kOk : kBounds;
  });

  // nf
  auto* nf = app.add_subcommand("nf", "solver normal form");
  std::string nf_inst = "torus3", nf_w;
  nf->add_option("--instance", nf_inst)
      ->check(CLI::IsMember({"torus3", "free2"}));
  nf->add_option("w", nf_w)->required();
  nf->callback([&] {
    const SolverInstance& inst = SolverInstance::by_name(nf_inst);
    NormalForm g = normal_form(inst, parse_word(nf_w, inst.alphabet()));
    out << print_nf(inst, g, raw) << "\n";
  });

  // eq2
  auto* eq2 = app.add_subcommand("eq2", "exact solver equality");
  std::string e2_inst = "torus3", e2_u, e2_v;
  eq2->add_option("--instance", e2_inst)
      ->check(CLI::IsMember({"torus3", "free2"}));
  eq2->add_option("u", e2_u)->required();
  eq2->add_option("v", e2_v)->required();
  eq2->callback([&] {
    const SolverInstance& inst = SolverInstance::by_name(e2_inst);
    NormalForm g = normal_form(inst, parse_word(e2_u, inst.alphabet()));
    NormalForm h = normal_form(inst, parse_word(e2_v, inst.alphabet()));
    out << print_nf(inst, g, raw) << "\n" << print_nf(inst, h, raw) << "\n";
    bool equal = g == h;
    out << "equal: " << (equal ? "true" : "false") << "\n";
    code = equal ? kOk : kFalse;
  });

  // conj
  auto* conj_cmd = app.add_subcommand("conj", "exact conjugacy with witness");
  std::string cj_inst = "torus3", cj_g, cj_h;
  conj_cmd->add_option("--instance", cj_inst)
      ->check(CLI::IsMember({"torus3", "free2"}));
  conj_cmd->add_option("gword", cj_g)->required();
  conj_cmd->add_option("hword", cj_h)->required();
  conj_cmd->callback([&] {
    const SolverInstance& inst = SolverInstance::by_name(cj_inst);
    NormalForm g = normal_form(inst, parse_word(cj_g, inst.alphabet()));
    NormalForm h = normal_form(inst, parse_word(cj_h, inst.alphabet()));
    auto w = conjugacy(inst, g, h);
    if (!w) {
      out << "none\n";
      code = kFalse;
      return;
    }
    Word witness;
    for (int x : w->word) witness.push_back(pos(x));
    out << print_word(witness, inst.alphabet(), raw) << "\n";
    code = kOk;
  });

  // garside
  auto* gar = app.add_subcommand("garside",
                                 "central-square decomposition G = c^-2j g");
  std::string ga_inst = "torus3", ga_w;
  gar->add_option("--instance", ga_inst)
      ->check(CLI::IsMember({"torus3", "free2"}));
  gar->add_option("w", ga_w)->required();
  gar->callback([&] {
    const SolverInstance& inst = SolverInstance::by_name(ga_inst);
    NormalForm g = normal_form(inst, parse_word(ga_w, inst.alphabet()));
    GarsideDecomposition d = garside_decompose(inst, g);
    out << "j: " << d.j << "\n";
    out << "g: " << print_nf(inst, d.positive_part, raw) << "\n";
  });

  // divisors
  auto* div = app.add_subcommand("divisors",
                                 "divisor sets by bounded enumeration");
  std::string dv_inst = "torus3", dv_w;
  div->add_option("--instance", dv_inst)
      ->check(CLI::IsMember({"torus3", "free2"}));
  div->add_option("w", dv_w)->required();
  div->callback([&] {
    const SolverInstance& inst = SolverInstance::by_name(dv_inst);
    NormalForm g = normal_form(inst, parse_word(dv_w, inst.alphabet()));
    auto left = divisor_set(inst, g, Side::left);
    auto right = divisor_set(inst, g, Side::right);
    out << "left-divisors: " << left.size() << "\n";
    for (const NormalForm& d : left) {
      out << print_nf(inst, d, raw) << "\n";
    }
    out << "right-divisors: " << right.size() << "\n";
    for (const NormalForm& d : right) {
      out << print_nf(inst, d, raw) << "\n";
    }
    out << "balanced: " << (left == right ? "true" : "false") << "\n";
  });

  // verify-map
  auto* vm = app.add_subcommand("verify-map",
                                "relator-by-relator map verification");
  std::string vm_map, vm_params, vm_prover = "solver";
  std::size_t vm_states = 0;
  vm->add_option("--map", vm_map)->required();
  vm->add_option("--params", vm_params);
  vm->add_option("--prover", vm_prover)
      ->check(CLI::IsMember({"solver", "bfs"}));
  vm->add_option("--max-states", vm_states);
  vm->callback([&] {
    auto params = parse_params(vm_params);
    GeneratorMap m = builtin_map(vm_map, params);
    Presentation source = source_presentation_for(vm_map, params);
    std::vector<RelatorReport> reports;
    if (vm_prover == "solver") {
      reports = verify_map(m, source, instance_for_alphabet(m.target));
    } else {
      Presentation target = target_presentation_for(vm_map, params);
      SearchLimits lim{0, vm_states ? vm_states : env_max_states()};
      std::size_t longest = 2;
      for (const Relation& r : source.relations) {
        longest = std::max({longest, apply_map(m, r.lhs).size(),
                            apply_map(m, r.rhs).size()});
      }
      lim.max_word_length = 2 * longest + 4;
      reports = verify_map(m, source, target, lim);
    }
    std::size_t verified = 0;
    for (const auto& r : reports) {
      bool ok = r.status == RelatorStatus::verified;
      verified += ok ? 1 : 0;
      out << r.label << ": " << (ok ? "Verified" : "Unknown") << "\n";
    }
    out << "verified: " << verified << "/" << reports.size() << "\n";
    code = verified == reports.size() ? kOk : kBounds;
  });

  // scan-cr3k
  auto* cr3k = app.add_subcommand(
      "scan-cr3k", "singleton-class experiment for the CR3_k family");
  long long ck_n = 2, ck_g = 0, ck_p = 3, ck_kmax = 4;
  cr3k->add_option("--n", ck_n);
  cr3k->add_option("--g", ck_g);
  cr3k->add_option("--p", ck_p);
  cr3k->add_option("--kmax", ck_kmax);
  cr3k->callback([&] {
    Presentation p = build_presentation("boundary", {ck_n, ck_g, ck_p});
    const long long m = 2 * ck_g + ck_p - 1;
    auto excluded = [&](long long r, long long s) {
      for (long long i = 0; i <= ck_g - 1; ++i) {
        if (r == ck_p + 2 * i && s == ck_p + 2 * i + 1) return true;
      }
      return false;
    };
    bool all_closed = true;
    for (long long k = 1; k <= ck_kmax; ++k) {
      for (long long r = 1; r <= m; ++r) {
        for (long long s = r + 1; s <= m; ++s) {
          if (excluded(r, s)) continue;
          std::string dr = "d" + std::to_string(r);
          std::string ds = "d" + std::to_string(s);
          std::ostringstream lhs, rhs;
          lhs << dr << " s1 " << dr << " " << ds << "^" << k << " s1";
          rhs << "s1 " << dr << " " << ds << "^" << k << " s1 " << dr;
          Word lw = parse_word(lhs.str(), p.alphabet);
          Word rw = parse_word(rhs.str(), p.alphabet);
          SearchLimits lim = default_limits(lw, lw);
          lim.max_states = env_max_states();
          CongruenceClass c = congruence_class(p, lw, Mode::monoid, lim);
          bool rhs_in = false;
          for (const Word& x : c.members) {
            if (x == rw) rhs_in = true;
          }
          all_closed = all_closed && c.closed;
          out << "k=" << k << " r=" << r << " s=" << s
              << " class-size=" << c.members.size()
              << " closed=" << (c.closed ? "true" : "false")
              << " rhs-in-class=" << (rhs_in ? "true" : "false") << "\n";
        }
      }
    }
    code = all_closed ? kOk : kBounds;
  });

  // acceptance
  auto* acc = app.add_subcommand("acceptance",
                                 "run the acceptance experiments");
  int acc_which = 0;
  acc->add_option("n", acc_which, "criterion number, all when omitted");
  acc->callback([&] {
    int failures = run_acceptance(acc_which, out);
    code = failures == 0 ? kOk : kFalse;
  });

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();  // allow --raw after the subcommand name
  }

  std::vector<std::string> argv = args;
  try {
    std::vector<const char*> cargv;
    cargv.push_back("sbw");
    for (const auto& a : argv) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    return CommandResult{kOk, app.help()};
  } catch (const CLI::ParseError& e) {
    return CommandResult{kUsage, std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return CommandResult{kUsage, std::string("error: ") + e.what() + "\n"};
  }
  return CommandResult{code, out.str()};
}

}  // namespace sbw
