#include "sbw/rewrite.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace sbw {

SearchLimits default_limits(const Word& u, const Word& v) {
  return SearchLimits{2 * std::max(u.size(), v.size()) + 4, 1000000};
}

IntegerLattice abelianization_lattice(const Presentation& p) {
  std::vector<std::vector<long long>> cols;
  for (const Relation& r : p.relations) {
    auto l = exponent_vector(r.lhs, p.alphabet.size());
    auto rr = exponent_vector(r.rhs, p.alphabet.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      l[i] -= rr[i];
    }
    cols.push_back(std::move(l));
  }
  return IntegerLattice(p.alphabet.size(), std::move(cols));
}

namespace {

bool matches_at(const Word& w, const Word& pat, std::size_t pos) {
  if (pos + pat.size() > w.size()) return false;
  for (std::size_t i = 0; i < pat.size(); ++i) {
    if (!(w[pos + i] == pat[i])) return false;
  }
  return true;
}

Word splice(const Word& w, std::size_t pos, std::size_t len,
            const Word& repl) {
  Word out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len),
             w.end());
  return out;
}

Letter pos_letter(std::size_t g) { return Letter{static_cast<int>(g), +1}; }
Letter neg_letter(std::size_t g) { return Letter{static_cast<int>(g), -1}; }

// Enumerates successor words in a fixed deterministic order.  Sets
// *suppressed when a legal move was skipped because of the length cap.
template <typename Fn>
void for_each_neighbor(const Presentation& p, const Word& w, Mode mode,
                       std::size_t max_len, bool* suppressed, Fn&& fn) {
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const Relation& rel = p.relations[r];
    for (int dir = 0; dir < 2; ++dir) {
      const Word& from = dir == 0 ? rel.lhs : rel.rhs;
      const Word& to = dir == 0 ? rel.rhs : rel.lhs;
      for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (!matches_at(w, from, pos)) continue;
        if (w.size() - from.size() + to.size() > max_len) {
          *suppressed = true;
          continue;
        }
        fn(splice(w, pos, from.size(), to),
           RewriteStep{RewriteStep::Kind::relation, pos, r, dir == 0, 0,
                       false});
      }
    }
  }
  if (mode == Mode::group) {
    for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
      if (w[pos].gen == w[pos + 1].gen && w[pos].sign == -w[pos + 1].sign) {
        fn(splice(w, pos, 2, {}),
           RewriteStep{RewriteStep::Kind::delete_pair, pos, 0, true, 0,
                       false});
      }
    }
    if (w.size() + 2 > max_len) {
      *suppressed = true;
    } else {
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
          for (int nf = 0; nf < 2; ++nf) {
            Word pair = nf == 0
                            ? Word{pos_letter(g), neg_letter(g)}
                            : Word{neg_letter(g), pos_letter(g)};
            fn(splice(w, pos, 0, pair),
               RewriteStep{RewriteStep::Kind::insert_pair, pos, 0, true,
                           static_cast<int>(g), nf == 1});
          }
        }
      }
    }
  }
}

void check_mode_preconditions(const Presentation& p, Mode mode) {
  if (mode == Mode::monoid) {
    for (const Relation& r : p.relations) {
      if (!is_positive_word(r.lhs) || !is_positive_word(r.rhs)) {
        throw std::invalid_argument(
            "monoid mode requires a positive presentation");
      }
    }
  }
}

}  // namespace

Word apply_step(const Presentation& p, const Word& w, const RewriteStep& s) {
  switch (s.kind) {
    case RewriteStep::Kind::relation: {
      const Relation& rel = p.relations.at(s.rel);
      const Word& from = s.forward ? rel.lhs : rel.rhs;
      const Word& to = s.forward ? rel.rhs : rel.lhs;
      if (!matches_at(w, from, s.pos)) {
        throw std::invalid_argument("relation step does not match");
      }
      return splice(w, s.pos, from.size(), to);
    }
    case RewriteStep::Kind::delete_pair: {
      if (s.pos + 1 >= w.size() || w[s.pos].gen != w[s.pos + 1].gen ||
          w[s.pos].sign != -w[s.pos + 1].sign) {
        throw std::invalid_argument("delete step does not match");
      }
      return splice(w, s.pos, 2, {});
    }
    case RewriteStep::Kind::insert_pair: {
      if (s.pos > w.size()) {
        throw std::invalid_argument("insert position out of range");
      }
      Word pair = s.neg_first ? Word{neg(s.gen), pos(s.gen)}
                              : Word{pos(s.gen), neg(s.gen)};
      return splice(w, s.pos, 0, pair);
    }
  }
  throw std::logic_error("unreachable");
}

Word replay_path(const Presentation& p, Word w,
                 const std::vector<RewriteStep>& path) {
  for (const RewriteStep& s : path) {
    w = apply_step(p, w, s);
  }
  return w;
}

EqualityVerdict bfs_equal(const Presentation& p, const Word& u, const Word& v,
                          Mode mode, const SearchLimits& limits) {
  validate_word(u, p.alphabet);
  validate_word(v, p.alphabet);
  check_mode_preconditions(p, mode);
  if (mode == Mode::monoid &&
      (!is_positive_word(u) || !is_positive_word(v))) {
    throw std::invalid_argument("monoid mode requires positive words");
  }

  EqualityVerdict verdict;
  {
    auto eu = exponent_vector(u, p.alphabet.size());
    auto ev = exponent_vector(v, p.alphabet.size());
    for (std::size_t i = 0; i < eu.size(); ++i) {
      eu[i] -= ev[i];
    }
    if (!abelianization_lattice(p).contains(eu)) {
      verdict.certified_unequal = true;
      return verdict;
    }
  }

  struct Node {
    int parent;
    RewriteStep step;
  };
  std::vector<Word> states;
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  const std::string goal = word_key(v);
  int found = -1;

  auto emit = [&](const Word& w, int parent, const RewriteStep& step) {
    std::string key = word_key(w);
    auto [it, fresh] = seen.emplace(key, static_cast<int>(states.size()));
    if (!fresh) return;
    states.push_back(w);
    nodes.push_back(Node{parent, step});
    if (found < 0 && key == goal) {
      found = it->second;
    }
  };

  emit(u, -1, RewriteStep{});
  std::size_t head = 0;
  bool suppressed = false;
  while (found < 0 && head < states.size() &&
         states.size() < limits.max_states) {
    const int cur = static_cast<int>(head);
    Word w = states[head];
    ++head;
    for_each_neighbor(p, w, mode, limits.max_word_length, &suppressed,
                      [&](Word nw, const RewriteStep& step) {
                        if (found < 0 &&
                            states.size() < limits.max_states) {
                          emit(nw, cur, step);
                        }
                      });
  }
  verdict.states_explored = states.size();
  if (found >= 0) {
    verdict.equal = true;
    std::vector<RewriteStep> rev;
    for (int at = found; nodes[static_cast<std::size_t>(at)].parent >= 0;
         at = nodes[static_cast<std::size_t>(at)].parent) {
      rev.push_back(nodes[static_cast<std::size_t>(at)].step);
    }
    verdict.path.assign(rev.rbegin(), rev.rend());
  }
  return verdict;
}

CongruenceClass congruence_class(const Presentation& p, const Word& w,
                                 Mode mode, const SearchLimits& limits) {
  validate_word(w, p.alphabet);
  check_mode_preconditions(p, mode);
  if (mode == Mode::monoid && !is_positive_word(w)) {
    throw std::invalid_argument("monoid mode requires a positive word");
  }

  std::vector<Word> states;
  std::unordered_map<std::string, int> seen;
  auto emit = [&](const Word& x) {
    auto [it, fresh] =
        seen.emplace(word_key(x), static_cast<int>(states.size()));
    if (fresh) states.push_back(x);
  };
  emit(w);

  bool suppressed = false;
  bool exhausted = true;
  std::size_t head = 0;
  while (head < states.size()) {
    if (states.size() >= limits.max_states) {
      exhausted = false;
      break;
    }
    Word cur = states[head];
    ++head;
    for_each_neighbor(p, cur, mode, limits.max_word_length, &suppressed,
                      [&](Word nw, const RewriteStep&) {
                        if (states.size() < limits.max_states) {
                          emit(nw);
                        } else {
                          exhausted = false;
                        }
                      });
  }
  if (head < states.size()) {
    exhausted = false;
  }

  CongruenceClass out;
  out.states_explored = states.size();
  out.closed = exhausted && !suppressed;
  out.members = std::move(states);
  std::sort(out.members.begin(), out.members.end(), shortlex_less);
  return out;
}

}  // namespace sbw
