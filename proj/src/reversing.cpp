#include "sbw/reversing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "sbw/ces.hpp"

namespace sbw {

ComplementTable::ComplementTable(const Presentation& p)
    : alphabet_(p.alphabet) {
  Analysis a = analyze_presentation(p);
  if (!a.positive) {
    throw std::invalid_argument(
        "complement table requires a positive presentation");
  }
  const std::size_t n = alphabet_.size();
  cells_.resize(n * n);
  auto record = [&](const Word& l, const Word& r) {
    if (l.empty() || r.empty() || l[0].gen == r[0].gen) {
      return;
    }
    Word vp(l.begin() + 1, l.end());
    Word up(r.begin() + 1, r.end());
    cells_[static_cast<std::size_t>(l[0].gen) * n +
           static_cast<std::size_t>(r[0].gen)]
        .emplace_back(std::move(vp), std::move(up));
  };
  for (const Relation& rel : p.relations) {
    record(rel.lhs, rel.rhs);
    record(rel.rhs, rel.lhs);
  }
}

const std::vector<std::pair<Word, Word>>& ComplementTable::entries(
    int u, int v) const {
  if (u == v) {
    throw std::invalid_argument(
        "the diagonal carries only the deletion rule");
  }
  return cells_.at(static_cast<std::size_t>(u) * alphabet_.size() +
                   static_cast<std::size_t>(v));
}

namespace {

bool is_redex(const Word& w, std::size_t i) {
  return w[i].sign < 0 && w[i + 1].sign > 0;
}

Word splice(const Word& w, std::size_t pos, std::size_t len,
            const Word& repl) {
  Word out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(),
             w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len),
             w.end());
  return out;
}

}  // namespace

ReversalVerdict reverse_search(const ComplementTable& t, const Word& w,
                               const ReversingLimits& limits) {
  validate_word(w, t.alphabet());

  std::vector<Word> configs;
  std::vector<int> parent;
  std::unordered_map<std::string, int> seen;
  int empty_at = -1;
  auto emit = [&](const Word& x, int par) {
    auto [it, fresh] =
        seen.emplace(word_key(x), static_cast<int>(configs.size()));
    if (!fresh) return;
    configs.push_back(x);
    parent.push_back(par);
    if (x.empty() && empty_at < 0) {
      empty_at = it->second;
    }
  };
  emit(w, -1);

  ReversalVerdict out;
  out.status = ReversalStatus::bound_exceeded;
  std::vector<Word> terminals;
  bool truncated = false;

  std::size_t head = 0;
  std::size_t level_end = configs.size();
  std::size_t depth = 0;

  while (empty_at < 0 && head < configs.size()) {
    if (head == level_end) {
      ++depth;
      level_end = configs.size();
      if (depth > limits.max_depth) {
        truncated = true;
        break;
      }
    }
    const Word cur = configs[head];
    const int cur_id = static_cast<int>(head);
    ++head;
    bool has_redex = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!is_redex(cur, i)) continue;
      has_redex = true;
      if (cur[i].gen == cur[i + 1].gen) {
        if (configs.size() >= limits.max_configurations) {
          truncated = true;
        } else {
          emit(splice(cur, i, 2, {}), cur_id);
        }
        continue;
      }
      const auto& cell = t.entries(cur[i].gen, cur[i + 1].gen);
      if (cell.empty()) {
        // This adjacency can never be cleared; record the empty cell.
        std::pair<int, int> pr{cur[i].gen, cur[i + 1].gen};
        if (std::find(out.stuck_cells.begin(), out.stuck_cells.end(), pr) ==
            out.stuck_cells.end()) {
          out.stuck_cells.push_back(pr);
        }
      }
      for (const auto& [vp, up] : cell) {
        if (configs.size() >= limits.max_configurations) {
          truncated = true;
          continue;
        }
        Word repl = concat(vp, invert_word(up));
        emit(splice(cur, i, 2, repl), cur_id);
      }
    }
    if (!has_redex) {
      terminals.push_back(cur);
    }
  }

  out.configurations = configs.size();
  if (empty_at >= 0) {
    out.status = ReversalStatus::reversed_to_empty;
    std::vector<Word> path;
    for (int at = empty_at; at >= 0; at = parent[static_cast<std::size_t>(at)]) {
      path.push_back(configs[static_cast<std::size_t>(at)]);
    }
    out.trace.assign(path.rbegin(), path.rend());
    return out;
  }
  if (truncated || head < configs.size()) {
    out.status = ReversalStatus::bound_exceeded;
    return out;
  }
  std::sort(terminals.begin(), terminals.end(), shortlex_less);
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  out.terminals = std::move(terminals);
  out.status = out.terminals.empty() ? ReversalStatus::stuck
                                     : ReversalStatus::terminal;
  return out;
}

namespace {

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
  return out;  // shortlex sorted by construction
}

}  // namespace

PositiveWordPartition PositiveWordPartition::from_solver(
    const SolverInstance& inst, const Presentation& p, int length_bound) {
  if (!(inst.alphabet() == p.alphabet)) {
    throw std::invalid_argument(
        "solver instance alphabet does not match the presentation");
  }
  PositiveWordPartition part;
  part.words_ = positive_words_up_to(p.alphabet, length_bound);
  std::map<NormalForm, int, bool (*)(const NormalForm&, const NormalForm&)>
      ids(normal_form_less);
  for (const Word& w : part.words_) {
    NormalForm nf = normal_form(inst, w);
    auto [it, fresh] = ids.emplace(nf, static_cast<int>(ids.size()));
    part.cls_.push_back(it->second);
  }
  return part;
}

PositiveWordPartition PositiveWordPartition::from_congruence(
    const Presentation& p, int length_bound, const SearchLimits& limits) {
  PositiveWordPartition part;
  part.words_ = positive_words_up_to(p.alphabet, length_bound);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < part.words_.size(); ++i) {
    index.emplace(word_key(part.words_[i]), i);
  }
  part.cls_.assign(part.words_.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < part.words_.size(); ++i) {
    if (part.cls_[i] >= 0) continue;
    CongruenceClass c = congruence_class(p, part.words_[i], Mode::monoid,
                                         limits);
    if (!c.closed) {
      throw std::runtime_error(
          "oracle unavailable: a congruence class did not close within "
          "limits");
    }
    for (const Word& m : c.members) {
      auto it = index.find(word_key(m));
      if (it != index.end()) {
        part.cls_[it->second] = next;
      }
    }
    ++next;
  }
  return part;
}

ScanReport completeness_scan(const Presentation& p,
                             const PositiveWordPartition& oracle,
                             int length_bound, const ReversingLimits& limits,
                             bool parallel) {
  ComplementTable table(p);
  const auto& words = oracle.words();
  for (const Word& w : words) {
    if (static_cast<int>(w.size()) > length_bound) {
      throw std::invalid_argument("oracle bound below scan bound");
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (oracle.equal(i, j)) {
        pairs.emplace_back(i, j);
      }
    }
  }

  std::vector<unsigned char> status(pairs.size(), 0);
  auto kernel = [&](std::size_t k) {
    const Word& u = words[pairs[k].first];
    const Word& v = words[pairs[k].second];
    ReversalVerdict verdict =
        reverse_search(table, concat(invert_word(u), v), limits);
    status[k] = static_cast<unsigned char>(verdict.status);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) {
      kernel(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      kernel(k);
    }
  }

  ScanReport report;
  report.words = words.size();
  report.equal_pairs = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto st = static_cast<ReversalStatus>(status[k]);
    auto pr = std::make_pair(words[pairs[k].first], words[pairs[k].second]);
    switch (st) {
      case ReversalStatus::reversed_to_empty:
        break;
      case ReversalStatus::terminal:
        report.counterexamples.push_back(std::move(pr));
        break;
      case ReversalStatus::stuck:
        report.stuck.push_back(std::move(pr));
        break;
      case ReversalStatus::bound_exceeded:
        report.bound_exceeded.push_back(std::move(pr));
        break;
    }
  }
  return report;
}

}  // namespace sbw
