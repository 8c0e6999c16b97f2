#ifndef SBW_REVERSING_HPP_
#define SBW_REVERSING_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "sbw/presentation.hpp"
#include "sbw/rewrite.hpp"

namespace sbw {

/// Subword complements of a positive presentation: for distinct generators
/// u, v, the pairs (v', u') with u v' = v u' a relation read in either
/// orientation.  The pair (u, u) carries only the implicit deletion rule.
class ComplementTable {
 public:
  explicit ComplementTable(const Presentation& p);  // requires positive p

  const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// Entries for the ordered pair (u, v), u != v; deterministic order.
  const std::vector<std::pair<Word, Word>>& entries(int u, int v) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<std::pair<Word, Word>>> cells_;  // u * n + v
};

struct ReversingLimits {
  std::size_t max_depth = 200;
  std::size_t max_configurations = 100000;
};

enum class ReversalStatus {
  reversed_to_empty,  // some branch reaches the empty word
  terminal,           // exhaustive, no empty word; terminal forms collected
  stuck,              // exhaustive, no empty word, no terminal form
  bound_exceeded,
};

struct ReversalVerdict {
  ReversalStatus status;
  std::vector<Word> terminals;     // sorted; terminal = no x^-1 y adjacency
  std::vector<Word> trace;         // word sequence to empty, when reached
  // Generator pairs whose table cell was empty at some reachable redex.
  std::vector<std::pair<int, int>> stuck_cells;
  std::size_t configurations = 0;
};

/// Explores every reversing branch breadth-first with deduplication:
/// delete x^-1 x, or replace x^-1 y by v' u'^-1 for each table entry.
ReversalVerdict reverse_search(const ComplementTable& t, const Word& w,
                               const ReversingLimits& limits);

struct ScanReport {
  // Pairs (u, v) that are oracle-equal, classified by the outcome of
  // reversing u^-1 v.  Sorted shortlex, mutually disjoint.
  std::vector<std::pair<Word, Word>> counterexamples;   // terminal
  std::vector<std::pair<Word, Word>> stuck;             // stuck
  std::vector<std::pair<Word, Word>> bound_exceeded;
  std::size_t words = 0;
  std::size_t equal_pairs = 0;
};

/// Exact equality oracle on positive words, precomputed as a partition so
/// scans can run in parallel.  Class ids are dense and deterministic.
class PositiveWordPartition {
 public:
  /// Partition positive words of length <= bound by solver normal form.
  /// The instance alphabet must equal the presentation alphabet.
  static PositiveWordPartition from_solver(const class SolverInstance& inst,
                                           const Presentation& p,
                                           int length_bound);
  /// Partition by closed congruence classes; throws if some class does
  /// not close within the limits.
  static PositiveWordPartition from_congruence(const Presentation& p,
                                               int length_bound,
                                               const SearchLimits& limits);

  const std::vector<Word>& words() const noexcept { return words_; }
  int class_of(std::size_t word_index) const { return cls_.at(word_index); }
  bool equal(std::size_t i, std::size_t j) const {
    return cls_.at(i) == cls_.at(j);
  }

 private:
  std::vector<Word> words_;  // all positive words of length <= bound, sorted
  std::vector<int> cls_;
};

/// For every oracle-equal ordered pair within the length bound, records
/// whether u^-1 v reverses to empty.  The scan asserts nothing beyond the
/// bound.  The parallel path and the serial path produce identical reports.
ScanReport completeness_scan(const Presentation& p,
                             const PositiveWordPartition& oracle,
                             int length_bound, const ReversingLimits& limits,
                             bool parallel = true);

}  // namespace sbw

#endif  // SBW_REVERSING_HPP_
