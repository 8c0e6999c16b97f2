#ifndef SBW_REWRITE_HPP_
#define SBW_REWRITE_HPP_

#include <cstddef>
#include <vector>

#include "sbw/lattice.hpp"
#include "sbw/presentation.hpp"

namespace sbw {

struct SearchLimits {
  std::size_t max_word_length;
  std::size_t max_states;
};

/// Default bounds: 2 * max(|u|,|v|) + 4 letters, one million states.
SearchLimits default_limits(const Word& u, const Word& v);

enum class Mode { monoid, group };

struct RewriteStep {
  enum class Kind { relation, insert_pair, delete_pair };
  Kind kind;
  std::size_t pos;
  std::size_t rel = 0;     // relation index (Kind::relation)
  bool forward = true;     // lhs -> rhs when true
  int gen = 0;             // inserted generator (Kind::insert_pair)
  bool neg_first = false;  // insert x^-1 x rather than x x^-1
};

/// Applies one step to w; throws if the step does not match.  Replaying a
/// whole path is the machine check that an Equal verdict is sound.
Word apply_step(const Presentation& p, const Word& w, const RewriteStep& s);
Word replay_path(const Presentation& p, Word w,
                 const std::vector<RewriteStep>& path);

struct EqualityVerdict {
  bool equal = false;
  // Set when the exponent vectors differ modulo the abelianization
  // lattice, which certifies inequality soundly in both modes.
  bool certified_unequal = false;
  std::vector<RewriteStep> path;  // transforms u into v when equal
  std::size_t states_explored = 0;
};

/// Sound semi-decision for word equality: breadth-first search over
/// relation applications (and free insertions/deletions in group mode).
/// An Equal verdict is unconditionally sound; anything else claims
/// nothing beyond the certified_unequal flag.
EqualityVerdict bfs_equal(const Presentation& p, const Word& u, const Word& v,
                          Mode mode, const SearchLimits& limits);

struct CongruenceClass {
  std::vector<Word> members;  // sorted shortlex
  bool closed = false;        // true only if no move was suppressed by caps
  std::size_t states_explored = 0;
};

/// Breadth-first closure of {w} under relation replacement.  When closed,
/// members is the exact congruence class.
CongruenceClass congruence_class(const Presentation& p, const Word& w,
                                 Mode mode, const SearchLimits& limits);

/// Columns exponent_vector(lhs) - exponent_vector(rhs) per relation.
IntegerLattice abelianization_lattice(const Presentation& p);

}  // namespace sbw

#endif  // SBW_REWRITE_HPP_
