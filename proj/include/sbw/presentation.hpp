#ifndef SBW_PRESENTATION_HPP_
#define SBW_PRESENTATION_HPP_

#include <string>
#include <vector>

#include "sbw/words.hpp"

namespace sbw {

enum class Kind { group, monoid };

struct Relation {
  std::string label;  // family label, e.g. BR2, CR3, SCR1, FGR, R4
  Word lhs;
  Word rhs;
};

/// A finite presentation.  In a monoid-kind presentation every relation word
/// is positive; the relation orientation is kept exactly as stored because
/// word reversing is orientation-sensitive.
struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relations;
  Kind kind = Kind::group;
  std::string provenance;

  void validate() const;  // throws on malformed relation words
};

struct Analysis {
  bool positive;
  bool homogeneous;
  // One column per relation: exponent_vector(lhs) - exponent_vector(rhs).
  std::vector<std::vector<long long>> abelianization;
};

Analysis analyze_presentation(const Presentation& p);

/// Text format (bit-exact read/write):
///   kind: group|monoid
///   gens: <name> <name> ...
///   rel <LABEL>: <word> = <word>
std::string write_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

}  // namespace sbw

#endif  // SBW_PRESENTATION_HPP_
