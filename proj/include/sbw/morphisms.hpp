#ifndef SBW_MORPHISMS_HPP_
#define SBW_MORPHISMS_HPP_

#include <string>
#include <vector>

#include "sbw/ces.hpp"
#include "sbw/presentation.hpp"
#include "sbw/rewrite.hpp"

namespace sbw {

/// A substitution of generators by words, encoding a homomorphism between
/// the groups the presentations define.
struct GeneratorMap {
  Alphabet source;
  Alphabet target;
  std::vector<Word> images;  // one per source generator
  std::string provenance;
};

/// Built-in maps:
///   psi n g p        appendix_boundary gens -> boundary gens
///   psibar n g p     boundary gens -> appendix_boundary gens
///   closed_theta n g appendix_closed gens -> closed gens
///   torus_abc        {a,b,c} -> {s1,d1,d2}
///   torus_abc_inv    {s1,d1,d2} -> {a,b,c}
///   planar_rho n p i1 i2 ...   planar gens -> boundary(n,0,p) gens
GeneratorMap builtin_map(const std::string& name,
                         const std::vector<long long>& params);

/// Homomorphic substitution followed by free reduction.
Word apply_map(const GeneratorMap& m, const Word& w);

/// outer after inner; source alphabets must match up.
GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner);

/// The natural source and target presentations for a named built-in map.
Presentation source_presentation_for(const std::string& name,
                                     const std::vector<long long>& params);
Presentation target_presentation_for(const std::string& name,
                                     const std::vector<long long>& params);

enum class RelatorStatus { verified, unknown };

struct RelatorReport {
  std::string label;
  Word lhs_image;
  Word rhs_image;
  RelatorStatus status;
};

/// Checks each relation of the source under the map.  The solver prover is
/// exact; the bfs prover (group mode) reports unknown on bound exhaustion
/// and never claims failure.
std::vector<RelatorReport> verify_map(const GeneratorMap& m,
                                      const Presentation& source,
                                      const SolverInstance& prover);
std::vector<RelatorReport> verify_map(const GeneratorMap& m,
                                      const Presentation& source,
                                      const Presentation& target,
                                      const SearchLimits& limits);

}  // namespace sbw

#endif  // SBW_MORPHISMS_HPP_
