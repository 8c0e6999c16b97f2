#ifndef SBW_CATALOG_HPP_
#define SBW_CATALOG_HPP_

#include <string>
#include <vector>

#include "sbw/presentation.hpp"

namespace sbw {

/// Families:
///   boundary n g p          surface with boundary, generators s*, d*
///   boundary_star n g p kmax  boundary plus the CR3_k / CR3'_k families
///   planar n p i1 i2 ...    planar surface, generators s*, r* (i's give I)
///   closed n g              closed surface
///   closed_g2 n g           closed surface, genus >= 2 variant
///   torus_n n               torus, n strands
///   torus2_v1               two-strand torus group in s1, d1, d2
///   torus2_v2               two-strand torus group in a, b, c
///   torus2_complete_candidate  v2 plus b^2 a^2 = c^2, monoid
///   free_central2           the two-generator central-square monoid
///   appendix_boundary n g p
///   appendix_closed n g
/// A relation template mentioning a generator outside the instantiated
/// alphabet is dropped and the drop is recorded in provenance.
Presentation build_presentation(const std::string& family,
                                const std::vector<long long>& params);

/// Accepts "family", "family(p1,p2,...)" or "family p1 p2 ...".
Presentation build_presentation_spec(const std::string& spec);

std::vector<std::string> catalog_families();

}  // namespace sbw

#endif  // SBW_CATALOG_HPP_
