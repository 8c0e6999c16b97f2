#ifndef SBW_ACCEPTANCE_HPP_
#define SBW_ACCEPTANCE_HPP_

#include <ostream>

namespace sbw {

/// Runs the desk-scale acceptance experiments (1..11), or all of them when
/// which == 0, printing one PASS/FAIL line per criterion.  Returns the
/// number of failures.
int run_acceptance(int which, std::ostream& out);

}  // namespace sbw

#endif  // SBW_ACCEPTANCE_HPP_
