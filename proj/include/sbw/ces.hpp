#ifndef SBW_CES_HPP_
#define SBW_CES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sbw/words.hpp"

namespace sbw {

/// A centrally-extended universal Coxeter group: generators are involutions
/// modulo the central squares, and the squares generate a free abelian
/// central subgroup with the given basis.  Each lattice relation r asserts
/// prod_x x^(2 r[x]) = 1 among the central squares.
///
/// Built-in instances:
///   torus3: alphabet {a,b,c}, relation c^2 = a^2 b^2, basis {a,b}
///   free2:  alphabet {a,b}, no relations, basis {a,b}
/// Other instances are constructible but only the two built-ins are
/// oracle-certified against their presentations.
class SolverInstance {
 public:
  SolverInstance(Alphabet alphabet,
                 std::vector<std::vector<long long>> lattice_relations,
                 std::vector<std::string> central_basis);

  static const SolverInstance& torus3();
  static const SolverInstance& free2();
  static const SolverInstance& by_name(const std::string& name);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t basis_size() const noexcept { return basis_.size(); }
  int basis_gen(std::size_t i) const { return basis_.at(i); }

  /// Reduce a full-alphabet square-exponent vector to canonical basis
  /// coordinates using the lattice relations.
  std::vector<long long> canon_central(
      const std::vector<long long>& full) const;

  /// True when the weight homomorphisms l-hat are consistent with the
  /// lattice relations (always true for the built-ins).
  bool weights_valid() const noexcept { return weights_valid_; }

 private:
  Alphabet alphabet_;
  std::vector<int> basis_;          // generator index per basis coordinate
  std::vector<int> nonbasis_;       // remaining generator indices
  // Elimination columns in permuted coordinates (non-basis first), pivot 1
  // at the i-th non-basis coordinate.
  std::vector<std::vector<long long>> elim_;
  bool weights_valid_ = false;
  std::string name_ = "custom";

  friend const SolverInstance& builtin_instance(const std::string&);
};

/// The unique representative a^2k b^2l [w]: central basis exponents plus a
/// reduced Coxeter word (no two adjacent letters equal).
struct NormalForm {
  std::vector<long long> central;
  std::vector<int> word;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

bool normal_form_less(const NormalForm& a, const NormalForm& b);

NormalForm nf_identity(const SolverInstance& inst);

/// Rewrites x^-1 as x^-2 x, deletes adjacent equal letters collecting the
/// squares centrally, and reduces the central vector to basis coordinates.
/// The result is independent of reduction order.
NormalForm normal_form(const SolverInstance& inst, const Word& w);

NormalForm multiply(const SolverInstance& inst, const NormalForm& g,
                    const NormalForm& h);

NormalForm invert(const SolverInstance& inst, const NormalForm& g);

/// The positive word a^2k b^2l w over the instance alphabet (k, l may be
/// negative, in which case those letters carry negative signs).
Word to_word(const SolverInstance& inst, const NormalForm& g);

struct WeightMap {
  // l-hat value per basis generator, in basis order.
  std::vector<long long> by_basis;
  // L_{a,b}(g) = a^(l-hat_b) b^(l-hat_a) as a signed word.
  Word l_word;
};

WeightMap weights(const SolverInstance& inst, const NormalForm& g);

/// Deletes adjacent equal letters until none remain (confluent).
std::vector<int> coxeter_reduce(const std::vector<int>& letters);

/// Conjugacy in the universal Coxeter group by cyclic reduction and
/// rotation.  A returned witness w satisfies w u w^-1 = v in W, where
/// w^-1 is reverse(w).
std::optional<std::vector<int>> coxeter_conjugate(const std::vector<int>& u,
                                                  const std::vector<int>& v);

/// Conjugacy test with witness: succeeds iff the weight maps agree and the
/// Coxeter projections are conjugate; the witness is the minimal lift
/// (0, w) and reproduces h by exact multiplication.
std::optional<NormalForm> conjugacy(const SolverInstance& inst,
                                    const NormalForm& g, const NormalForm& h);

/// Membership in the image of the positive monoid: all central
/// coordinates nonnegative.
bool is_positive(const SolverInstance& inst, const NormalForm& g);

enum class Side { left, right };

/// Divisibility in the monoid; both arguments must be positive.
bool divides(const SolverInstance& inst, const NormalForm& d,
             const NormalForm& g, Side side);

struct GarsideDecomposition {
  long long j;
  NormalForm positive_part;  // min central coordinate is 0
};

/// G = c^-2j g with g positive and not divisible by the full central
/// square; j = -min(central), unique.
GarsideDecomposition garside_decompose(const SolverInstance& inst,
                                       const NormalForm& g);

struct WeightBounds {
  // Bound on l-hat_x per basis generator (same order as the basis); empty
  // optional means unbounded in that coordinate.
  std::vector<std::optional<long long>> per_basis;
  std::optional<long long> total;  // bound on the sum of all l-hat values
};

/// All positive elements within the weight bounds, sorted.  Requires either
/// a total bound or a bound for every basis generator.
std::vector<NormalForm> enumerate_positive(const SolverInstance& inst,
                                           const WeightBounds& bounds);

/// Divisor set of a positive element, computed by bounded enumeration.
std::vector<NormalForm> divisor_set(const SolverInstance& inst,
                                    const NormalForm& g, Side side);

}  // namespace sbw

#endif  // SBW_CES_HPP_
