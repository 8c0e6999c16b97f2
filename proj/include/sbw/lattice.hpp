#ifndef SBW_LATTICE_HPP_
#define SBW_LATTICE_HPP_

#include <cstddef>
#include <vector>

namespace sbw {

/// Integer column lattice in echelon (Hermite-style) form, supporting exact
/// membership tests.  Columns are reduced by gcd elimination row by row; a
/// pivot column has zeros above its pivot row.
class IntegerLattice {
 public:
  IntegerLattice(std::size_t dim, std::vector<std::vector<long long>> columns);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Pivot row of the i-th echelon column.
  std::size_t pivot_row(std::size_t i) const { return pivots_.at(i); }
  const std::vector<long long>& column(std::size_t i) const {
    return cols_.at(i);
  }

  bool contains(std::vector<long long> v) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<long long>> cols_;  // echelon columns
  std::vector<std::size_t> pivots_;           // pivot row per column
};

}  // namespace sbw

#endif  // SBW_LATTICE_HPP_
