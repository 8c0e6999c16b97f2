#include "sbw/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sbw {

namespace {

void axpy(std::vector<long long>& x, long long q,
          const std::vector<long long>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] -= q * y[i];
  }
}

bool is_zero(const std::vector<long long>& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t dim,
                               std::vector<std::vector<long long>> columns)
    : dim_(dim) {
  for (const auto& c : columns) {
    if (c.size() != dim) {
      throw std::invalid_argument("lattice column has wrong dimension");
    }
  }
  std::vector<std::vector<long long>> work = std::move(columns);
  for (std::size_t row = 0; row < dim_; ++row) {
    // Gcd-eliminate the current row across the remaining columns.
    for (;;) {
      std::size_t best = work.size();
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (work[j][row] != 0 &&
            (best == work.size() ||
             std::llabs(work[j][row]) < std::llabs(work[best][row]))) {
          best = j;
        }
      }
      if (best == work.size()) {
        break;  // row is all zero
      }
      bool reduced_any = false;
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (j == best || work[j][row] == 0) {
          continue;
        }
        long long q = work[j][row] / work[best][row];
        axpy(work[j], q, work[best]);
        reduced_any = true;
      }
      if (!reduced_any) {
        // Unique nonzero entry in this row: take it as the pivot column.
        std::vector<long long> piv = std::move(work[best]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
        if (piv[row] < 0) {
          for (auto& x : piv) {
            x = -x;
          }
        }
        pivots_.push_back(row);
        cols_.push_back(std::move(piv));
        break;
      }
    }
    // Drop columns that became zero.
    work.erase(std::remove_if(work.begin(), work.end(), is_zero), work.end());
    if (work.empty()) {
      break;
    }
  }
}

bool IntegerLattice::contains(std::vector<long long> v) const {
  if (v.size() != dim_) {
    throw std::invalid_argument("vector has wrong dimension");
  }
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    std::size_t r = pivots_[i];
    long long p = cols_[i][r];
    if (v[r] % p != 0) {
      return false;
    }
    axpy(v, v[r] / p, cols_[i]);
  }
  return is_zero(v);
}

}  // namespace sbw
