#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace msym {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... .
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<BigInt> invariant_factors;  // nonzero diagonal entries, positive
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

/// Elimination with smallest-magnitude pivots; exact.
SNFResult smith_normal_form(const IntMatrix& a, std::size_t cols = 0);

/// Sparse integer row: (column, value), columns increasing, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, long long>>;

/// Z^cols / (row lattice).
struct Cokernel {
  std::size_t cols = 0;
  std::size_t rank = 0;  // rank of the relation lattice
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
  std::vector<BigInt> invariant_factors;
};

/// Echelon insertion with unimodular gcd steps, removal of unit pivots, and a
/// dense Smith form on whatever remains. Scales to tens of thousands of short
/// rows.
Cokernel cokernel(std::size_t cols, const std::vector<SparseRow>& rows);

}  // namespace msym
