#pragma once

#include <optional>

#include "tropcount/matrix.hpp"

namespace tropcount {

// U * A * V = D with U, V unimodular and D diagonal (possibly rectangular).
// Divisors are nonnegative, sorted by divisibility, zeros last.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Int> divisors;  // length min(rows, cols)

  std::size_t rank() const {
    std::size_t r = 0;
    for (const Int& d : divisors)
      if (d != 0) ++r;
    return r;
  }
};

// Pivot choice: minimal absolute value among nonzero candidates, to keep
// coefficient growth in check.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// |coker(A)| as a map Z^cols -> Z^rows: the product of the nonzero divisors
// when A has full row rank, nullopt ("infinite") otherwise.
std::optional<Int> cokernel_order(const IntMatrix& a);

struct FreeQuotient {
  bool is_free;
  // When free: a (n - rank) x n integer matrix realizing Z^n / rowspan(L),
  // whose rows complete a basis. Kernel of the map is exactly the sublattice.
  IntMatrix projection;
  std::size_t lattice_rank;
};

// Rows of `generators` span a sublattice of Z^n; decides torsion-freeness of
// the quotient and produces the quotient projection.
FreeQuotient is_free_quotient(const IntMatrix& generators, std::size_t ambient_rank);

}  // namespace tropcount
