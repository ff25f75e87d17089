#pragma once

#include <optional>

#include "tropcount/matrix.hpp"

namespace tropcount {

// Exact solution of A x = b over Q. `particular` is present iff the system
// is consistent; `kernel` is always a basis of ker A.
struct LinearSolution {
  std::optional<RatVec> particular;
  std::vector<RatVec> kernel;
  std::size_t rank = 0;

  bool consistent() const { return particular.has_value(); }
  bool unique() const { return consistent() && kernel.empty(); }
};

LinearSolution solve_rational(const RatMatrix& a, const RatVec& b);

// Exact inverse; throws on singular input.
RatMatrix invert_rational(const RatMatrix& a);

}  // namespace tropcount
