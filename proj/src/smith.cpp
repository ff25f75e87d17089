#include "tropcount/smith.hpp"

namespace tropcount {

namespace {

// Nearest-integer quotient keeps remainders at most half the pivot.
Int rounded_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += 1;
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  if (input.empty())
    throw TropError(ErrorCode::Invariant, "smith_normal_form: empty matrix");
  std::size_t m = input.rows(), n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  std::size_t t = 0;
  const std::size_t steps = std::min(m, n);

  while (t < steps) {
    // minimal |entry| != 0 in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), a.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a.at(i, t) == 0) continue;
      Int q = rounded_quotient(a.at(i, t), a.at(t, t));
      a.add_row_multiple(i, t, -q);
      u.add_row_multiple(i, t, -q);
      if (a.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a.at(t, j) == 0) continue;
      Int q = rounded_quotient(a.at(t, j), a.at(t, t));
      a.add_col_multiple(j, t, -q);
      v.add_col_multiple(j, t, -q);
      if (a.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; repick pivot

    // pivot must divide the whole trailing block
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n && divides; ++j)
        if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t())) {
          a.add_row_multiple(t, i, 1);
          u.add_row_multiple(t, i, 1);
          divides = false;
        }
    if (!divides) continue;

    if (a.at(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }

  SmithDecomposition out;
  out.U = std::move(u);
  out.V = std::move(v);
  out.D = std::move(a);
  out.divisors.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.divisors.push_back(out.D.at(i, i));
  return out;
}

std::optional<Int> cokernel_order(const IntMatrix& a) {
  if (a.rows() == 0) return Int(1);
  if (a.cols() == 0) return std::nullopt;
  SmithDecomposition snf = smith_normal_form(a);
  if (snf.rank() != a.rows()) return std::nullopt;
  Int order(1);
  for (const Int& d : snf.divisors)
    if (d != 0) order *= d;
  return order;
}

FreeQuotient is_free_quotient(const IntMatrix& generators, std::size_t ambient_rank) {
  FreeQuotient out;
  if (generators.rows() == 0) {
    // zero sublattice: the quotient is all of Z^n
    out.is_free = true;
    out.projection = IntMatrix::identity(ambient_rank);
    out.lattice_rank = 0;
    return out;
  }
  if (generators.cols() != ambient_rank)
    throw TropError(ErrorCode::Invariant, "sublattice generators of wrong rank");
  SmithDecomposition snf = smith_normal_form(generators);
  std::size_t rank = snf.rank();
  out.lattice_rank = rank;
  out.is_free = true;
  for (const Int& d : snf.divisors)
    if (d != 0 && d != 1) out.is_free = false;
  if (!out.is_free) return out;
  // Rows of V^{-1} form a basis adapted to the sublattice; coordinates with
  // respect to the trailing ones are x -> x * V, so the projection matrix is
  // the transpose of V's trailing columns.
  out.projection = IntMatrix(ambient_rank - rank, ambient_rank);
  for (std::size_t j = 0; j < ambient_rank - rank; ++j)
    for (std::size_t l = 0; l < ambient_rank; ++l)
      out.projection.at(j, l) = snf.V.at(l, rank + j);
  return out;
}

}  // namespace tropcount
