#pragma once

#include <cstddef>
#include <vector>

#include "tropcount/rational.hpp"

namespace tropcount {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major matrix over arbitrary-precision integers. Entries are
// exact; no rounding ever occurs.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += c * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& c);
  void add_col_multiple(std::size_t a, std::size_t b, const Int& c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  // Exact determinant by cofactor expansion; requires a square matrix.
  // Fine up to the desk-scale sizes this project needs.
  Int det_cofactor() const;
  // Exact determinant via fraction-free Bareiss elimination.
  Int det() const;

  IntVec apply(const IntVec& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

// Same shape as IntMatrix with rational entries, kept canonical (lowest
// terms, positive denominator) by mpq_class arithmetic.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RatMatrix operator*(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const = default;

  RatVec apply(const RatVec& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> entries_;
};

RatVec rat_vec(std::initializer_list<long> values);
IntVec int_vec(std::initializer_list<long> values);
IntVec add(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& v);
bool is_zero(const IntVec& v);

}  // namespace tropcount
