#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropcount/rational.hpp"

namespace tropcount {

// Truncated series in pi = t^(1/ram) with exact rational coefficients.
// Exponents are integers in pi-units; everything at or above `truncation`
// is unknown. Arithmetic tracks precision conservatively: results never
// claim coefficients the operands could not determine.
class TSeries {
 public:
  TSeries() = default;

  static TSeries zero(int ram, long trunc);
  static TSeries constant(const Rat& c, int ram, long trunc);
  static TSeries monomial(const Rat& c, long exponent, int ram, long trunc);

  int ramification() const { return ram_; }
  long truncation() const { return trunc_; }

  // no nonzero coefficient is known (the series may still be anything of
  // order >= truncation)
  bool known_zero() const { return coeffs_.empty(); }
  // smallest known exponent with nonzero coefficient; truncation when none
  long order() const { return coeffs_.empty() ? trunc_ : lo_; }
  bool is_unit() const { return !known_zero() && order() == 0; }
  Rat leading_coefficient() const;

  // valuation in t-units; nullopt means "vanishes to working precision"
  std::optional<Rat> valuation() const;

  // known coefficient at a pi-exponent; throws PrecisionError beyond the
  // truncation
  Rat coefficient(long exponent) const;

  TSeries operator-() const;
  TSeries operator+(const TSeries& other) const;
  TSeries operator-(const TSeries& other) const;
  TSeries operator*(const TSeries& other) const;
  TSeries operator/(const TSeries& other) const { return *this * other.inverse(); }

  TSeries inverse() const;  // throws PrecisionError if known_zero
  TSeries pow(long k) const;
  TSeries shifted(long k) const;  // multiply by pi^k
  TSeries scaled(const Rat& c) const;
  // forget everything at or above the given exponent
  TSeries truncated(long trunc) const;

  // exact equality of the known ranges up to `below` (throws if either
  // operand is not known that far)
  bool agrees_below(const TSeries& other, long below) const;
  // least exponent where the two differ; min truncation if none
  long difference_order(const TSeries& other) const;

  bool identical(const TSeries& other) const {
    return ram_ == other.ram_ && trunc_ == other.trunc_ && lo_ == other.lo_ &&
           coeffs_ == other.coeffs_;
  }

  std::string str() const;

 private:
  void normalize();
  void check_compatible(const TSeries& other) const;

  int ram_ = 1;
  long lo_ = 0;
  long trunc_ = 0;
  std::vector<Rat> coeffs_;  // coeffs_[k] is the coefficient of pi^(lo_+k)
};

}  // namespace tropcount
