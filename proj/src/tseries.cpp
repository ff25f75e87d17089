#include "tropcount/tseries.hpp"

#include <algorithm>
#include <sstream>

namespace tropcount {

TSeries TSeries::zero(int ram, long trunc) {
  if (ram < 1) throw TropError(ErrorCode::Invariant, "ramification must be positive");
  TSeries s;
  s.ram_ = ram;
  s.trunc_ = trunc;
  s.lo_ = trunc;
  return s;
}

TSeries TSeries::constant(const Rat& c, int ram, long trunc) {
  return monomial(c, 0, ram, trunc);
}

TSeries TSeries::monomial(const Rat& c, long exponent, int ram, long trunc) {
  TSeries s = zero(ram, trunc);
  if (c != 0 && exponent < trunc) {
    s.lo_ = exponent;
    s.coeffs_ = {c};
  }
  return s;
}

void TSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    lo_ += static_cast<long>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (static_cast<long>(coeffs_.size()) > trunc_ - lo_)
    coeffs_.resize(trunc_ - lo_ > 0 ? trunc_ - lo_ : 0);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) lo_ = trunc_;
}

void TSeries::check_compatible(const TSeries& other) const {
  if (ram_ != other.ram_)
    throw TropError(ErrorCode::Internal, "mixed ramification indices");
}

Rat TSeries::leading_coefficient() const {
  if (known_zero())
    throw TropError(ErrorCode::Precision, "leading coefficient of a vanishing series");
  return coeffs_.front();
}

std::optional<Rat> TSeries::valuation() const {
  if (known_zero()) return std::nullopt;
  return make_rat(Int(order()), Int(ram_));
}

Rat TSeries::coefficient(long exponent) const {
  if (exponent >= trunc_)
    throw TropError(ErrorCode::Precision, "coefficient beyond working precision");
  if (exponent < lo_ || exponent >= lo_ + static_cast<long>(coeffs_.size()))
    return Rat(0);
  return coeffs_[exponent - lo_];
}

TSeries TSeries::operator-() const {
  TSeries out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

TSeries TSeries::operator+(const TSeries& other) const {
  check_compatible(other);
  TSeries out;
  out.ram_ = ram_;
  out.trunc_ = std::min(trunc_, other.trunc_);
  long lo = std::min(order(), other.order());
  if (lo >= out.trunc_) {
    out.lo_ = out.trunc_;
    return out;
  }
  out.lo_ = lo;
  out.coeffs_.assign(out.trunc_ - lo, Rat(0));
  auto pour = [&](const TSeries& s) {
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
      long e = s.lo_ + static_cast<long>(k);
      if (e < out.trunc_) out.coeffs_[e - lo] += s.coeffs_[k];
    }
  };
  pour(*this);
  pour(other);
  out.normalize();
  return out;
}

TSeries TSeries::operator-(const TSeries& other) const { return *this + (-other); }

TSeries TSeries::operator*(const TSeries& other) const {
  check_compatible(other);
  long va = order(), vb = other.order();
  TSeries out;
  out.ram_ = ram_;
  out.trunc_ = std::min(va + other.trunc_, vb + trunc_);
  if (known_zero() || other.known_zero()) {
    out.lo_ = out.trunc_;
    return out;
  }
  out.lo_ = va + vb;
  if (out.lo_ >= out.trunc_) {
    out.lo_ = out.trunc_;
    return out;
  }
  out.coeffs_.assign(out.trunc_ - out.lo_, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    long ea = lo_ + static_cast<long>(i);
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      long e = ea + other.lo_ + static_cast<long>(j);
      if (e >= out.trunc_) break;
      if (other.coeffs_[j] != 0) out.coeffs_[e - out.lo_] += coeffs_[i] * other.coeffs_[j];
    }
  }
  out.normalize();
  return out;
}

TSeries TSeries::inverse() const {
  if (known_zero())
    throw TropError(ErrorCode::Precision,
                    "inverting a series that vanishes to working precision");
  long v = lo_;
  long rel = trunc_ - v;  // relative precision carries over
  TSeries out;
  out.ram_ = ram_;
  out.lo_ = -v;
  out.trunc_ = trunc_ - 2 * v;
  out.coeffs_.assign(rel, Rat(0));
  const Rat& c0 = coeffs_.front();
  out.coeffs_[0] = 1 / c0;
  for (long k = 1; k < rel; ++k) {
    Rat acc(0);
    long jmax = std::min<long>(k, static_cast<long>(coeffs_.size()) - 1);
    for (long j = 1; j <= jmax; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -acc / c0;
  }
  out.normalize();
  return out;
}

TSeries TSeries::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) {
    long rel = trunc_ - order();
    return constant(Rat(1), ram_, rel);
  }
  TSeries acc = *this;
  for (long i = 1; i < k; ++i) acc = acc * *this;
  return acc;
}

TSeries TSeries::shifted(long k) const {
  TSeries out = *this;
  out.lo_ += k;
  out.trunc_ += k;
  return out;
}

TSeries TSeries::scaled(const Rat& c) const {
  TSeries out = *this;
  for (Rat& x : out.coeffs_) x *= c;
  out.normalize();
  return out;
}

TSeries TSeries::truncated(long trunc) const {
  TSeries out = *this;
  out.trunc_ = std::min(out.trunc_, trunc);
  out.normalize();
  return out;
}

bool TSeries::agrees_below(const TSeries& other, long below) const {
  check_compatible(other);
  if (trunc_ < below || other.trunc_ < below)
    throw TropError(ErrorCode::Precision, "comparison beyond working precision");
  long lo = std::min(order(), other.order());
  for (long e = lo; e < below; ++e)
    if (coefficient(e) != other.coefficient(e)) return false;
  return true;
}

long TSeries::difference_order(const TSeries& other) const {
  check_compatible(other);
  long bound = std::min(trunc_, other.trunc_);
  long lo = std::min(order(), other.order());
  for (long e = lo; e < bound; ++e)
    if (coefficient(e) != other.coefficient(e)) return e;
  return bound;
}

std::string TSeries::str() const {
  std::ostringstream out;
  auto exponent_str = [&](long e) {
    Rat q = make_rat(Int(e), Int(ram_));
    std::string s = to_string(q);
    if (s.find('/') != std::string::npos || q < 0) return "t^(" + s + ")";
    return "t^" + s;
  };
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    long e = lo_ + static_cast<long>(k);
    if (!first) out << " + ";
    first = false;
    if (e == 0)
      out << to_string(coeffs_[k]);
    else
      out << to_string(coeffs_[k]) << "*" << exponent_str(e);
  }
  if (!first) out << " + ";
  out << "O(" << exponent_str(trunc_) << ")";
  return out.str();
}

}  // namespace tropcount
