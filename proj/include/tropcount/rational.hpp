#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace tropcount {

using Int = mpz_class;
using Rat = mpq_class;

// Exit-code classes surfaced by the CLI; library code throws these directly.
enum class ErrorCode {
  Internal = 1,
  Parse = 2,
  Invariant = 3,
  DimensionCondition = 4,
  GeneralityViolation = 5,
  FieldExtensionRequired = 6,
  Precision = 7,
};

class TropError : public std::runtime_error {
 public:
  TropError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw TropError(ErrorCode::Invariant, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q"; exact, no floating point anywhere.
inline Rat parse_rat(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw TropError(ErrorCode::Parse, "not a rational: '" + text + "'");
  if (q.get_den() == 0)
    throw TropError(ErrorCode::Parse, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline Int parse_int(const std::string& text) {
  Int z;
  if (z.set_str(text, 10) != 0)
    throw TropError(ErrorCode::Parse, "not an integer: '" + text + "'");
  return z;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline long to_long(const Int& z) {
  if (!z.fits_slong_p())
    throw TropError(ErrorCode::Internal, "integer out of long range");
  return z.get_si();
}

// Exact d-th root of a rational, when it exists in Q. For even d the
// positive root is returned; the caller owns the +/- bookkeeping.
inline std::optional<Rat> rational_root(const Rat& value, unsigned long degree) {
  if (degree == 0) throw TropError(ErrorCode::Internal, "0th root");
  if (degree == 1) return value;
  if (value == 0) return Rat(0);
  if (value < 0 && degree % 2 == 0) return std::nullopt;
  Int num = value.get_num(), den = value.get_den();
  bool negate = false;
  if (num < 0) {
    negate = true;
    num = -num;
  }
  Int rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), degree);
  int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), degree);
  if (!exact_n || !exact_d) return std::nullopt;
  Rat root = make_rat(negate ? Int(-rn) : rn, rd);
  return root;
}

}  // namespace tropcount
