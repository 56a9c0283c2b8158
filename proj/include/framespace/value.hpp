#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace framespace {

// Extended nonnegative quantity used for intensities, costs, interference
// values and distances. A finite nonzero value lives on one of two scales:
//
//   Linear  the rational q itself
//   NegLog  -log(mu) for a rational mu in (0, 1), stored as mu
//
// Zero and infinity are scale-free, so a log-scale system can share its
// zero self-interference and its unreachable distances with linear code.
// Addition on the NegLog scale multiplies the arguments and order is
// reversed, which keeps every comparison exact. Mixing two finite values of
// different scales is an InvalidInput error.
class Value {
 public:
  enum class Scale : unsigned char { Linear, NegLog };

  Value() = default;

  static Value zero() { return Value(); }
  static Value infinity();
  static Value rational(const mpq_class& q);
  static Value negLog(const mpq_class& mu);

  bool isZero() const noexcept { return kind_ == Kind::Zero; }
  bool isInfinite() const noexcept { return kind_ == Kind::Infinite; }
  bool isFinite() const noexcept { return kind_ != Kind::Infinite; }

  // Scale of a finite nonzero value; nullopt for zero and infinity.
  std::optional<Scale> scale() const noexcept;

  // The value as a rational, when it is one (zero or a linear value).
  std::optional<mpq_class> asRational() const;

  // Stored rational: q for Linear, mu for NegLog.
  const mpq_class& argument() const noexcept { return q_; }

  double toDouble() const;

  // "0", "n", "n/d", "inf" or "-log(n/d)".
  std::string str() const;
  static Value parse(std::string_view text);

  // Some value strictly greater than this finite one.
  Value above() const;

  friend Value operator+(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  enum class Kind : unsigned char { Zero, Finite, Infinite };

  Kind kind_ = Kind::Zero;
  Scale scale_ = Scale::Linear;
  mpq_class q_;
};

// Formats a rational as "n" or "n/d".
std::string rationalString(const mpq_class& q);

// Parses "n" or "n/d" (optionally signed) with no surrounding whitespace.
std::optional<mpq_class> parseRational(std::string_view text);

}  // namespace framespace
