#include "framespace/value.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "framespace/error.hpp"

namespace framespace {

const char* errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::Validation: return "validation-error";
    case ErrorCode::NumericalFailure: return "numerical-failure";
    case ErrorCode::OracleBoundExceeded: return "oracle-bound-exceeded";
    case ErrorCode::InternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

std::string rationalString(const mpq_class& q) { return q.get_str(10); }

std::optional<mpq_class> parseRational(std::string_view text) {
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const size_t numStart = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == numStart) return std::nullopt;
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    const size_t denStart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == denStart || pos != text.size()) return std::nullopt;
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

Value Value::infinity() {
  Value v;
  v.kind_ = Kind::Infinite;
  return v;
}

Value Value::rational(const mpq_class& q) {
  if (sgn(q) < 0) fail(ErrorCode::InvalidInput, "negative value " + rationalString(q));
  Value v;
  if (sgn(q) == 0) return v;
  v.kind_ = Kind::Finite;
  v.scale_ = Scale::Linear;
  v.q_ = q;
  return v;
}

Value Value::negLog(const mpq_class& mu) {
  if (sgn(mu) < 0 || mu > 1) {
    fail(ErrorCode::InvalidInput, "-log argument outside [0,1]: " + rationalString(mu));
  }
  if (sgn(mu) == 0) return infinity();
  Value v;
  if (mu == 1) return v;
  v.kind_ = Kind::Finite;
  v.scale_ = Scale::NegLog;
  v.q_ = mu;
  return v;
}

std::optional<Value::Scale> Value::scale() const noexcept {
  if (kind_ != Kind::Finite) return std::nullopt;
  return scale_;
}

std::optional<mpq_class> Value::asRational() const {
  if (kind_ == Kind::Zero) return mpq_class(0);
  if (kind_ == Kind::Finite && scale_ == Scale::Linear) return q_;
  return std::nullopt;
}

double Value::toDouble() const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Infinite: return std::numeric_limits<double>::infinity();
    case Kind::Finite: break;
  }
  return scale_ == Scale::Linear ? q_.get_d() : -std::log(q_.get_d());
}

std::string Value::str() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Infinite: return "inf";
    case Kind::Finite: break;
  }
  if (scale_ == Scale::Linear) return rationalString(q_);
  return "-log(" + rationalString(q_) + ")";
}

Value Value::parse(std::string_view text) {
  if (text == "inf" || text == "\xE2\x88\x9E") return infinity();
  constexpr std::string_view kLog = "-log(";
  if (text.size() > kLog.size() + 1 && text.substr(0, kLog.size()) == kLog && text.back() == ')') {
    auto mu = parseRational(text.substr(kLog.size(), text.size() - kLog.size() - 1));
    if (!mu) fail(ErrorCode::Parse, "malformed log value '" + std::string(text) + "'");
    return negLog(*mu);
  }
  auto q = parseRational(text);
  if (!q) fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  return rational(*q);
}

Value Value::above() const {
  switch (kind_) {
    case Kind::Infinite: fail(ErrorCode::InvalidInput, "no value above infinity");
    case Kind::Zero: return rational(1);
    case Kind::Finite: break;
  }
  if (scale_ == Scale::Linear) return rational(q_ + 1);
  return negLog(q_ / 2);
}

static void requireSameScale(const Value& a, const Value& b) {
  if (a.scale() && b.scale() && *a.scale() != *b.scale()) {
    fail(ErrorCode::InvalidInput, "mixed linear and log-scale values: " + a.str() + ", " + b.str());
  }
}

Value operator+(const Value& a, const Value& b) {
  if (a.isInfinite() || b.isInfinite()) return Value::infinity();
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  requireSameScale(a, b);
  Value r = a;
  if (a.scale_ == Value::Scale::Linear) {
    r.q_ = a.q_ + b.q_;
  } else {
    r.q_ = a.q_ * b.q_;
  }
  return r;
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Value::Kind::Finite) return true;
  return a.scale_ == b.scale_ && a.q_ == b.q_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != Value::Kind::Finite) return std::strong_ordering::equal;
  requireSameScale(a, b);
  const int c = cmp(a.q_, b.q_);
  const int signedCmp = a.scale_ == Value::Scale::Linear ? c : -c;
  return signedCmp <=> 0;
}

}  // namespace framespace
