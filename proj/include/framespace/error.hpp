#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace framespace {

enum class ErrorCode {
  InvalidInput,
  Parse,
  Validation,
  NumericalFailure,
  OracleBoundExceeded,
  InternalInconsistency,
};

const char* errorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the eigensolver when the QR iteration cap is hit. Carries the
// eigenvalues that had already converged.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& message,
                   std::vector<std::complex<double>> partial)
      : Error(ErrorCode::NumericalFailure, message), partial_(std::move(partial)) {}

  const std::vector<std::complex<double>>& partial() const noexcept { return partial_; }

 private:
  std::vector<std::complex<double>> partial_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace framespace
