#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace delzant {

/// Kinds of domain failures. CLI maps all of these to exit code 1.
enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  DependentGenerators,
  EmptyPolytope,
  Unbounded,
  NotFullDimensional,
  NotAVertex,
  ChopTooLarge,
  UnsupportedInput,
  UnsupportedCone,
  OutsideSupport,
  NotSpanning,
  InvalidFan,
  InternalInconsistency,
  Cancelled,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

/// Cooperative cancellation for long-running enumerations. A default-built
/// token never cancels.
struct CancellationToken {
  const std::atomic<bool>* flag = nullptr;

  bool cancelled() const { return flag != nullptr && flag->load(std::memory_order_relaxed); }
  void check() const {
    if (cancelled()) throw Error(ErrorCode::Cancelled, "operation cancelled");
  }
};

}  // namespace delzant
