#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pisg {

enum class ErrorKind {
  BadIndex,
  NotASemilattice,
  NotLocal,
  BadParameter,
  EmptyProduct,
  ShapeMismatch,
  LocalRing,
  MalformedRotation,
  Disconnected,
  OutOfRange,
  BadInput,
  CorruptLedger,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type; `kind` identifies the
// contract violation and `details` carries every individual problem found.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> details = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> details_;
};

}  // namespace pisg
