#include "pisg/error.hpp"

#include <utility>

namespace pisg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotASemilattice: return "NotASemilattice";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::EmptyProduct: return "EmptyProduct";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LocalRing: return "LocalRing";
    case ErrorKind::MalformedRotation: return "MalformedRotation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::CorruptLedger: return "CorruptLedger";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::vector<std::string> details)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      details_(std::move(details)) {}

}  // namespace pisg
