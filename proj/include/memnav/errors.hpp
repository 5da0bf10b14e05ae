#pragma once

#include <stdexcept>
#include <string>

namespace memnav {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OffMap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownCategory : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoFreeSpace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownMarker : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CategoryMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wire-level failure talking to a model endpoint (connect/timeout/bad reply).
struct WireError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RetrieverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace memnav
