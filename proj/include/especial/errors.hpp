#pragma once

#include <stdexcept>
#include <string>

namespace especial {

/// Base of every domain error raised by the library. Programming-contract
/// failures (internal invariants) use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  /// Stable machine-readable name, e.g. "NotDisjoint".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
};

}  // namespace especial
