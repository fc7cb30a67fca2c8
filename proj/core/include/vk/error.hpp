#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vk {

enum class ErrorKind {
  composition,
  unknown_object,
  component,
  relation_shape,
  total_disconnection,
  connectivity,
  basepoint,
  name,
  parameter,
  closure,
  disjointness,
  membership,
  shape,
  generation_failure,
  pipeline,
  parse,
  schema,
  io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the CLI
/// exit-code contract) can distinguish bad input from violated properties.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace vk
