#pragma once

#include <stdexcept>
#include <string>

namespace diffgraph {

// Kinds map one-to-one onto the CLI exit codes.
enum class ErrorKind {
  kInvalidArgument = 2,
  kValidation = 3,
  kCapacity = 4,
  kInternal = 5,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_capacity(const std::string& what);
[[noreturn]] void throw_internal(const std::string& what);

}  // namespace diffgraph
