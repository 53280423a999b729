#include "diffgraph/error.hpp"

namespace diffgraph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid-argument";
    case ErrorKind::kValidation:
      return "validation";
    case ErrorKind::kCapacity:
      return "capacity";
    case ErrorKind::kInternal:
      return "internal";
  }
  return "unknown";
}

void throw_invalid(const std::string& what) { throw Error(ErrorKind::kInvalidArgument, what); }
void throw_capacity(const std::string& what) { throw Error(ErrorKind::kCapacity, what); }
void throw_internal(const std::string& what) { throw Error(ErrorKind::kInternal, what); }

}  // namespace diffgraph
