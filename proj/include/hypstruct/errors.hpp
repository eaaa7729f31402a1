#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

// Error taxonomy. Process exit codes: validation errors map to 2,
// budget overruns to 3, anything else that escapes to 4.
enum class ErrorKind {
  MalformedInput,
  InvalidParameter,
  Precondition,
  NotFound,
  Disconnected,
  UnsupportedModel,
  BudgetExceeded,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::BudgetExceeded:
        return 3;
      case ErrorKind::Internal:
        return 4;
      default:
        return 2;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace hyp
