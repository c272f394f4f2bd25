#pragma once

#include <stdexcept>
#include <string>

namespace hclab {

enum class ErrorKind {
  InvalidArgument,  // malformed input or violated precondition
  Domain,           // mathematically outside the supported family
  Guard,            // size guard exceeded
  Internal,         // a contract of the construction failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::Internal, what);
}

}  // namespace hclab
