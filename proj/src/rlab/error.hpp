#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

enum class ErrorKind {
  argument,   // bad parameter or violated precondition
  parse,      // malformed JSON input
  dimension,  // inconsistent vector/graph dimensions
  singular,   // Id + A not invertible: resolvent undefined
  domain,     // evaluation outside a function's domain
  regime,     // parameter outside the supported regime (e.g. mu >= lambda)
  bracket,    // no finite objective value inside a bracket search
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rlab
