#pragma once

#include <stdexcept>
#include <string>

namespace prkit {

enum class ErrorKind {
  malformed_input,      // ids out of range, ill-formed families, bad names
  precondition,         // operation called outside its domain
  budget_exceeded,      // enumeration would exceed a configured bound
  invariant_violation,  // a checked theorem failed on a concrete instance
  parse,                // input file could not be read as the documented schema
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace prkit
