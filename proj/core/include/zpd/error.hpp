#pragma once

#include <stdexcept>
#include <string>

namespace zpd {

/// Diagnostic codes surfaced by the CLI as distinct error classes.
enum class errc {
  input,             // malformed value, dimension mismatch, invalid constructor args
  field_mismatch,    // mixing scalars/objects with different field tags
  parse,             // malformed JSON or scalar string
  unknown_builtin,   // unrecognized builtin reference
  budget_exceeded,   // exhaustive enumeration over the configured cap
  family_invalid,    // a pair family failed its polynomial-identity certification
  unsupported_field, // e.g. H^2 or zpd/zad decisions over characteristic 2
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::input: return "input";
    case errc::field_mismatch: return "field-mismatch";
    case errc::parse: return "parse";
    case errc::unknown_builtin: return "unknown-builtin";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::family_invalid: return "family-invalid";
    case errc::unsupported_field: return "unsupported-field";
  }
  return "unknown";
}

}  // namespace zpd
