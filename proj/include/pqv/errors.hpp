#pragma once

#include <stdexcept>
#include <string>

namespace pqv {

// Invalid input (wrong congruence class, composite where a prime is required, ...).
// Maps to CLI exit code 2.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation contradicted a theorem it was supposed to confirm.  This is
// never a usage error; it either falsifies the mathematics or reveals a bug,
// and scans abort loudly on it.  Maps to CLI exit code 1.
struct FalsificationError : std::runtime_error {
  explicit FalsificationError(const std::string& what) : std::runtime_error(what) {}
};

// Internal inconsistency (e.g. a group order coming out non-integral).
struct StructuralError : std::logic_error {
  explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pqv
