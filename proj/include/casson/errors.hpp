#pragma once

#include <stdexcept>
#include <string>

namespace casson {

/// Rejected input: malformed documents, genus mismatches, non-invertible
/// matrices, unknown letters. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A certified inequality failed. This cannot happen on valid inputs; it
/// signals an arithmetic bug. The CLI maps this to exit code 3.
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace casson
