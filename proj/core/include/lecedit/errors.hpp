// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lecedit {

/// Malformed input file: syntax errors, wrong types, missing fields.
/// The message carries the file and field context.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that breaks a domain invariant.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lecedit
