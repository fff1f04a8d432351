#pragma once

#include <stdexcept>
#include <string>

namespace slicefloer {

// Bad input: malformed codes, unknown knot names, size caps. CLI exit code 2.
class UserError : public std::runtime_error {
 public:
  explicit UserError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: d^2 != 0, non-exact deconvolution, oracle
// disagreement. Never raised by bad user input. CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace slicefloer
