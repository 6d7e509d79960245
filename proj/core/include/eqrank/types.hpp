#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqrank {

using VertexId = std::uint32_t;
using BlockId = std::uint32_t;
using Weight = double;

/// Malformed or inconsistent user input (bad files, bad parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated internal invariant or a broken precondition between modules.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eqrank
