#pragma once

#include <stdexcept>
#include <string>

namespace solv {

/// Input lies outside the supported domain (e.g. irrational spectrum,
/// non-solvable algebra passed where solvability is required).
class UnsupportedError : public std::runtime_error {
public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace solv
