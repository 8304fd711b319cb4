#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "hbl/numbers.hpp"

namespace hbl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainMismatch : Error {
  using Error::Error;
};

// A matrix that does not define a homomorphism between the given groups.
struct InvalidHomomorphism : Error {
  std::size_t generator_index;
  InvalidHomomorphism(std::size_t gen, const std::string& msg)
      : Error(msg), generator_index(gen) {}
};

// Group order (or another size budget) exceeds the configured cap.
struct CapExceeded : Error {
  Int needed;
  CapExceeded(Int needed_cap, const std::string& msg)
      : Error(msg), needed(std::move(needed_cap)) {}
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

}  // namespace hbl
