#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chartgen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed embedding / data / config input.
struct FormatError : Error {
  FormatError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct IoError : Error {
  using Error::Error;
};

struct UnknownWordError : Error {
  explicit UnknownWordError(const std::string& word) : Error("unknown word: " + word), word(word) {}
  std::string word;
};

struct EmptyGroupError : Error {
  using Error::Error;
};

struct CapacityError : Error {
  using Error::Error;
};

// Metadata string could not be parsed; pair_index is zero-based.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pair_index)
      : Error("pair " + std::to_string(pair_index) + ": " + what), pair_index(pair_index) {}
  std::size_t pair_index;
};

struct NumberFormatError : Error {
  using Error::Error;
};

struct SpecError : Error {
  using Error::Error;
};

// Layout failures are recoverable by regenerating with a different sub-seed.
struct LayoutError : Error {
  using Error::Error;
};

struct GeometryError : LayoutError {
  using LayoutError::LayoutError;
};

struct OverlapError : LayoutError {
  using LayoutError::LayoutError;
};

struct SeparationInfeasible : LayoutError {
  using LayoutError::LayoutError;
};

struct RasterError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace chartgen
