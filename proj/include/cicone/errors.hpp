#pragma once

#include <stdexcept>
#include <string>

namespace cicone {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbientMismatch : Error {
  AmbientMismatch() : Error("ambient dimensions differ") {}
  using Error::Error;
};

struct ZeroVector : Error {
  ZeroVector() : Error("zero vector not allowed") {}
  using Error::Error;
};

struct ZeroGenerator : Error {
  ZeroGenerator() : Error("generator sets may not contain the zero vector") {}
  using Error::Error;
};

struct NotPointed : Error {
  NotPointed() : Error("cone is not strongly convex") {}
  using Error::Error;
};

struct BadPartition : Error {
  using Error::Error;
};

struct BadDimension : Error {
  using Error::Error;
};

struct DimensionOne : Error {
  DimensionOne() : Error("operation requires a cone of dimension at least 2") {}
  using Error::Error;
};

struct NotCICone : Error {
  NotCICone() : Error("cone is not a complete intersection cone") {}
  using Error::Error;
};

struct PartNotCI : Error {
  using Error::Error;
};

struct NoSharedLine : Error {
  NoSharedLine() : Error("lattice intersection of the parts is not rank one") {}
  using Error::Error;
};

struct NoMultipleExists : Error {
  using Error::Error;
};

struct MalformedTree : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct GenerationFailed : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ZeroRow : ParseError {
  using ParseError::ParseError;
};

struct RaggedRows : ParseError {
  using ParseError::ParseError;
};

struct EmptyInput : ParseError {
  EmptyInput() : ParseError("input contains no generators") {}
  using ParseError::ParseError;
};

} // namespace cicone
