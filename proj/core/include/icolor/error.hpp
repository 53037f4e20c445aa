#pragma once

#include <stdexcept>
#include <string>

namespace icolor {

// Base for every recoverable error raised by the library. Mathematical
// verdicts ("not colorable", "no coloring exists") are values, not errors;
// these types cover bad input, exhausted budgets and broken preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPartSizes : public Error {
 public:
  using Error::Error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class ColorUnderflow : public Error {
 public:
  using Error::Error;
};

// A coloring document or value that does not describe a total assignment of
// colors 1..t to the graph's edges.
class MalformedColoring : public Error {
 public:
  using Error::Error;
};

class LimitsError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NoObstruction : public Error {
 public:
  using Error::Error;
};

// Raised when a proved statement is contradicted at runtime. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace icolor
