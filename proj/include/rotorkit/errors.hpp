#pragma once

#include <stdexcept>
#include <string>

namespace rotorkit {

// Base type for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration: bad parameter values, degenerate grids, empty inputs.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A query outside the domain covered by tabulated data (no extrapolation).
class OutOfRangeError : public Error {
public:
  explicit OutOfRangeError(const std::string& msg) : Error(msg) {}
};

// Requested stall margin puts the target lift coefficient above the
// rising branch of the lift curve.
class InfeasibleMarginError : public Error {
public:
  explicit InfeasibleMarginError(const std::string& msg) : Error(msg) {}
};

// Malformed input file; message carries "path:line:".
class ParseError : public Error {
public:
  ParseError(const std::string& path, long line, const std::string& msg)
      : Error(path + ":" + std::to_string(line) + ": " + msg),
        line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

}  // namespace rotorkit
