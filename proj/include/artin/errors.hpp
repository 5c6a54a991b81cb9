#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DSL input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& name)
      : Error("unknown vertex '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NotSpherical : public Error {
 public:
  NotSpherical() : Error("graph is not of spherical type") {}
};

/// Thrown when an enumeration would exceed its element bound.
class SizeBoundExceeded : public Error {
 public:
  SizeBoundExceeded(std::size_t bound, std::size_t reached)
      : Error("group size bound " + std::to_string(bound) +
              " exceeded (reached " + std::to_string(reached) + ")"),
        reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

class InvalidAutomorphism : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
