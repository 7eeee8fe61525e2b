#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace confred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A raw structure is malformed: point out of range, repeated point on a
/// line, or two lines with the same point set.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// The structure is well formed but is not a combinatorial configuration.
class ValidationError : public Error {
 public:
  enum class Kind { NotUniform, NotRegular, NotLinear };

  static ValidationError not_uniform(int line, int size, int expected);
  static ValidationError not_regular(int point, int degree, int expected);
  static ValidationError not_linear(int p, int q, std::vector<int> lines);

  Kind kind() const { return kind_; }
  // Offending line (NotUniform) or point (NotRegular); -1 otherwise.
  int element() const { return element_; }
  // NotLinear: the two points and every line they share.
  int p() const { return p_; }
  int q() const { return q_; }
  const std::vector<int>& lines() const { return lines_; }

 private:
  ValidationError(Kind kind, std::string what) : Error(std::move(what)), kind_(kind) {}

  Kind kind_;
  int element_ = -1;
  int p_ = -1;
  int q_ = -1;
  std::vector<int> lines_;
};

/// Parameters violate v*r = b*k.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A reduction or augmentation witness does not apply to the given structure.
class InvalidWitness : public Error {
 public:
  using Error::Error;
};

/// A balanced-only operation was given a structure with r != k.
class UnbalancedInput : public Error {
 public:
  using Error::Error;
};

/// A family generator was asked for an instance outside its range, or the
/// generated lines do not form a configuration.
class FamilyError : public Error {
 public:
  using Error::Error;
};

/// cfg text could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, std::string reason);

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string file_;
  int line_;
  std::string reason_;
};

}  // namespace confred
