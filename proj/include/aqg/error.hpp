#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace aqg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// The Gram matrix phi(a_i a_j) (or psi(a_i a_j)) is singular.
class FaithfulnessError : public Error {
 public:
  using Error::Error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Elements or functionals belonging to different quantum groups were combined.
class OwnerMismatch : public Error {
 public:
  OwnerMismatch() : Error("operands belong to different quantum groups") {}
};

class PrimeMismatch : public Error {
 public:
  PrimeMismatch(unsigned p, unsigned q)
      : Error("mismatched primes: " + std::to_string(p) + " vs " + std::to_string(q)) {}
};

class InvalidGroupTable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), detail_(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// Well-formed text with the wrong structure; `path` locates the offending field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string path)
      : Error(what + " at " + (path.empty() ? std::string("/") : path)), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace aqg
