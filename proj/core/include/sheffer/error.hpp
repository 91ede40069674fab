#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sheffer {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoDualError : public Error {
 public:
  using Error::Error;
};

class PathError : public Error {
 public:
  using Error::Error;
};

class MissingAtomError : public Error {
 public:
  explicit MissingAtomError(std::string atom)
      : Error("no value assigned to atom '" + atom + "'"), atom_(std::move(atom)) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class TooManyAtomsError : public Error {
 public:
  TooManyAtomsError(std::size_t count, std::size_t limit)
      : Error("formula has " + std::to_string(count) + " atoms; limit is " +
              std::to_string(limit)),
        count_(count),
        limit_(limit) {}
  std::size_t count() const { return count_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t count_;
  std::size_t limit_;
};

}  // namespace sheffer
