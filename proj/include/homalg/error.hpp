#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  NotInvertibleError(std::size_t size, std::size_t rank)
      : Error("not invertible: " + std::to_string(size) + "x" + std::to_string(size) +
              " matrix has rank " + std::to_string(rank)),
        size_(size),
        rank_(rank) {}
  std::size_t size() const { return size_; }
  std::size_t rank() const { return rank_; }

 private:
  std::size_t size_;
  std::size_t rank_;
};

// An input structure failed a check that an operation requires.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace homalg
