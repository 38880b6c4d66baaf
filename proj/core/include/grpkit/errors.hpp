#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grpkit {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size limit would be exceeded. The CLI maps these to exit code 2.
class CapError : public Error {
 public:
  CapError(const std::string& what, std::uint64_t actual, std::uint64_t cap)
      : Error(what), actual_(actual), cap_(cap) {}
  std::uint64_t actual() const noexcept { return actual_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t actual_;
  std::uint64_t cap_;
};

class OrderExceedsCap : public CapError {
 public:
  OrderExceedsCap(std::uint64_t order, std::uint64_t cap)
      : CapError("group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap),
                 order, cap) {}
  std::uint64_t order() const noexcept { return actual(); }
};

class DegreeExceedsCap : public CapError {
 public:
  DegreeExceedsCap(std::uint64_t degree, std::uint64_t cap)
      : CapError("degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap),
                 degree, cap) {}
};

class IndexExceedsCap : public CapError {
 public:
  IndexExceedsCap(std::uint64_t index, std::uint64_t cap)
      : CapError("index " + std::to_string(index) + " exceeds cap " + std::to_string(cap),
                 index, cap) {}
};

class SearchBoundExceeded : public CapError {
 public:
  explicit SearchBoundExceeded(std::uint64_t bound)
      : CapError("search bound " + std::to_string(bound) + " exceeded", bound, bound) {}
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class NotNormal : public Error {
 public:
  NotNormal() : Error("subgroup is not normal") {}
};

class NotSolvable : public Error {
 public:
  NotSolvable() : Error("group is not solvable") {}
};

class PDividesOrder : public Error {
 public:
  PDividesOrder(std::uint64_t p, std::uint64_t order)
      : Error(std::to_string(p) + " divides the group order " + std::to_string(order)) {}
};

class SearchFailed : public Error {
 public:
  using Error::Error;
};

// A randomized test ran out of budget without reaching a verdict; retry with another seed.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace grpkit
