#pragma once

#include <stdexcept>
#include <string>

namespace sympack {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unparsable numbers, malformed documents, invalid ranges.
class InputError : public Error {
 public:
  InputError(std::string code, const std::string& message)
      : Error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A theorem's hypothesis is not met by the input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A search bound was hit before the computation could finish.
class ResourceError : public Error {
 public:
  ResourceError(std::string bound, const std::string& message)
      : Error(message), bound_(std::move(bound)) {}
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

// A quantity could not be certified within budget; carries the best bound found as text.
class UndecidedError : public Error {
 public:
  UndecidedError(std::string best_bound, const std::string& message)
      : Error(message), best_bound_(std::move(best_bound)) {}
  const std::string& best_bound() const noexcept { return best_bound_; }

 private:
  std::string best_bound_;
};

}  // namespace sympack
