#pragma once

#include <stdexcept>
#include <string>

namespace hcyl {

// Exit codes are part of the CLI contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const { return 1; }
};

class ValidationError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 2; }
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

class PrecisionError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

}  // namespace hcyl
