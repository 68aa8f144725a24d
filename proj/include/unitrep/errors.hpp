#pragma once

#include <stdexcept>
#include <string>

namespace unitrep {

// Malformed or inconsistent user input. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidPartial : public InputError {
 public:
  using InputError::InputError;
};

class InvalidThreePartition : public InputError {
 public:
  using InputError::InputError;
};

class NotOnGrid : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Impossible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace unitrep
