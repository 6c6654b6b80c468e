#ifndef GPSC_ERROR_HPP_
#define GPSC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gpsc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: unknown vertex, bad label, broken
// constructor precondition, bound exceeded.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpsc

#endif  // GPSC_ERROR_HPP_
