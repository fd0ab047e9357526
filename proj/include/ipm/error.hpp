#ifndef IPM_ERROR_HPP
#define IPM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ipm {

// Malformed or inconsistent input: parse failures, invariant violations,
// size guards, objects from different spaces.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed request outside an operation's domain (e.g. conditioning on
// a null event).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ipm

#endif  // IPM_ERROR_HPP
