#ifndef NCHOPF_ERRORS_HPP_
#define NCHOPF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nchopf {

// Malformed canonical text for a set partition, set composition or element.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two operands that must live on the same ground set [n] do not.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic between elements expressed in different bases.
class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nchopf

#endif  // NCHOPF_ERRORS_HPP_
