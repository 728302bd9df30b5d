#pragma once

#include <stdexcept>
#include <string>

namespace weylsim {

// Invalid user-supplied parameter (CLI exit code 2).
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure such as integrator trace drift or a degenerate
// Liouvillian null space (CLI exit code 3).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// File I/O failure (CLI exit code 4).
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace weylsim
