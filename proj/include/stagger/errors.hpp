#pragma once

#include <stdexcept>
#include <string>

namespace stagger {

// The requested operation does not fit the parity of the grid, e.g. asking
// for a unique solution on an even grid or pinning a value on an odd one.
class parity_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Center data violates the even-grid consistency condition, so no edge field
// averages to it.
class inconsistent_error : public std::runtime_error {
 public:
  inconsistent_error(const std::string& what, double residual, std::string location = {})
      : std::runtime_error(what), residual_(residual), location_(std::move(location)) {}

  double residual() const noexcept { return residual_; }
  const std::string& location() const noexcept { return location_; }

 private:
  double residual_;
  std::string location_;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stagger
