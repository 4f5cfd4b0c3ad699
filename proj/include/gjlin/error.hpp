#pragma once

#include <stdexcept>
#include <string>

namespace gjlin {

enum class errc {
  parse,   // malformed text input
  shape,   // dimension mismatch / empty matrix
  bounds,  // index out of range
  domain,  // division by zero, contract violation
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace gjlin
