#pragma once

#include <stdexcept>
#include <string>

namespace khexp {

// Status codes shared with the C API (see include/khexp.h).
enum class Errc : int {
  ok = 0,
  invalid_argument = 1,
  parse_error = 2,
  not_divisible = 3,
  no_alpha = 4,
  no_beta = 5,
  no_gamma = 6,
  f1_not_divisible = 7,
  not_found = 8,
  bad_signature = 9,
  not_coprime = 10,
  inadmissible = 11,
  log_nonpositive = 12,
  zero_base = 13,
  io_error = 14,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace khexp
