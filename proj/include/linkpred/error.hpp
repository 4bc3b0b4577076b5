#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkpred {

// Malformed or inconsistent input data (edge lists, datasets).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based line number of the offending input line, 0 when not applicable.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace linkpred
