#pragma once

#include <stdexcept>
#include <string>

namespace splitfox {

// Input violated an operation's mathematical precondition. CLI exit code 1.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (presentation DSL, PD codes, CLI usage). CLI exit code 2.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, int line, int col)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  explicit parse_error(const std::string& what) : std::runtime_error(what), line(0), col(0) {}
  int line;
  int col;
};

}  // namespace splitfox
