#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cwb/machine.hpp"

namespace cwb {

// Raised for malformed machine, enumerator, benchmark or certificate files.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//
//   alphabet: _01$
//   blank: _
//   states: s h               (optional; fixes the state numbering)
//   start: s
//   halt: h
//   oracle: q yes no          (optional)
//   s 1 -> 0 R h
//
// A token starting with `#` begins a comment, except in symbol positions
// (the alphabet and blank values, the read and write columns). States are
// bare identifiers.
Machine parse_machine(std::string_view text);
std::string format_machine(const Machine& m);

Machine load_machine(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace cwb
