#pragma once

#include <stdexcept>
#include <string>

namespace profgrp {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the presentation parser; carries 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Enumeration / scale bounds (element limits, module bounds, coset overflow-as-error contexts).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace profgrp
