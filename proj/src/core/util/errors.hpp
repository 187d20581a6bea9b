#pragma once

#include <stdexcept>
#include <string>

namespace rei::util {

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a source position. line/column are 1-based; line 0 means
// "position unknown".
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_, int column_ = 0)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) +
                                           (column_ > 0 ? ":" + std::to_string(column_) : "") +
                                           ": " + what
                                     : what),
        line(line_),
        column(column_) {}
  int line = 0;
  int column = 0;
};

}  // namespace rei::util
