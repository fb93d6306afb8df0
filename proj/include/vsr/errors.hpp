#pragma once

#include <stdexcept>
#include <string>

namespace vsr {

// Error taxonomy mirrored by the CLI exit codes:
//   ArgumentError / DimensionError / ConfigError -> 2
//   IoError / FormatError                        -> 3
//   NumericError                                 -> 4

class ArgumentError : public std::runtime_error {
 public:
  explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public ArgumentError {
 public:
  explicit DimensionError(const std::string& msg) : ArgumentError(msg) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vsr
