#pragma once

#include <stdexcept>
#include <string>

namespace dimdist {

/// Input outside an operation's domain (bad dimension, bad index, bad table).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A protocol configuration whose two expected statistics coincide.
class DegenerateConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace dimdist
