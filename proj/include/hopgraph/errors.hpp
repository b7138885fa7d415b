#pragma once

#include <stdexcept>
#include <string>

namespace hopgraph {

/// Runtime failure inside the engine (bad data, I/O, solver budget).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input detected before any compute starts (CLI exit code 1).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopgraph
