#pragma once

#include <stdexcept>
#include <string>

namespace lamanbkk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or contract-violating input (bad labels, non-Laman graph, ...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A Henneberg step references a vertex or edge that does not exist yet.
class SequenceError : public InputError {
 public:
  explicit SequenceError(const std::string& what) : InputError(what) {}
};

/// Circle intersection with coincident centers and equal radii.
class DegenerateInput : public InputError {
 public:
  explicit DegenerateInput(const std::string& what) : InputError(what) {}
};

/// The request exceeds a documented size cap (oracle dimension, subset scan).
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what) : Error(what) {}
};

class TimeoutError : public CapabilityError {
 public:
  explicit TimeoutError(const std::string& what) : CapabilityError(what) {}
};

/// A self-check failed. Indicates a bug in this library.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace lamanbkk
