#pragma once

#include <stdexcept>
#include <string>

namespace imfid {

// Base for every error thrown by the library. The CLI maps subclasses to
// exit codes: InputError -> 2, ModelError -> 3, BudgetError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// Data vector length does not match the model's sample size.
class InputShapeError : public InputError {
 public:
  using InputError::InputError;
};

// Violated precondition on an argument (alpha outside (0,1), m too small, ...).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

// Orbit position undefined, e.g. von Mises data with zero resultant length.
class DegenerateOrbitError : public ModelError {
 public:
  using ModelError::ModelError;
};

// Contour shape not supported by an operation (multimodal for the transform).
class UnsupportedShapeError : public ModelError {
 public:
  using ModelError::ModelError;
};

class NotImplementedError : public ModelError {
 public:
  using ModelError::ModelError;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace imfid
