#pragma once

#include <stdexcept>
#include <string>

namespace gft {

// Base for every numerical failure raised by the library.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NearZeroConstantTerm : public NumericError {
public:
  using NumericError::NumericError;
};

class NearZeroDenominator : public NumericError {
public:
  using NumericError::NumericError;
};

class DomainError : public NumericError {
public:
  using NumericError::NumericError;
};

class NonConvergence : public NumericError {
public:
  using NumericError::NumericError;
};

// Raised when the integral hypothesis of the Gronwall lemma fails, i.e. the
// lemma is inapplicable to the supplied samples.
class HypothesisViolated : public NumericError {
public:
  using NumericError::NumericError;
};

class GenerationFailed : public NumericError {
public:
  using NumericError::NumericError;
};

}  // namespace gft
