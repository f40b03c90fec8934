#pragma once

#include <stdexcept>
#include <string>

namespace ftsreg {

//! Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Operands live on different grids or have incompatible lengths.
class DimensionError : public Error {
public:
  using Error::Error;
};

//! An argument is outside its admissible range.
class ParameterError : public Error {
public:
  using Error::Error;
};

//! Bad or inconsistent configuration input (files, specs).
class ConfigError : public ParameterError {
public:
  using ParameterError::ParameterError;
};

//! A tuning-schedule constraint is violated; the message names the inequality.
class ScheduleError : public ParameterError {
public:
  using ParameterError::ParameterError;
};

//! A lag radius aliases with the frequency grid (2L >= T).
class AliasingError : public ParameterError {
public:
  using ParameterError::ParameterError;
};

//! Numeric failure while evaluating an estimator or decomposition.
class NumericError : public Error {
public:
  using Error::Error;
};

//! The ridge-shifted operator is not strictly positive definite.
class RidgeNotPositiveError : public NumericError {
public:
  using NumericError::NumericError;
};

//! A truncation rank reaches into the non-positive part of the spectrum.
class RankError : public NumericError {
public:
  using NumericError::NumericError;
};

//! An operator lacks the structure an operation requires (e.g. self-adjointness).
class StructureError : public Error {
public:
  using Error::Error;
};

//! File input/output failure.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace ftsreg
