// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace olsmc {

// Root of everything this library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters passed to a constructor or operation.
class ParameterError : public Error {
  public:
    using Error::Error;
};

class NonPrimeOrder : public ParameterError {
  public:
    using ParameterError::ParameterError;
};

class TooManySquares : public ParameterError {
  public:
    using ParameterError::ParameterError;
};

class OrderMismatch : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class NotSquare : public Error {
  public:
    using Error::Error;
};

// An index map that is not a bijection.
class NotPermutation : public Error {
  public:
    using Error::Error;
};

// Serialization errors (see codec.hpp for the format).
class CodecError : public Error {
  public:
    using Error::Error;
};

class BadMagic : public CodecError {
  public:
    using CodecError::CodecError;
};

class BadVersion : public CodecError {
  public:
    using CodecError::CodecError;
};

class BadKind : public CodecError {
  public:
    using CodecError::CodecError;
};

class Truncated : public CodecError {
  public:
    using CodecError::CodecError;
};

// Stored scrambler matrix is singular.
class NotInvertible : public CodecError {
  public:
    using CodecError::CodecError;
};

// Recovered plaintext framing is inconsistent.
class FramingError : public Error {
  public:
    using Error::Error;
};

}  // namespace olsmc
