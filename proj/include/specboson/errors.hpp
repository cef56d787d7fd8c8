// Copyright 2026 The specboson Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPECBOSON_ERRORS_HPP
#define SPECBOSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specboson {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Matrix shapes that do not fit the requested operation.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// An exponential sum would exceed one of the configured size guards.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Occupation configurations with inconsistent photon counts or lengths.
class ConfigurationError : public Error {
  public:
    using Error::Error;
};

/// Spectral descriptions that cannot be compared in a common basis.
class RepresentationError : public Error {
  public:
    using Error::Error;
};

/// Numerically invalid input: non-unitary networks, non-PSD Gram matrices,
/// bad mixture weights and the like.
class InputError : public Error {
  public:
    using Error::Error;
};

}  // namespace specboson

#endif
