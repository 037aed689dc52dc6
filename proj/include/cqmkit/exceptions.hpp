// Copyright 2026 The cqmkit Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cqmkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// An assignment or index does not fit the model it is used with.
class DimensionMismatch : public Error {
 public:
    using Error::Error;
};

/// A model, expression or constraint violates a structural invariant.
class InvalidModel : public Error {
 public:
    using Error::Error;
};

/// Malformed user input: CSV rows, JSON documents, labels, bound strings.
class InputError : public Error {
 public:
    using Error::Error;
};

/// A search space exceeds the exact solver's enumeration caps.
class SizeLimitError : public Error {
 public:
    using Error::Error;
};

/// Failures raised by solver backends.
class BackendError : public Error {
 public:
    using Error::Error;
};

}  // namespace cqmkit
