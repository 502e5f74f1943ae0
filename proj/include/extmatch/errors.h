// Copyright 2026 The extmatch Authors
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

#ifndef EXTMATCH_ERRORS_H_
#define EXTMATCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace extmatch {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad literal, unknown label, duplicate key.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (wrong mode, negative entries,
// out-of-range parameter, illegal deviation).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the instance exceeds the size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace extmatch

#endif  // EXTMATCH_ERRORS_H_
