// Copyright 2026 The l1cut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace l1cut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad parameters, invalid files).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or solve was refused because it exceeds a size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An embedding maps two distinct points to the same location.
class InfiniteDistortionError : public Error {
 public:
  using Error::Error;
};

/// An internal exact re-check failed. Seeing this means a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace l1cut
