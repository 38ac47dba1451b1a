// Copyright 2026 The triples Authors
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

namespace triples {

// Base of everything the library throws on purpose. The CLI maps each class
// to an exit code: UsageError -> 2, ResourceError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: malformed character text, length mismatch, out-of-range m.
class UsageError : public Error {
 public:
  using Error::Error;
};

// An operation that is only defined (or only meaningful) for odd n.
class EvenOrderError : public UsageError {
 public:
  using UsageError::UsageError;
};

// A size, memo or precision limit was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class PrecisionExhausted : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace triples
