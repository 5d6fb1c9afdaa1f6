// Copyright 2026 The pdftables Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pdftables {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong with the input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem problems: unreadable inputs, unwritable output directories.
class IoError : public Error {
 public:
  using Error::Error;
};

// A remote source could not be fetched.
class UnreachableError : public Error {
 public:
  using Error::Error;
};

// The input does not start with a PDF header.
class NotPdfError : public Error {
 public:
  using Error::Error;
};

// The document is encrypted and the supplied password (or the empty
// password) does not open it.
class PasswordError : public Error {
 public:
  using Error::Error;
};

// Structural damage the parser could not recover from.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A 1-based page index outside [1, n_pages].
class PageRangeError : public Error {
 public:
  using Error::Error;
};

// Caller-supplied options or geometry that violate a documented contract.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace pdftables
