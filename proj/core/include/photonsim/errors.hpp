// Copyright 2026 The photonsim Authors
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

#ifndef PHOTONSIM_ERRORS_HPP_
#define PHOTONSIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace photonsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An occupation number would exceed the configured per-mode cutoff.
class CutoffViolation : public Error {
 public:
  using Error::Error;
};

// Truncation dropped more norm than the caller allowed.
class LeakageError : public Error {
 public:
  explicit LeakageError(const std::string& what, double leaked = 0.0)
      : Error(what), leaked_(leaked) {}
  double leaked() const { return leaked_; }

 private:
  double leaked_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class CodeSpaceViolation : public Error {
 public:
  using Error::Error;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class GridResolutionError : public Error {
 public:
  using Error::Error;
};

class ImprobableHerald : public Error {
 public:
  using Error::Error;
};

}  // namespace photonsim

#endif  // PHOTONSIM_ERRORS_HPP_
