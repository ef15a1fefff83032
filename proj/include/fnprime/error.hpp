// Copyright 2026 The fnprime Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace fnprime {

// Domain and argument violations use std::domain_error, std::invalid_argument
// and std::out_of_range directly. The types below cover the remaining
// failure classes that callers need to tell apart.

class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::size_t step)
      : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class DegenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StitchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input file whose columns do not match the expected schema.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& what, std::string column)
      : std::invalid_argument(what + ": " + column), column_(std::move(column)) {}
  const std::string& column() const noexcept { return column_; }

 private:
  std::string column_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path)
      : std::runtime_error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace fnprime
