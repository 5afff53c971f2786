// Copyright 2026 The cbem3d Authors.
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

#include "cbem/error.hpp"

namespace cbem {

namespace {

std::string with_line(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(with_line(line, message)), line_(line) {}

DegenerateElementError::DegenerateElementError(const std::string& message, std::size_t element)
    : Error(element == 0 ? message : "element " + std::to_string(element) + ": " + message),
      element_(element) {}

ValidationError::ValidationError(const std::string& message, std::size_t line)
    : Error(with_line(line, message)), line_(line) {}

}  // namespace cbem
