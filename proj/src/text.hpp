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

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbem {

std::vector<std::string_view> split_lines(std::string_view text);
std::vector<std::string_view> split_whitespace(std::string_view line);

/// Full-token decimal or scientific notation, optional leading sign.
std::optional<double> parse_double(std::string_view token);

std::string read_text_file(const std::filesystem::path& path);

struct OutputFile {
  std::filesystem::path path;
  std::string contents;
};

/// Writes every file to `<path>.partial` first and renames only once all of
/// them were written, so a failure leaves no target file behind.
void write_text_files(std::span<const OutputFile> files);

}  // namespace cbem
