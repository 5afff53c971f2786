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

#include "cbem/stl.hpp"

#include <array>
#include <cctype>
#include <vector>

#include <fmt/format.h>

#include "cbem/error.hpp"
#include "text.hpp"

namespace cbem {

namespace {

class StlReader {
 public:
  explicit StlReader(std::string_view text) : lines_(split_lines(text)) {}

  Mesh parse() {
    auto head = next_tokens();
    if (head.empty() || head[0] != "solid") {
      throw ParseError(line_no_, "expected 'solid' header (binary STL is not supported)");
    }
    std::vector<TriangleElement> elements;
    for (;;) {
      auto tokens = next_tokens();
      if (tokens.empty()) throw ParseError(line_no_, "unexpected end of input, missing 'endsolid'");
      if (tokens[0] == "endsolid") break;
      expect(tokens, "facet", 5);
      if (tokens[1] != "normal") throw ParseError(line_no_, "expected 'facet normal nx ny nz'");
      for (int i = 2; i < 5; ++i) number(tokens[i]);  // validated, then discarded
      expect(next_tokens(), "outer", 2);
      std::array<Vec3, 3> v;
      for (auto& p : v) {
        auto vt = next_tokens();
        expect(vt, "vertex", 4);
        p = {number(vt[1]), number(vt[2]), number(vt[3])};
      }
      const std::size_t facet_line = line_no_;
      expect(next_tokens(), "endloop", 1);
      expect(next_tokens(), "endfacet", 1);
      try {
        elements.emplace_back(v[0], v[1], v[2]);
      } catch (const DegenerateElementError& e) {
        throw DegenerateElementError(
            fmt::format("degenerate facet ending at line {}: {}", facet_line, e.what()),
            elements.size() + 1);
      }
    }
    if (!next_tokens().empty()) throw ParseError(line_no_, "content after 'endsolid'");
    return Mesh(std::move(elements));
  }

 private:
  std::vector<std::string_view> next_tokens() {
    while (line_no_ < lines_.size()) {
      auto tokens = split_whitespace(lines_[line_no_++]);
      if (!tokens.empty()) return tokens;
    }
    return {};
  }

  void expect(const std::vector<std::string_view>& tokens, std::string_view keyword,
              std::size_t count) const {
    if (tokens.empty()) throw ParseError(line_no_, fmt::format("truncated facet, expected '{}'", keyword));
    if (tokens[0] != keyword) {
      throw ParseError(line_no_, fmt::format("expected '{}', found '{}'", keyword, tokens[0]));
    }
    if (tokens.size() != count) {
      throw ParseError(line_no_, fmt::format("'{}' takes {} fields, found {}", keyword, count, tokens.size()));
    }
  }

  double number(std::string_view token) const {
    auto value = parse_double(token);
    if (!value) throw ParseError(line_no_, fmt::format("invalid number '{}'", token));
    return *value;
  }

  std::vector<std::string_view> lines_;
  std::size_t line_no_ = 0;  // lines consumed so far == 1-based number of the last line read
};

}  // namespace

Mesh parse_stl(std::string_view text) {
  for (char ch : text.substr(0, 512)) {
    const auto uc = static_cast<unsigned char>(ch);
    if (uc == 0 || (uc < 0x20 && !std::isspace(uc)) || uc >= 0x80) {
      throw ParseError(0, "binary STL is not supported");
    }
  }
  return StlReader(text).parse();
}

Mesh read_stl(const std::filesystem::path& path) {
  return parse_stl(read_text_file(path));
}

std::string format_stl(const Mesh& mesh, std::string_view name) {
  std::string out = fmt::format("solid {}\n", name);
  for (const auto& e : mesh) {
    const Vec3& n = e.normal();
    out += fmt::format("  facet normal {:.17g} {:.17g} {:.17g}\n    outer loop\n", n.x(), n.y(), n.z());
    for (const Vec3* p : {&e.a(), &e.b(), &e.c()}) {
      out += fmt::format("      vertex {:.17g} {:.17g} {:.17g}\n", p->x(), p->y(), p->z());
    }
    out += "    endloop\n  endfacet\n";
  }
  out += fmt::format("endsolid {}\n", name);
  return out;
}

}  // namespace cbem
