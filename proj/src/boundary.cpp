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

#include "cbem/boundary.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cbem/error.hpp"
#include "text.hpp"

namespace cbem {

std::vector<BoundaryCondition> parse_bc_file(std::string_view text, std::size_t element_count) {
  std::vector<BoundaryCondition> bcs;
  std::vector<std::size_t> seen_on(element_count + 1, 0);
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 5) {
      throw ParseError(line_no, fmt::format("expected '<element> <D|T> <vx> <vy> <vz>', found {} fields", tokens.size()));
    }
    std::size_t index = 0;
    {
      std::string_view digits = tokens[0];
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError(line_no, fmt::format("invalid element index '{}'", tokens[0]));
      }
    }
    BcKind kind;
    if (tokens[1] == "D" || tokens[1] == "d") {
      kind = BcKind::Displacement;
    } else if (tokens[1] == "T" || tokens[1] == "t") {
      kind = BcKind::Traction;
    } else {
      throw ParseError(line_no, fmt::format("unknown boundary kind '{}' (expected D or T)", tokens[1]));
    }
    Vec3 value;
    for (int i = 0; i < 3; ++i) {
      const auto v = parse_double(tokens[static_cast<std::size_t>(2 + i)]);
      if (!v) throw ParseError(line_no, fmt::format("invalid number '{}'", tokens[static_cast<std::size_t>(2 + i)]));
      value[i] = *v;
    }
    if (index < 1 || index > element_count) {
      throw ValidationError(fmt::format("element index {} outside 1..{}", index, element_count), line_no);
    }
    if (seen_on[index] != 0) {
      throw ValidationError(fmt::format("element {} already given on line {}", index, seen_on[index]), line_no);
    }
    seen_on[index] = line_no;
    bcs.push_back({index, kind, value});
  }
  return bcs;
}

bool matches(const PlanarPredicate& p, const TriangleElement& elem, double tolerance) {
  const int axis = static_cast<int>(p.axis);
  for (const Vec3* v : {&elem.a(), &elem.b(), &elem.c()}) {
    if (!(std::abs((*v)[axis] - p.value) <= tolerance)) return false;
  }
  return true;
}

std::vector<BoundaryCondition> tag_elements(const Mesh& mesh, std::span<const PlanarPredicate> predicates,
                                            const BcPayload& fallback) {
  const double default_tol = 1e-6 * mesh.diameter();
  std::vector<BoundaryCondition> bcs;
  bcs.reserve(mesh.size());
  std::vector<std::size_t> ambiguous;
  for (std::size_t e = 0; e < mesh.size(); ++e) {
    const PlanarPredicate* hit = nullptr;
    bool overlap = false;
    for (const auto& p : predicates) {
      if (!matches(p, mesh[e], p.tolerance.value_or(default_tol))) continue;
      if (hit) overlap = true;
      hit = &p;
    }
    if (overlap) ambiguous.push_back(e + 1);
    const BcPayload& payload = hit ? hit->payload : fallback;
    bcs.push_back({e + 1, payload.kind, payload.value});
  }
  if (!ambiguous.empty()) {
    throw ValidationError(fmt::format("elements matched by more than one predicate: {}", fmt::join(ambiguous, ", ")));
  }
  return bcs;
}

}  // namespace cbem
