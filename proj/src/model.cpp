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

#include "pdftables/model.hpp"

#include <algorithm>
#include <cmath>

#include "pdftables/error.hpp"

namespace pdftables {

bool PageRect::valid() const {
  for (double v : {top, left, bottom, right}) {
    if (!std::isfinite(v) || v < 0) return false;
  }
  return top <= bottom && left <= right;
}

bool rect_intersects(const PageRect& a, const PageRect& b) {
  return a.left <= b.right && b.left <= a.right && a.top <= b.bottom && b.top <= a.bottom;
}

PageRect rect_union(const PageRect& a, const PageRect& b) {
  return {std::min(a.top, b.top), std::min(a.left, b.left), std::max(a.bottom, b.bottom),
          std::max(a.right, b.right)};
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kLattice:
      return "lattice";
    case Method::kStream:
      return "stream";
    case Method::kDecide:
      return "decide";
  }
  return "decide";
}

Method parse_method(std::string_view name) {
  if (name == "lattice") return Method::kLattice;
  if (name == "stream") return Method::kStream;
  if (name == "decide") return Method::kDecide;
  throw InvalidArgument("unknown method '" + std::string(name) +
                        "' (expected lattice, stream or decide)");
}

void ExtractionOptions::validate() const {
  if (pages) {
    for (int p : *pages) {
      if (p < 1) throw PageRangeError("page numbers start at 1, got " + std::to_string(p));
    }
  }
  if (area) {
    if (guess) throw InvalidArgument("an explicit area requires guess to be off");
    // Without a pages list the area list pairs with every page; the
    // pipeline checks that length once the page count is known.
    if (pages && area->size() != pages->size()) {
      throw InvalidArgument("area list has " + std::to_string(area->size()) +
                            " entries but pages list has " + std::to_string(pages->size()));
    }
    for (const PageRect& r : *area) {
      if (!r.valid()) throw InvalidArgument("area must satisfy 0 <= top <= bottom and 0 <= left <= right");
    }
  }
  if (columns) {
    if (method != Method::kStream) throw InvalidArgument("columns require the stream method");
    for (std::size_t i = 0; i < columns->size(); ++i) {
      if (!std::isfinite((*columns)[i])) throw InvalidArgument("column positions must be finite");
      if (i > 0 && !((*columns)[i] > (*columns)[i - 1])) {
        throw InvalidArgument("column positions must be strictly ascending");
      }
    }
  }
}

}  // namespace pdftables
