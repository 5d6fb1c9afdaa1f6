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

#include "pdftables/geometry.hpp"

#include <algorithm>

namespace pdftables {

double vertical_overlap_ratio(const PageRect& a, const PageRect& b) {
  double smaller = std::min(a.height(), b.height());
  if (smaller <= 0) {
    const PageRect& thin = a.height() <= b.height() ? a : b;
    const PageRect& other = a.height() <= b.height() ? b : a;
    double y = thin.mid_y();
    return y >= other.top && y <= other.bottom ? 1.0 : 0.0;
  }
  double overlap = std::min(a.bottom, b.bottom) - std::max(a.top, b.top);
  return std::max(0.0, overlap) / smaller;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  double lo = *std::max_element(values.begin(), values.begin() + mid);
  return (lo + hi) / 2;
}

}  // namespace pdftables
