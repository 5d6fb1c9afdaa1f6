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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pdftables/model.hpp"

namespace pdftables {

// Vertical overlap of two rectangles relative to the smaller height. Zero
// height boxes count as fully overlapping when their centre lies inside
// the other box's band.
double vertical_overlap_ratio(const PageRect& a, const PageRect& b);

// Groups items into horizontal bands: an item joins the band it overlaps
// most when the overlap is at least half the smaller height. Returns groups
// of indices ordered top to bottom, each ordered by left edge.
template <typename T, typename RectOf>
std::vector<std::vector<std::size_t>> group_into_bands(const std::vector<T>& items, RectOf rect_of) {
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const PageRect& ra = rect_of(items[a]);
    const PageRect& rb = rect_of(items[b]);
    if (ra.top != rb.top) return ra.top < rb.top;
    return ra.left < rb.left;
  });
  std::vector<PageRect> bands;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t idx : order) {
    const PageRect& r = rect_of(items[idx]);
    std::size_t best = groups.size();
    double best_ratio = 0.5;
    for (std::size_t g = 0; g < bands.size(); ++g) {
      double ratio = vertical_overlap_ratio(r, bands[g]);
      if (ratio >= best_ratio) {
        best_ratio = ratio;
        best = g;
        if (ratio >= 1.0) break;
      }
    }
    if (best == groups.size()) {
      bands.push_back(r);
      groups.push_back({idx});
    } else {
      bands[best] = rect_union(bands[best], r);
      groups[best].push_back(idx);
    }
  }
  std::vector<std::size_t> band_order(groups.size());
  for (std::size_t i = 0; i < band_order.size(); ++i) band_order[i] = i;
  std::stable_sort(band_order.begin(), band_order.end(), [&](std::size_t a, std::size_t b) {
    if (bands[a].top != bands[b].top) return bands[a].top < bands[b].top;
    return bands[a].bottom < bands[b].bottom;
  });
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (std::size_t g : band_order) {
    std::vector<std::size_t> members = groups[g];
    std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return rect_of(items[a]).left < rect_of(items[b]).left;
    });
    out.push_back(std::move(members));
  }
  return out;
}

double median(std::vector<double> values);

}  // namespace pdftables
