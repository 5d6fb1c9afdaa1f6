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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pdftables/pdf/document.hpp"

namespace pdftables {

// 8-bit RGB pixels, row-major, no padding.
struct Bitmap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;
};

// Pixels along one axis for a page extent in points: ceil(pt * dpi / 72).
int raster_extent(double pt, double dpi);

// Rendering contract used for thumbnails and the picker service. The bitmap
// must be raster_extent(width) x raster_extent(height) of the page's media
// box.
class PageRenderer {
 public:
  virtual ~PageRenderer() = default;
  virtual Bitmap render(const pdf::Document& doc, std::size_t page_index, double dpi) const = 0;
};

// Draws vector fills and strokes, text with a small bitmap font, and images
// as grey placeholders. Enough to recognise a table on screen; not a
// faithful renderer.
class BuiltinRenderer : public PageRenderer {
 public:
  Bitmap render(const pdf::Document& doc, std::size_t page_index, double dpi) const override;
};

const PageRenderer& default_renderer();

std::string encode_png(const Bitmap& bitmap);

}  // namespace pdftables
