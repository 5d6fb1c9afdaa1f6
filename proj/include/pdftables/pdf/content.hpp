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

#include <array>
#include <string>
#include <vector>

#include "pdftables/pdf/document.hpp"

namespace pdftables::pdf {

struct Point {
  double x = 0;
  double y = 0;
};

// Affine transform in PDF row-vector convention: p' = p * M.
struct Matrix {
  double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

  Point apply(double x, double y) const { return {a * x + c * y + e, b * x + d * y + f}; }
  Point apply(Point p) const { return apply(p.x, p.y); }
  // Composition: `*this` is applied first, then `next`.
  Matrix then(const Matrix& next) const;
  double x_scale() const;
  double y_scale() const;
};

struct Rgb {
  double r = 0, g = 0, b = 0;
};

// One shown glyph, in default user space (PDF coordinates, y up).
struct GlyphEvent {
  std::string text;
  // Corners of the glyph box: baseline-left, baseline-right, top-right,
  // top-left (ascent/descent applied).
  std::array<Point, 4> quad;
  double font_size = 0;
  double space_width = 0;
  int render_mode = 0;
  Rgb fill;
};

struct Subpath {
  std::vector<Point> points;
  // straight[i] describes the segment points[i] -> points[i + 1]; curve
  // segments are flattened and marked false.
  std::vector<bool> straight;
  bool closed = false;
};

struct PathEvent {
  std::vector<Subpath> subpaths;
  bool stroke = false;
  bool fill = false;
  bool even_odd = false;
  double line_width = 1;
  Rgb stroke_color;
  Rgb fill_color;
};

struct ImageEvent {
  // Maps the unit square onto the page.
  Matrix ctm;
};

class ContentHandler {
 public:
  virtual ~ContentHandler() = default;
  virtual void on_glyph(const GlyphEvent&) {}
  virtual void on_path(const PathEvent&) {}
  virtual void on_image(const ImageEvent&) {}
};

// Interprets the page's content streams (and the Form XObjects they
// invoke), reporting glyphs, painted paths and images to `handler`.
// Unparsable content stops interpretation quietly: the events reported so
// far stand.
void interpret_page(const Document& doc, const PageNode& page, ContentHandler& handler);

// Lower-level entry point used for Form XObjects and tests.
void interpret_content(const Document& doc, std::string_view content, const Object& resources,
                       const Matrix& ctm, ContentHandler& handler);

}  // namespace pdftables::pdf
