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

#include "pdftables/raster.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>

#include "pdftables/error.hpp"
#include "pdftables/pdf/content.hpp"

namespace pdftables {
namespace {

#include "bitmap_font.inc"

// Font size the bitmaps were drawn at, and their baseline row.
constexpr double kBitmapEm = 11.0;
constexpr double kBitmapBaseline = 9.0;

struct Edge {
  double x0, y0, x1, y1;
};

class Canvas {
 public:
  Canvas(int w, int h) : w_(w), h_(h), rgb_(static_cast<std::size_t>(w) * h * 3, 255) {}

  void fill_polygon(const std::vector<std::vector<pdf::Point>>& rings, bool even_odd,
                    const pdf::Rgb& color) {
    std::vector<Edge> edges;
    double min_y = h_, max_y = 0;
    for (const auto& ring : rings) {
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const pdf::Point& a = ring[i];
        const pdf::Point& b = ring[(i + 1) % ring.size()];
        if (a.y == b.y) continue;
        edges.push_back({a.x, a.y, b.x, b.y});
        min_y = std::min({min_y, a.y, b.y});
        max_y = std::max({max_y, a.y, b.y});
      }
    }
    if (edges.empty()) return;
    int y_begin = std::max(0, static_cast<int>(std::floor(min_y)));
    int y_end = std::min(h_, static_cast<int>(std::ceil(max_y)) + 1);
    std::vector<std::pair<double, int>> xs;
    for (int y = y_begin; y < y_end; ++y) {
      double sy = y + 0.5;
      xs.clear();
      for (const Edge& e : edges) {
        double lo = std::min(e.y0, e.y1), hi = std::max(e.y0, e.y1);
        if (sy < lo || sy >= hi) continue;
        double t = (sy - e.y0) / (e.y1 - e.y0);
        xs.emplace_back(e.x0 + t * (e.x1 - e.x0), e.y1 > e.y0 ? 1 : -1);
      }
      std::sort(xs.begin(), xs.end());
      int winding = 0;
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        winding += xs[i].second;
        bool inside = even_odd ? (i % 2 == 0) : winding != 0;
        if (inside) span(y, xs[i].first, xs[i + 1].first, color);
      }
    }
  }

  void fill_rect(double x0, double y0, double x1, double y1, const pdf::Rgb& color) {
    int ya = std::max(0, static_cast<int>(std::lround(y0)));
    int yb = std::min(h_, static_cast<int>(std::lround(y1)));
    for (int y = ya; y < yb; ++y) span(y, x0, x1, color);
  }

  Bitmap take() { return Bitmap{w_, h_, std::move(rgb_)}; }

 private:
  void span(int y, double xa, double xb, const pdf::Rgb& color) {
    int a = std::max(0, static_cast<int>(std::lround(xa)));
    int b = std::min(w_, static_cast<int>(std::lround(xb)));
    auto px = [](double v) { return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255)); };
    std::uint8_t r = px(color.r), g = px(color.g), bl = px(color.b);
    for (int x = a; x < b; ++x) {
      std::size_t i = (static_cast<std::size_t>(y) * w_ + x) * 3;
      rgb_[i] = r;
      rgb_[i + 1] = g;
      rgb_[i + 2] = bl;
    }
  }

  int w_, h_;
  std::vector<std::uint8_t> rgb_;
};

class Painter : public pdf::ContentHandler {
 public:
  Painter(Canvas& canvas, const std::array<double, 4>& box, double scale)
      : canvas_(canvas), box_(box), scale_(scale) {}

  pdf::Point device(pdf::Point p) const {
    return {(p.x - box_[0]) * scale_, (box_[3] - p.y) * scale_};
  }

  void on_path(const pdf::PathEvent& ev) override {
    if (ev.fill) {
      std::vector<std::vector<pdf::Point>> rings;
      for (const pdf::Subpath& sp : ev.subpaths) {
        std::vector<pdf::Point> ring;
        for (const pdf::Point& p : sp.points) ring.push_back(device(p));
        if (ring.size() >= 2) rings.push_back(std::move(ring));
      }
      canvas_.fill_polygon(rings, ev.even_odd, ev.fill_color);
    }
    if (ev.stroke) {
      double half = std::max(ev.line_width * scale_, 1.0) / 2;
      for (const pdf::Subpath& sp : ev.subpaths) {
        std::size_t n = sp.points.size();
        std::size_t segments = sp.closed ? n : (n == 0 ? 0 : n - 1);
        for (std::size_t i = 0; i < segments; ++i) {
          stroke_segment(device(sp.points[i]), device(sp.points[(i + 1) % n]), half, ev.stroke_color);
        }
      }
    }
  }

  void on_glyph(const pdf::GlyphEvent& ev) override {
    if (ev.render_mode == 3 || ev.render_mode == 7 || ev.text.empty()) return;
    unsigned char c = static_cast<unsigned char>(ev.text[0]);
    if (ev.text.size() > 1 || c < 0x20 || c > 0x7e) c = '?';
    if (c == ' ') return;
    pdf::Point origin = device(ev.quad[0]);
    double px = ev.font_size * scale_ / kBitmapEm;
    if (px <= 0) return;
    const unsigned char* rows = kGlyphBitmaps[c - 0x20];
    double top = origin.y - kBitmapBaseline * px;
    for (int by = 0; by < 12; ++by) {
      for (int bx = 0; bx < 8; ++bx) {
        if (!(rows[by] & (0x80 >> bx))) continue;
        double x0 = origin.x + (bx - 1) * px, y0 = top + by * px;
        canvas_.fill_rect(x0, y0, x0 + std::max(px, 1.0), y0 + std::max(px, 1.0), ev.fill);
      }
    }
  }

  void on_image(const pdf::ImageEvent& ev) override {
    std::vector<pdf::Point> ring = {device(ev.ctm.apply(0, 0)), device(ev.ctm.apply(1, 0)),
                                    device(ev.ctm.apply(1, 1)), device(ev.ctm.apply(0, 1))};
    canvas_.fill_polygon({ring}, false, pdf::Rgb{0.85, 0.85, 0.85});
  }

 private:
  void stroke_segment(pdf::Point a, pdf::Point b, double half, const pdf::Rgb& color) {
    double dx = b.x - a.x, dy = b.y - a.y;
    double len = std::hypot(dx, dy);
    if (len == 0) return;
    double nx = -dy / len * half, ny = dx / len * half;
    // Extend along the segment so joins at corners are covered.
    double ex = dx / len * half, ey = dy / len * half;
    std::vector<pdf::Point> quad = {{a.x - ex + nx, a.y - ey + ny},
                                    {b.x + ex + nx, b.y + ey + ny},
                                    {b.x + ex - nx, b.y + ey - ny},
                                    {a.x - ex - nx, a.y - ey - ny}};
    canvas_.fill_polygon({quad}, false, color);
  }

  Canvas& canvas_;
  std::array<double, 4> box_;
  double scale_;
};

void png_write_to_string(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), length);
}

void png_flush_noop(png_structp) {}

}  // namespace

int raster_extent(double pt, double dpi) {
  // The small slack keeps exact products such as 612 * 300 / 72 from
  // rounding up on representation noise.
  return static_cast<int>(std::ceil(pt * dpi / 72.0 - 1e-9));
}

Bitmap BuiltinRenderer::render(const pdf::Document& doc, std::size_t page_index, double dpi) const {
  if (!(dpi > 0)) throw InvalidArgument("dpi must be positive");
  const pdf::PageNode& page = doc.page(page_index);
  const auto& box = page.media_box;
  int w = raster_extent(box[2] - box[0], dpi);
  int h = raster_extent(box[3] - box[1], dpi);
  if (w <= 0 || h <= 0 || static_cast<double>(w) * h > 4e8) {
    throw InvalidArgument("page raster size out of range");
  }
  Canvas canvas(w, h);
  Painter painter(canvas, box, dpi / 72.0);
  pdf::interpret_page(doc, page, painter);
  return canvas.take();
}

const PageRenderer& default_renderer() {
  static const BuiltinRenderer renderer;
  return renderer;
}

std::string encode_png(const Bitmap& bitmap) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error("png_create_info_struct failed");
  }
  std::string out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error("PNG encoding failed");
  }
  png_set_write_fn(png, &out, png_write_to_string, png_flush_noop);
  png_set_IHDR(png, info, bitmap.width, bitmap.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < bitmap.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(bitmap.rgb.data() + static_cast<std::size_t>(y) * bitmap.width * 3));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

}  // namespace pdftables
