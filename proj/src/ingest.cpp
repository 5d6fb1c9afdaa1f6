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

#include "pdftables/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "pdftables/download.hpp"
#include "pdftables/error.hpp"
#include "pdftables/geometry.hpp"
#include "pdftables/pdf/content.hpp"
#include "pdftables/pdf/writer.hpp"
#include "pdftables/raster.hpp"
#include "pdftables/stream.hpp"

namespace pdftables {
namespace {

namespace fs = std::filesystem;

// Rulings may be this far off axis before they are ignored.
const double kMaxSkew = std::tan(1.0 * std::numbers::pi / 180.0);
// Filled shapes thinner than this are borders.
constexpr double kThinFill = 2.0;

bool is_blank(const std::string& text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; });
}

class PageCollector : public pdf::ContentHandler {
 public:
  PageCollector(const std::array<double, 4>& box, PageDims dims) : box_(box), dims_(dims) {}

  void on_glyph(const pdf::GlyphEvent& ev) override {
    if (ev.text.empty() || is_blank(ev.text)) return;
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (const pdf::Point& p : ev.quad) {
      pdf::Point q = to_page(p);
      x0 = std::min(x0, q.x);
      x1 = std::max(x1, q.x);
      y0 = std::min(y0, q.y);
      y1 = std::max(y1, q.y);
    }
    if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(y0) || !std::isfinite(y1)) return;
    if (x1 < 0 || y1 < 0 || x0 > dims_.width || y0 > dims_.height) return;
    TextElement el;
    el.bbox = PageRect{std::max(0.0, y0), std::max(0.0, x0), std::min(dims_.height, y1),
                       std::min(dims_.width, x1)};
    el.text = ev.text;
    el.font_size = ev.font_size;
    el.width_of_space = ev.space_width;
    elements.push_back(std::move(el));
  }

  void on_path(const pdf::PathEvent& ev) override {
    for (const pdf::Subpath& sp : ev.subpaths) {
      std::vector<pdf::Point> pts;
      for (const pdf::Point& p : sp.points) pts.push_back(to_page(p));
      if (ev.stroke) {
        std::size_t n = pts.size();
        std::size_t segments = sp.closed ? n : (n == 0 ? 0 : n - 1);
        for (std::size_t i = 0; i < segments; ++i) {
          bool straight = i < sp.straight.size() ? sp.straight[i] : true;
          if (straight) add_segment(pts[i], pts[(i + 1) % n]);
        }
      }
      if (ev.fill && !ev.stroke) add_thin_fill(sp, pts);
    }
  }

  std::vector<TextElement> elements;
  std::vector<Ruling> rulings;

 private:
  pdf::Point to_page(pdf::Point p) const { return {p.x - box_[0], box_[3] - p.y}; }

  void add_segment(pdf::Point a, pdf::Point b) {
    double dx = std::abs(b.x - a.x), dy = std::abs(b.y - a.y);
    if (dx == 0 && dy == 0) return;
    if (dy <= dx * kMaxSkew) {
      add_ruling(Ruling{Orientation::kHorizontal, (a.y + b.y) / 2, std::min(a.x, b.x), std::max(a.x, b.x)});
    } else if (dx <= dy * kMaxSkew) {
      add_ruling(Ruling{Orientation::kVertical, (a.x + b.x) / 2, std::min(a.y, b.y), std::max(a.y, b.y)});
    }
  }

  void add_thin_fill(const pdf::Subpath& sp, const std::vector<pdf::Point>& pts) {
    if (pts.size() < 3) return;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (i < sp.straight.size() && !sp.straight[i]) return;
      double dx = std::abs(pts[i + 1].x - pts[i].x), dy = std::abs(pts[i + 1].y - pts[i].y);
      if (dy > dx * kMaxSkew && dx > dy * kMaxSkew) return;
    }
    double x0 = pts[0].x, x1 = x0, y0 = pts[0].y, y1 = y0;
    for (const pdf::Point& p : pts) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    double w = x1 - x0, h = y1 - y0;
    if (h <= kThinFill && w > h) {
      add_ruling(Ruling{Orientation::kHorizontal, (y0 + y1) / 2, x0, x1});
    } else if (w <= kThinFill && h > w) {
      add_ruling(Ruling{Orientation::kVertical, (x0 + x1) / 2, y0, y1});
    }
  }

  void add_ruling(Ruling r) {
    double pos_limit = r.horizontal() ? dims_.height : dims_.width;
    double span_limit = r.horizontal() ? dims_.width : dims_.height;
    if (!std::isfinite(r.position) || r.position < 0 || r.position > pos_limit) return;
    r.start = std::max(0.0, r.start);
    r.end = std::min(span_limit, r.end);
    if (!(r.end > r.start)) return;
    rulings.push_back(r);
  }

  std::array<double, 4> box_;
  PageDims dims_;
};

const pdf::PageNode& page_node(const DocumentHandle& doc, int page) {
  check_pages(doc, {page});
  return doc.pdf->page(static_cast<std::size_t>(page - 1));
}

std::vector<int> resolve_pages(const DocumentHandle& doc, const std::optional<std::vector<int>>& pages) {
  std::vector<int> out;
  if (pages) {
    check_pages(doc, *pages);
    out = *pages;
  } else {
    for (int p = 1; p <= doc.n_pages; ++p) out.push_back(p);
  }
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory " + dir.string());
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

std::optional<std::string> info_string(const pdf::Document& pdf, const pdf::Object& info, std::string_view key) {
  pdf::Object v = pdf.resolve(info.get(key));
  if (!v.is_string()) return std::nullopt;
  return pdf::text_string_to_utf8(v.as_string());
}

}  // namespace

void check_pages(const DocumentHandle& doc, const std::vector<int>& pages) {
  for (int p : pages) {
    if (p < 1 || p > doc.n_pages) {
      throw PageRangeError("page " + std::to_string(p) + " is out of range (document has " +
                           std::to_string(doc.n_pages) + " pages)");
    }
  }
}

DocumentHandle open_document(const std::string& source, const std::string& password) {
  DocumentHandle doc;
  doc.source = source;
  if (is_url(source)) {
    doc.local_path = fetch_url(source);
  } else {
    doc.local_path = source;
    std::error_code ec;
    if (!fs::is_regular_file(doc.local_path, ec)) throw IoError("cannot read " + source);
  }
  doc.pdf = pdf::Document::open_file(doc.local_path, password);
  doc.n_pages = static_cast<int>(doc.pdf->page_count());
  for (const pdf::PageNode& page : doc.pdf->pages()) {
    const auto& b = page.media_box;
    doc.page_dims.push_back(PageDims{std::abs(b[2] - b[0]), std::abs(b[3] - b[1])});
  }
  return doc;
}

int get_n_pages(const DocumentHandle& doc) { return doc.n_pages; }

std::vector<PageDims> get_page_dims(const DocumentHandle& doc, const std::optional<std::vector<int>>& pages) {
  std::vector<PageDims> out;
  for (int p : resolve_pages(doc, pages)) out.push_back(doc.page_dims[static_cast<std::size_t>(p - 1)]);
  return out;
}

PageContent read_page_content(const DocumentHandle& doc, int page) {
  const pdf::PageNode& node = page_node(doc, page);
  PageContent content;
  content.page = page;
  content.dims = doc.page_dims[static_cast<std::size_t>(page - 1)];
  std::array<double, 4> box = node.media_box;
  if (box[0] > box[2]) std::swap(box[0], box[2]);
  if (box[1] > box[3]) std::swap(box[1], box[3]);
  PageCollector collector(box, content.dims);
  pdf::interpret_page(*doc.pdf, node, collector);
  content.elements = std::move(collector.elements);
  content.rulings = std::move(collector.rulings);
  return content;
}

std::vector<std::string> extract_text(const DocumentHandle& doc, const std::optional<std::vector<int>>& pages,
                                      const std::optional<std::vector<PageRect>>& area) {
  std::vector<int> list = resolve_pages(doc, pages);
  if (area && area->size() != list.size()) {
    throw InvalidArgument("area list must have one entry per requested page");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    PageContent content = read_page_content(doc, list[i]);
    std::vector<TextChunk> chunks = merge_words(content.elements);
    if (area) {
      const PageRect& r = (*area)[i];
      if (!r.valid()) throw InvalidArgument("area must satisfy 0 <= top <= bottom and 0 <= left <= right");
      std::erase_if(chunks, [&](const TextChunk& c) { return !r.contains(c.bbox.mid_x(), c.bbox.mid_y()); });
    }
    std::string text;
    for (const auto& band :
         group_into_bands(chunks, [](const TextChunk& c) -> const PageRect& { return c.bbox; })) {
      if (!text.empty()) text.push_back('\n');
      bool first = true;
      for (std::size_t idx : band) {
        if (!first) text.push_back(' ');
        first = false;
        text += chunks[idx].text;
      }
    }
    out.push_back(std::move(text));
  }
  return out;
}

std::optional<std::string> pdf_date_to_iso(const std::string& value) {
  std::string s = value;
  if (s.rfind("D:", 0) == 0) s = s.substr(2);
  auto digits = [&](std::size_t pos, std::size_t n) -> std::optional<int> {
    if (pos + n > s.size()) return std::nullopt;
    int v = 0;
    for (std::size_t i = pos; i < pos + n; ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };
  auto year = digits(0, 4);
  if (!year) return std::nullopt;
  int fields[5] = {1, 1, 0, 0, 0};  // month, day, hour, minute, second
  std::size_t pos = 4;
  for (int& f : fields) {
    auto v = digits(pos, 2);
    if (!v) break;
    f = *v;
    pos += 2;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", *year, fields[0], fields[1], fields[2],
                fields[3], fields[4]);
  std::string out = buf;
  if (pos < s.size()) {
    char sign = s[pos];
    if (sign == 'Z') {
      out += "Z";
    } else if (sign == '+' || sign == '-') {
      auto oh = digits(pos + 1, 2);
      std::size_t mpos = pos + 3;
      if (mpos < s.size() && s[mpos] == '\'') ++mpos;
      auto om = digits(mpos, 2);
      if (oh) {
        std::snprintf(buf, sizeof buf, "%c%02d:%02d", sign, *oh, om.value_or(0));
        out += buf;
      }
    }
  }
  return out;
}

Metadata extract_metadata(const DocumentHandle& doc) {
  Metadata meta;
  meta.n_pages = doc.n_pages;
  pdf::Object info = doc.pdf->info();
  if (!info.is_dict()) return meta;
  const pdf::Document& pdf = *doc.pdf;
  meta.title = info_string(pdf, info, "Title");
  meta.author = info_string(pdf, info, "Author");
  meta.subject = info_string(pdf, info, "Subject");
  meta.keywords = info_string(pdf, info, "Keywords");
  meta.creator = info_string(pdf, info, "Creator");
  meta.producer = info_string(pdf, info, "Producer");
  if (auto d = info_string(pdf, info, "CreationDate")) meta.created = pdf_date_to_iso(*d);
  if (auto d = info_string(pdf, info, "ModDate")) meta.modified = pdf_date_to_iso(*d);
  return meta;
}

std::string source_stem(const DocumentHandle& doc) {
  std::string name;
  if (is_url(doc.source)) {
    std::string path = doc.source.substr(0, doc.source.find_first_of("?#"));
    std::size_t scheme = path.find("://");
    std::size_t slash = path.find_last_of('/');
    if (slash != std::string::npos && slash > scheme + 2) name = path.substr(slash + 1);
  } else {
    name = fs::path(doc.source).filename().string();
  }
  std::string stem = fs::path(name).stem().string();
  return stem.empty() ? "document" : stem;
}

std::vector<fs::path> make_thumbnails(const DocumentHandle& doc, const std::optional<std::vector<int>>& pages,
                                      double dpi, const fs::path& out_dir) {
  if (!(dpi > 0)) throw InvalidArgument("dpi must be positive");
  std::vector<int> list = resolve_pages(doc, pages);
  ensure_dir(out_dir);
  std::vector<fs::path> out;
  std::string stem = source_stem(doc);
  for (int p : list) {
    Bitmap bmp = default_renderer().render(*doc.pdf, static_cast<std::size_t>(p - 1), dpi);
    fs::path path = out_dir / (stem + "-" + std::to_string(p) + ".png");
    write_file(path, encode_png(bmp));
    out.push_back(path);
  }
  return out;
}

std::vector<fs::path> split_pdf(const DocumentHandle& doc, const fs::path& out_dir) {
  ensure_dir(out_dir);
  std::vector<fs::path> out;
  std::string stem = source_stem(doc);
  for (int p = 1; p <= doc.n_pages; ++p) {
    std::string bytes = pdf::build_document({pdf::PageSource{doc.pdf, static_cast<std::size_t>(p - 1)}});
    fs::path path = out_dir / (stem + "-" + std::to_string(p) + ".pdf");
    write_file(path, bytes);
    out.push_back(path);
  }
  return out;
}

DocumentHandle merge_pdfs(const std::vector<std::string>& sources, const fs::path& out_path) {
  if (sources.empty()) throw InvalidArgument("merge needs at least one source");
  std::vector<DocumentHandle> docs;
  for (const std::string& s : sources) docs.push_back(open_document(s));
  std::vector<pdf::PageSource> pages;
  for (const DocumentHandle& d : docs) {
    for (std::size_t i = 0; i < d.pdf->page_count(); ++i) pages.push_back({d.pdf, i});
  }
  if (out_path.has_parent_path()) ensure_dir(out_path.parent_path());
  write_file(out_path, pdf::build_document(pages));
  return open_document(out_path.string());
}

}  // namespace pdftables
