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

#include "pdftables/pdf/content.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "pdftables/error.hpp"
#include "pdftables/pdf/font.hpp"
#include "pdftables/pdf/lexer.hpp"

namespace pdftables::pdf {

Matrix Matrix::then(const Matrix& n) const {
  return {a * n.a + b * n.c,       a * n.b + b * n.d,       c * n.a + d * n.c,
          c * n.b + d * n.d,       e * n.a + f * n.c + n.e, e * n.b + f * n.d + n.f};
}

double Matrix::x_scale() const { return std::hypot(a, b); }
double Matrix::y_scale() const { return std::hypot(c, d); }

namespace {

constexpr int kMaxFormDepth = 12;
constexpr int kCurveSteps = 8;

enum class ColorModel { kGray, kRgb, kCmyk, kTint, kOther };

struct GraphicsState {
  Matrix ctm;
  double line_width = 1;
  Rgb stroke_color;
  Rgb fill_color;
  ColorModel stroke_model = ColorModel::kGray;
  ColorModel fill_model = ColorModel::kGray;
  // Text state.
  std::shared_ptr<const Font> font;
  double font_size = 0;
  double char_spacing = 0;
  double word_spacing = 0;
  double horizontal_scale = 1;
  double leading = 0;
  double rise = 0;
  int render_mode = 0;
};

Rgb color_from(const std::vector<double>& v, ColorModel model) {
  auto clamp = [](double x) { return std::clamp(x, 0.0, 1.0); };
  if (model == ColorModel::kTint && v.size() == 1) {
    double g = clamp(1.0 - v[0]);
    return {g, g, g};
  }
  switch (v.size()) {
    case 1:
      return {clamp(v[0]), clamp(v[0]), clamp(v[0])};
    case 3:
      return {clamp(v[0]), clamp(v[1]), clamp(v[2])};
    case 4:
      return {clamp((1 - v[0]) * (1 - v[3])), clamp((1 - v[1]) * (1 - v[3])),
              clamp((1 - v[2]) * (1 - v[3]))};
    default:
      return {0.5, 0.5, 0.5};
  }
}

class Interpreter {
 public:
  Interpreter(const Document& doc, ContentHandler& handler) : doc_(doc), handler_(handler) {}

  void run(std::string_view content, const Object& resources, const Matrix& ctm, int depth) {
    GraphicsState saved_state = state_;
    std::vector<GraphicsState> saved_stack;
    saved_stack.swap(stack_);
    Object saved_resources = resources_;
    auto saved_fonts = std::move(fonts_);
    fonts_.clear();

    resources_ = doc_.resolve(resources);
    state_.ctm = ctm;
    depth_ = depth;
    try {
      execute(content);
    } catch (const Error&) {
      // Damaged content: keep what was reported.
    }

    fonts_ = std::move(saved_fonts);
    resources_ = saved_resources;
    stack_.swap(saved_stack);
    state_ = saved_state;
  }

 private:
  void execute(std::string_view content) {
    Parser parser(content);
    Lexer& lex = parser.lexer();
    std::vector<Object> operands;
    while (true) {
      Token tok = lex.next();
      if (tok.type == Token::Type::kEof) break;
      if (tok.type == Token::Type::kKeyword) {
        if (tok.text == "BI") {
          skip_inline_image(lex);
          operands.clear();
          continue;
        }
        apply(tok.text, operands);
        operands.clear();
        continue;
      }
      operands.push_back(parser.parse_from(std::move(tok), false));
      if (operands.size() > 256) operands.erase(operands.begin());
    }
  }

  void skip_inline_image(Lexer& lex) {
    // Dictionary entries up to ID, then binary data terminated by EI.
    while (true) {
      Token t = lex.next();
      if (t.type == Token::Type::kEof) return;
      if (t.type == Token::Type::kKeyword && t.text == "ID") break;
    }
    std::string_view data = lex.data();
    std::size_t pos = lex.pos() + 1;
    while (pos + 2 <= data.size()) {
      std::size_t found = data.find("EI", pos);
      if (found == std::string_view::npos) {
        pos = data.size();
        break;
      }
      bool before = found == 0 || is_pdf_whitespace(data[found - 1]);
      bool after = found + 2 >= data.size() || is_pdf_whitespace(data[found + 2]) ||
                   is_pdf_delimiter(data[found + 2]);
      pos = found + 2;
      if (before && after) break;
    }
    lex.seek(pos);
    handler_.on_image(ImageEvent{state_.ctm});
  }

  static double num(const std::vector<Object>& ops, std::size_t i) {
    if (i >= ops.size() || !ops[i].is_number()) return 0;
    return ops[i].as_number();
  }

  // Operands are read from the end so stray extra operands are ignored.
  static double arg(const std::vector<Object>& ops, std::size_t n, std::size_t i) {
    if (ops.size() < n) return 0;
    return num(ops, ops.size() - n + i);
  }

  void apply(const std::string& op, const std::vector<Object>& ops) {
    GraphicsState& gs = state_;
    if (op == "q") {
      stack_.push_back(gs);
    } else if (op == "Q") {
      if (!stack_.empty()) {
        state_ = stack_.back();
        stack_.pop_back();
      }
    } else if (op == "cm") {
      Matrix m{arg(ops, 6, 0), arg(ops, 6, 1), arg(ops, 6, 2), arg(ops, 6, 3), arg(ops, 6, 4), arg(ops, 6, 5)};
      gs.ctm = m.then(gs.ctm);
    } else if (op == "w") {
      gs.line_width = arg(ops, 1, 0);
    } else if (op == "gs") {
      apply_ext_gstate(ops);
    } else if (op == "m") {
      path_.emplace_back();
      path_.back().points.push_back(user(arg(ops, 2, 0), arg(ops, 2, 1)));
      current_ = {arg(ops, 2, 0), arg(ops, 2, 1)};
      subpath_start_ = current_;
    } else if (op == "l") {
      line_to(arg(ops, 2, 0), arg(ops, 2, 1));
    } else if (op == "c") {
      curve_to({arg(ops, 6, 0), arg(ops, 6, 1)}, {arg(ops, 6, 2), arg(ops, 6, 3)},
               {arg(ops, 6, 4), arg(ops, 6, 5)});
    } else if (op == "v") {
      curve_to(current_, {arg(ops, 4, 0), arg(ops, 4, 1)}, {arg(ops, 4, 2), arg(ops, 4, 3)});
    } else if (op == "y") {
      Point end{arg(ops, 4, 2), arg(ops, 4, 3)};
      curve_to({arg(ops, 4, 0), arg(ops, 4, 1)}, end, end);
    } else if (op == "h") {
      close_subpath();
    } else if (op == "re") {
      double x = arg(ops, 4, 0), y = arg(ops, 4, 1), w = arg(ops, 4, 2), h = arg(ops, 4, 3);
      path_.emplace_back();
      path_.back().points.push_back(user(x, y));
      current_ = {x, y};
      subpath_start_ = current_;
      line_to(x + w, y);
      line_to(x + w, y + h);
      line_to(x, y + h);
      close_subpath();
      current_ = {x, y};
    } else if (op == "S") {
      paint(true, false, false);
    } else if (op == "s") {
      close_subpath();
      paint(true, false, false);
    } else if (op == "f" || op == "F") {
      paint(false, true, false);
    } else if (op == "f*") {
      paint(false, true, true);
    } else if (op == "B") {
      paint(true, true, false);
    } else if (op == "B*") {
      paint(true, true, true);
    } else if (op == "b") {
      close_subpath();
      paint(true, true, false);
    } else if (op == "b*") {
      close_subpath();
      paint(true, true, true);
    } else if (op == "n") {
      path_.clear();
    } else if (op == "g") {
      gs.fill_model = ColorModel::kGray;
      gs.fill_color = color_from({arg(ops, 1, 0)}, gs.fill_model);
    } else if (op == "G") {
      gs.stroke_model = ColorModel::kGray;
      gs.stroke_color = color_from({arg(ops, 1, 0)}, gs.stroke_model);
    } else if (op == "rg") {
      gs.fill_model = ColorModel::kRgb;
      gs.fill_color = color_from({arg(ops, 3, 0), arg(ops, 3, 1), arg(ops, 3, 2)}, gs.fill_model);
    } else if (op == "RG") {
      gs.stroke_model = ColorModel::kRgb;
      gs.stroke_color = color_from({arg(ops, 3, 0), arg(ops, 3, 1), arg(ops, 3, 2)}, gs.stroke_model);
    } else if (op == "k") {
      gs.fill_model = ColorModel::kCmyk;
      gs.fill_color = color_from({arg(ops, 4, 0), arg(ops, 4, 1), arg(ops, 4, 2), arg(ops, 4, 3)}, gs.fill_model);
    } else if (op == "K") {
      gs.stroke_model = ColorModel::kCmyk;
      gs.stroke_color = color_from({arg(ops, 4, 0), arg(ops, 4, 1), arg(ops, 4, 2), arg(ops, 4, 3)}, gs.stroke_model);
    } else if (op == "cs") {
      gs.fill_model = color_model(ops);
      gs.fill_color = {};
    } else if (op == "CS") {
      gs.stroke_model = color_model(ops);
      gs.stroke_color = {};
    } else if (op == "sc" || op == "scn") {
      gs.fill_color = color_from(numbers(ops), gs.fill_model);
    } else if (op == "SC" || op == "SCN") {
      gs.stroke_color = color_from(numbers(ops), gs.stroke_model);
    } else if (op == "BT") {
      text_matrix_ = Matrix{};
      line_matrix_ = Matrix{};
    } else if (op == "ET") {
      // nothing to flush
    } else if (op == "Tc") {
      gs.char_spacing = arg(ops, 1, 0);
    } else if (op == "Tw") {
      gs.word_spacing = arg(ops, 1, 0);
    } else if (op == "Tz") {
      gs.horizontal_scale = arg(ops, 1, 0) / 100.0;
    } else if (op == "TL") {
      gs.leading = arg(ops, 1, 0);
    } else if (op == "Ts") {
      gs.rise = arg(ops, 1, 0);
    } else if (op == "Tr") {
      gs.render_mode = static_cast<int>(arg(ops, 1, 0));
    } else if (op == "Tf") {
      if (ops.size() >= 2 && ops[ops.size() - 2].is_name()) {
        gs.font = font(ops[ops.size() - 2].as_name());
      }
      gs.font_size = arg(ops, 1, 0);
    } else if (op == "Td") {
      move_text(arg(ops, 2, 0), arg(ops, 2, 1));
    } else if (op == "TD") {
      gs.leading = -arg(ops, 2, 1);
      move_text(arg(ops, 2, 0), arg(ops, 2, 1));
    } else if (op == "Tm") {
      line_matrix_ = Matrix{arg(ops, 6, 0), arg(ops, 6, 1), arg(ops, 6, 2), arg(ops, 6, 3), arg(ops, 6, 4), arg(ops, 6, 5)};
      text_matrix_ = line_matrix_;
    } else if (op == "T*") {
      move_text(0, -gs.leading);
    } else if (op == "Tj") {
      if (!ops.empty() && ops.back().is_string()) show(ops.back().as_string());
    } else if (op == "'") {
      move_text(0, -gs.leading);
      if (!ops.empty() && ops.back().is_string()) show(ops.back().as_string());
    } else if (op == "\"") {
      if (ops.size() >= 3) {
        gs.word_spacing = num(ops, ops.size() - 3);
        gs.char_spacing = num(ops, ops.size() - 2);
      }
      move_text(0, -gs.leading);
      if (!ops.empty() && ops.back().is_string()) show(ops.back().as_string());
    } else if (op == "TJ") {
      if (!ops.empty() && ops.back().is_array()) {
        for (const Object& item : ops.back().as_array()) {
          if (item.is_string()) {
            show(item.as_string());
          } else if (item.is_number()) {
            double tx = -item.as_number() / 1000.0 * gs.font_size * gs.horizontal_scale;
            text_matrix_ = Matrix{1, 0, 0, 1, tx, 0}.then(text_matrix_);
          }
        }
      }
    } else if (op == "Do") {
      if (!ops.empty() && ops.back().is_name()) do_xobject(ops.back().as_name());
    }
  }

  std::vector<double> numbers(const std::vector<Object>& ops) const {
    std::vector<double> v;
    for (const Object& o : ops) {
      if (o.is_number()) v.push_back(o.as_number());
    }
    return v;
  }

  ColorModel color_model(const std::vector<Object>& ops) const {
    if (ops.empty() || !ops.back().is_name()) return ColorModel::kOther;
    const std::string& n = ops.back().as_name();
    if (n == "DeviceGray" || n == "G" || n == "CalGray") return ColorModel::kGray;
    if (n == "DeviceRGB" || n == "RGB" || n == "CalRGB") return ColorModel::kRgb;
    if (n == "DeviceCMYK" || n == "CMYK") return ColorModel::kCmyk;
    Object cs = doc_.resolve(doc_.resolve(resources_.get("ColorSpace")).get(n));
    if (cs.is_array() && !cs.as_array().empty() && cs.as_array()[0].is_name()) {
      const std::string& family = cs.as_array()[0].as_name();
      if (family == "Separation" || family == "DeviceN") return ColorModel::kTint;
      if (family == "ICCBased" && cs.as_array().size() > 1) {
        Object icc = doc_.resolve(cs.as_array()[1]);
        Object comps = doc_.resolve(icc.get("N"));
        if (comps.is_int()) {
          return comps.as_int() == 1 ? ColorModel::kGray
                 : comps.as_int() == 4 ? ColorModel::kCmyk
                                       : ColorModel::kRgb;
        }
      }
      if (family == "CalRGB" || family == "Lab") return ColorModel::kRgb;
      if (family == "CalGray") return ColorModel::kGray;
    }
    return ColorModel::kOther;
  }

  void apply_ext_gstate(const std::vector<Object>& ops) {
    if (ops.empty() || !ops.back().is_name()) return;
    Object egs = doc_.resolve(doc_.resolve(resources_.get("ExtGState")).get(ops.back().as_name()));
    if (!egs.is_dict()) return;
    Object lw = doc_.resolve(egs.get("LW"));
    if (lw.is_number()) state_.line_width = lw.as_number();
    Object f = doc_.resolve(egs.get("Font"));
    if (f.is_array() && f.as_array().size() >= 2) {
      state_.font = Font::load(doc_, f.as_array()[0]);
      Object size = doc_.resolve(f.as_array()[1]);
      if (size.is_number()) state_.font_size = size.as_number();
    }
  }

  std::shared_ptr<const Font> font(const std::string& name) {
    auto it = fonts_.find(name);
    if (it != fonts_.end()) return it->second;
    Object fonts = doc_.resolve(resources_.get("Font"));
    const Object& ref = fonts.get(name);
    std::shared_ptr<const Font> f;
    if (ref.is_ref()) {
      auto cached = font_cache_.find(ref.as_ref().num);
      if (cached != font_cache_.end()) {
        f = cached->second;
      } else {
        f = Font::load(doc_, ref);
        font_cache_[ref.as_ref().num] = f;
      }
    } else {
      f = ref.is_null() ? Font::fallback() : Font::load(doc_, ref);
    }
    fonts_[name] = f;
    return f;
  }

  Point user(double x, double y) const { return state_.ctm.apply(x, y); }

  void line_to(double x, double y) {
    if (path_.empty()) {
      path_.emplace_back();
      path_.back().points.push_back(user(current_.x, current_.y));
      subpath_start_ = current_;
    }
    path_.back().points.push_back(user(x, y));
    path_.back().straight.push_back(true);
    current_ = {x, y};
  }

  void curve_to(Point c1, Point c2, Point end) {
    if (path_.empty()) {
      path_.emplace_back();
      path_.back().points.push_back(user(current_.x, current_.y));
    }
    Point p0 = current_;
    for (int i = 1; i <= kCurveSteps; ++i) {
      double t = static_cast<double>(i) / kCurveSteps;
      double u = 1 - t;
      double x = u * u * u * p0.x + 3 * u * u * t * c1.x + 3 * u * t * t * c2.x + t * t * t * end.x;
      double y = u * u * u * p0.y + 3 * u * u * t * c1.y + 3 * u * t * t * c2.y + t * t * t * end.y;
      path_.back().points.push_back(user(x, y));
      path_.back().straight.push_back(false);
    }
    current_ = end;
  }

  void close_subpath() {
    if (path_.empty()) return;
    Subpath& sp = path_.back();
    if (sp.closed) return;
    sp.closed = true;
    current_ = subpath_start_;
  }

  void paint(bool stroke, bool fill, bool even_odd) {
    if (!path_.empty()) {
      PathEvent ev;
      ev.subpaths = std::move(path_);
      ev.stroke = stroke;
      ev.fill = fill;
      ev.even_odd = even_odd;
      ev.line_width = state_.line_width * std::sqrt(std::abs(state_.ctm.a * state_.ctm.d - state_.ctm.b * state_.ctm.c));
      ev.stroke_color = state_.stroke_color;
      ev.fill_color = state_.fill_color;
      handler_.on_path(ev);
    }
    path_.clear();
  }

  void move_text(double tx, double ty) {
    line_matrix_ = Matrix{1, 0, 0, 1, tx, ty}.then(line_matrix_);
    text_matrix_ = line_matrix_;
  }

  void show(const std::string& bytes) {
    GraphicsState& gs = state_;
    if (!gs.font) gs.font = Font::fallback();
    const Font& font = *gs.font;
    double tfs = gs.font_size;
    double th = gs.horizontal_scale;
    for (const Font::Glyph& g : font.decode(bytes)) {
      Matrix trm = Matrix{tfs * th, 0, 0, tfs, 0, gs.rise}.then(text_matrix_).then(gs.ctm);
      Matrix text_to_user = text_matrix_.then(gs.ctm);
      GlyphEvent ev;
      ev.text = g.text;
      double w = g.width;
      ev.quad = {trm.apply(0, font.descent()), trm.apply(w, font.descent()),
                 trm.apply(w, font.ascent()), trm.apply(0, font.ascent())};
      ev.font_size = std::abs(tfs) * text_to_user.y_scale();
      double space = (font.space_width() * tfs + gs.char_spacing + gs.word_spacing) * th;
      ev.space_width = std::abs(space) * text_to_user.x_scale();
      ev.render_mode = gs.render_mode;
      ev.fill = gs.fill_color;
      handler_.on_glyph(ev);

      bool single_byte_space = g.byte_length == 1 && g.code == 32;
      double tx = (w * tfs + gs.char_spacing + (single_byte_space ? gs.word_spacing : 0)) * th;
      text_matrix_ = Matrix{1, 0, 0, 1, tx, 0}.then(text_matrix_);
    }
  }

  void do_xobject(const std::string& name) {
    Object xobjects = doc_.resolve(resources_.get("XObject"));
    const Object& ref = xobjects.get(name);
    Object xo = doc_.resolve(ref);
    if (!xo.is_stream()) return;
    Object subtype = doc_.resolve(xo.get("Subtype"));
    if (subtype.is_name("Image")) {
      handler_.on_image(ImageEvent{state_.ctm});
      return;
    }
    if (!subtype.is_name("Form") || depth_ >= kMaxFormDepth) return;
    if (ref.is_ref()) {
      for (int active : active_forms_) {
        if (active == ref.as_ref().num) return;
      }
    }
    Matrix m;
    Object mat = doc_.resolve(xo.get("Matrix"));
    if (mat.is_array() && mat.as_array().size() == 6) {
      const Array& a = mat.as_array();
      m = Matrix{a[0].is_number() ? a[0].as_number() : 1, a[1].is_number() ? a[1].as_number() : 0,
                 a[2].is_number() ? a[2].as_number() : 0, a[3].is_number() ? a[3].as_number() : 1,
                 a[4].is_number() ? a[4].as_number() : 0, a[5].is_number() ? a[5].as_number() : 0};
    }
    std::string content;
    try {
      content = doc_.decode(xo.as_stream());
    } catch (const Error&) {
      return;
    }
    Object form_resources = doc_.resolve(xo.get("Resources"));
    if (!form_resources.is_dict()) form_resources = resources_;
    if (ref.is_ref()) active_forms_.push_back(ref.as_ref().num);
    Matrix saved_text = text_matrix_, saved_line = line_matrix_;
    auto saved_path = std::move(path_);
    path_.clear();
    int saved_depth = depth_;
    run(content, form_resources, m.then(state_.ctm), depth_ + 1);
    depth_ = saved_depth;
    path_ = std::move(saved_path);
    text_matrix_ = saved_text;
    line_matrix_ = saved_line;
    if (ref.is_ref()) active_forms_.pop_back();
  }

  const Document& doc_;
  ContentHandler& handler_;
  GraphicsState state_;
  std::vector<GraphicsState> stack_;
  Object resources_;
  std::map<std::string, std::shared_ptr<const Font>> fonts_;
  std::map<int, std::shared_ptr<const Font>> font_cache_;
  std::vector<Subpath> path_;
  Point current_;
  Point subpath_start_;
  Matrix text_matrix_;
  Matrix line_matrix_;
  int depth_ = 0;
  std::vector<int> active_forms_;
};

}  // namespace

void interpret_content(const Document& doc, std::string_view content, const Object& resources,
                       const Matrix& ctm, ContentHandler& handler) {
  Interpreter interp(doc, handler);
  interp.run(content, resources, ctm, 0);
}

void interpret_page(const Document& doc, const PageNode& page, ContentHandler& handler) {
  Object contents = doc.resolve(dict_get(page.dict, "Contents"));
  std::string content;
  auto append = [&](const Object& s) {
    Object stream = doc.resolve(s);
    if (!stream.is_stream()) return;
    try {
      content += doc.decode(stream.as_stream());
    } catch (const Error&) {
      return;
    }
    content.push_back('\n');
  };
  if (contents.is_array()) {
    for (const Object& part : contents.as_array()) append(part);
  } else {
    append(contents);
  }
  interpret_content(doc, content, dict_get(page.dict, "Resources"), Matrix{}, handler);
}

}  // namespace pdftables::pdf
