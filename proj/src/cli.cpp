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

#include "pdftables/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <optional>

#include <json.hpp>

#include "pdftables/error.hpp"
#include "pdftables/extract.hpp"
#include "pdftables/ingest.hpp"
#include "pdftables/service.hpp"
#include "pdftables/typed.hpp"

namespace pdftables {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Signals a usage problem found after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw UsageError("invalid number '" + text + "' in " + what);
  }
  return v;
}

PageRect parse_area(const std::string& text) {
  std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("--area expects T,L,B,R, got '" + text + "'");
  PageRect r{parse_double(parts[0], "--area"), parse_double(parts[1], "--area"), parse_double(parts[2], "--area"),
             parse_double(parts[3], "--area")};
  if (!r.valid()) throw UsageError("--area needs 0 <= top <= bottom and 0 <= left <= right");
  return r;
}

std::optional<std::vector<int>> collect_pages(const std::vector<std::string>& values) {
  if (values.empty()) return std::nullopt;
  std::vector<int> pages;
  for (const std::string& v : values) {
    for (int p : parse_page_list(v)) pages.push_back(p);
  }
  return pages;
}

std::string format_number(double v) { return json(std::nearbyint(v) == v && std::abs(v) < 1e15
                                                      ? json(static_cast<std::int64_t>(v))
                                                      : json(v))
                                           .dump(); }

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  f.close();
  if (!f) throw IoError("cannot write " + path.string());
}

struct CommonArgs {
  std::string source;
  std::string password;
  std::vector<std::string> pages;
};

void add_source(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("source", a.source, "PDF path or http(s) URL")->required();
  cmd->add_option("--password", a.password, "Password for encrypted documents");
}

void add_pages(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--pages", a.pages, "Pages, e.g. 2, 1-3 or 1,4 (repeatable)")->allow_extra_args(false);
}

}  // namespace

std::vector<int> parse_page_list(const std::string& text) {
  std::vector<int> pages;
  for (const std::string& raw : split(text, ',')) {
    std::string part = trim(raw);
    auto parse_int = [&](const std::string& s) {
      std::string t = trim(s);
      int v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw InvalidArgument("invalid page list '" + text + "'");
      }
      return v;
    };
    std::size_t dash = part.find('-', 1);
    if (dash == std::string::npos) {
      pages.push_back(parse_int(part));
    } else {
      int a = parse_int(part.substr(0, dash));
      int b = parse_int(part.substr(dash + 1));
      if (b < a) throw InvalidArgument("descending page range '" + part + "'");
      if (b - a > 100000) throw InvalidArgument("page range too long '" + part + "'");
      for (int p = a; p <= b; ++p) pages.push_back(p);
    }
  }
  for (int p : pages) {
    if (p < 1) throw InvalidArgument("page numbers start at 1");
  }
  return pages;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extract tables and text from PDF files", "pdftables"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // extract
  CommonArgs ex;
  std::vector<std::string> ex_areas;
  std::string ex_columns, ex_method = "decide", ex_format = "csv", ex_out = ".";
  bool ex_no_guess = false, ex_no_col_names = false;
  CLI::App* extract = app.add_subcommand("extract", "Extract tables");
  add_source(extract, ex);
  add_pages(extract, ex);
  extract->add_option("--area", ex_areas, "Area T,L,B,R in points (repeatable, pairs with --pages)")
      ->allow_extra_args(false);
  CLI::Option* columns_opt =
      extract->add_option("--columns", ex_columns, "Column separators X1,X2,... in points (stream)");
  CLI::Option* method_opt =
      extract->add_option("--method", ex_method, "lattice, stream or decide")->check(
          CLI::IsMember({"lattice", "stream", "decide"}));
  extract->add_flag("--no-guess", ex_no_guess, "Disable table detection");
  extract->add_flag("--no-col-names", ex_no_col_names, "Treat the first row as data; name columns X1..Xn");
  extract->add_option("--format", ex_format, "csv, tsv or json")->check(CLI::IsMember({"csv", "tsv", "json"}));
  extract->add_option("--out", ex_out, "Output directory, or - for stdout");

  // text
  CommonArgs tx;
  std::vector<std::string> tx_areas;
  CLI::App* text = app.add_subcommand("text", "Print page text");
  add_source(text, tx);
  add_pages(text, tx);
  text->add_option("--area", tx_areas, "Area T,L,B,R (one per requested page)")->allow_extra_args(false);

  CommonArgs mt;
  CLI::App* meta = app.add_subcommand("meta", "Print document metadata as JSON");
  add_source(meta, mt);

  CommonArgs pg;
  CLI::App* pages = app.add_subcommand("pages", "Print the page count");
  add_source(pages, pg);

  CommonArgs dm;
  CLI::App* dims = app.add_subcommand("dims", "Print page width and height in points");
  add_source(dims, dm);
  add_pages(dims, dm);

  CommonArgs th;
  double th_dpi = 72;
  std::string th_out = ".";
  CLI::App* thumbs = app.add_subcommand("thumbnails", "Render pages to PNG");
  add_source(thumbs, th);
  add_pages(thumbs, th);
  thumbs->add_option("--dpi", th_dpi, "Resolution")->check(CLI::PositiveNumber);
  thumbs->add_option("--out", th_out, "Output directory");

  CommonArgs sp;
  std::string sp_out = ".";
  CLI::App* splitc = app.add_subcommand("split", "Write one PDF per page");
  add_source(splitc, sp);
  splitc->add_option("--out", sp_out, "Output directory");

  std::vector<std::string> mg_sources;
  std::string mg_out;
  CLI::App* merge = app.add_subcommand("merge", "Concatenate PDFs");
  merge->add_option("sources", mg_sources, "Input PDFs in order")->required();
  merge->add_option("--out", mg_out, "Output file")->required();

  CommonArgs sv;
  int sv_port = 8080;
  std::string sv_host = "127.0.0.1", sv_ui;
  CLI::App* serve = app.add_subcommand("serve", "Run the area picker service");
  add_source(serve, sv);
  serve->add_option("--port", sv_port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", sv_host, "Bind address");
  serve->add_option("--ui-dir", sv_ui, "Serve this directory at / instead of the built-in page");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (extract->parsed()) {
      ExtractionOptions opts;
      opts.pages = collect_pages(ex.pages);
      opts.guess = !ex_no_guess;
      opts.col_names = !ex_no_col_names;
      opts.method = parse_method(ex_method);
      if (!ex_areas.empty()) {
        if (opts.guess) throw UsageError("--area requires --no-guess");
        std::vector<PageRect> areas;
        for (const std::string& a : ex_areas) areas.push_back(parse_area(a));
        if (opts.pages && opts.pages->size() != areas.size()) {
          throw UsageError("each --area needs a matching page in --pages (got " +
                           std::to_string(opts.pages->size()) + " pages and " + std::to_string(areas.size()) +
                           " areas)");
        }
        opts.area = std::move(areas);
      }
      if (columns_opt->count() > 0) {
        if (method_opt->count() == 0) opts.method = Method::kStream;
        if (opts.method != Method::kStream) throw UsageError("--columns requires --method stream");
        std::vector<double> cols;
        for (const std::string& c : split(ex_columns, ',')) cols.push_back(parse_double(c, "--columns"));
        opts.columns = std::move(cols);
      }
      Format format = parse_format(ex_format);

      DocumentHandle doc = open_document(ex.source, ex.password);
      std::vector<RawTable> tables = extract_tables(doc, opts);
      if (tables.empty()) {
        err << "pdftables: no tables found\n";
        return kExitNoTables;
      }
      std::string stem = source_stem(doc);
      std::map<int, int> per_page;
      bool to_stdout = ex_out == "-";
      if (!to_stdout) {
        std::error_code ec;
        fs::create_directories(ex_out, ec);
        if (!fs::is_directory(ex_out)) throw IoError("cannot create directory " + ex_out);
      }
      bool first = true;
      for (const RawTable& t : tables) {
        int index = ++per_page[t.page];
        std::string body = write_table(make_typed(t, opts.col_names), format);
        if (to_stdout) {
          if (!first && format != Format::kJson) out << '\n';
          out << body;
        } else {
          fs::path path = fs::path(ex_out) / (stem + "-p" + std::to_string(t.page) + "-t" + std::to_string(index) +
                                              "." + std::string(format_extension(format)));
          write_file(path, body);
          out << path.string() << '\n';
        }
        first = false;
      }
      return kExitOk;
    }
    if (text->parsed()) {
      DocumentHandle doc = open_document(tx.source, tx.password);
      std::optional<std::vector<PageRect>> areas;
      if (!tx_areas.empty()) {
        areas.emplace();
        for (const std::string& a : tx_areas) areas->push_back(parse_area(a));
      }
      std::vector<std::string> texts = extract_text(doc, collect_pages(tx.pages), areas);
      for (std::size_t i = 0; i < texts.size(); ++i) {
        if (i > 0) out << '\f';
        out << texts[i] << '\n';
      }
      return kExitOk;
    }
    if (meta->parsed()) {
      DocumentHandle doc = open_document(mt.source, mt.password);
      Metadata m = extract_metadata(doc);
      json j = json::object();
      auto put = [&](const char* key, const std::optional<std::string>& v) {
        j[key] = v ? json(*v) : json(nullptr);
      };
      put("title", m.title);
      put("author", m.author);
      put("subject", m.subject);
      put("keywords", m.keywords);
      put("creator", m.creator);
      put("producer", m.producer);
      put("created", m.created);
      put("modified", m.modified);
      j["n_pages"] = m.n_pages;
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (pages->parsed()) {
      DocumentHandle doc = open_document(pg.source, pg.password);
      out << get_n_pages(doc) << '\n';
      return kExitOk;
    }
    if (dims->parsed()) {
      DocumentHandle doc = open_document(dm.source, dm.password);
      for (const PageDims& d : get_page_dims(doc, collect_pages(dm.pages))) {
        out << format_number(d.width) << ' ' << format_number(d.height) << '\n';
      }
      return kExitOk;
    }
    if (thumbs->parsed()) {
      DocumentHandle doc = open_document(th.source, th.password);
      for (const fs::path& p : make_thumbnails(doc, collect_pages(th.pages), th_dpi, th_out)) {
        out << p.string() << '\n';
      }
      return kExitOk;
    }
    if (splitc->parsed()) {
      DocumentHandle doc = open_document(sp.source, sp.password);
      for (const fs::path& p : split_pdf(doc, sp_out)) out << p.string() << '\n';
      return kExitOk;
    }
    if (merge->parsed()) {
      DocumentHandle doc = merge_pdfs(mg_sources, mg_out);
      out << doc.local_path.string() << '\n';
      return kExitOk;
    }
    if (serve->parsed()) {
      ServiceOptions so;
      so.host = sv_host;
      so.port = sv_port;
      if (!sv_ui.empty()) so.ui_dir = sv_ui;
      PickerService service(open_document(sv.source, sv.password), so);
      int port = service.bind();
      out << "serving " << sv.source << " on http://" << sv_host << ':' << port << '/' << std::endl;
      service.run();
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "pdftables: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "pdftables: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PageRangeError& e) {
    err << "pdftables: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "pdftables: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "pdftables: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace pdftables
